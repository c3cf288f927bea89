/// `out[0] = dc[0]`, `out[i] = dc[i] - dc[i-1]`.
pub fn dpcm_encode(dc: &[i32]) -> Vec<i32> {
    let mut prev = 0;
    dc.iter()
        .map(|&v| {
            let d = v - prev;
            prev = v;
            d
        })
        .collect()
}

pub fn dpcm_decode(diffs: &[i32]) -> Vec<i32> {
    diffs
        .iter()
        .scan(0i32, |acc, &d| {
            *acc = acc.wrapping_add(d);
            Some(*acc)
        })
        .collect()
}
