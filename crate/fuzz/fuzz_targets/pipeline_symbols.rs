#![no_main]

use entc::pipeline::symbols_to_plane;
use libfuzzer_sys::fuzz_target;

// First two bytes pick the plane size, the rest are big-endian symbols.
fuzz_target!(|data: &[u8]| {
    if data.len() < 2 {
        return;
    }
    let (w, h) = (data[0] as usize % 64 + 1, data[1] as usize % 64 + 1);
    let symbols: Vec<u16> = data[2..]
        .chunks_exact(2)
        .map(|c| u16::from_be_bytes([c[0], c[1]]))
        .collect();
    if let Ok(plane) = symbols_to_plane(&symbols, w, h) {
        assert_eq!((plane.width(), plane.height()), (w, h));
    }
});
