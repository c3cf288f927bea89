#![no_main]

use entc::bitio::BitSequence;
use entc::codec::{entropy_decode, entropy_encode, Codec};
use entc::FrequencyTable;
use libfuzzer_sys::fuzz_target;

// Layout: codec byte, count byte, n = entry byte, n entries of (symbol, count)
// as single bytes, then the payload.
fuzz_target!(|data: &[u8]| {
    let [codec, count, n, rest @ ..] = data else { return };
    let codec = if codec & 1 == 0 { Codec::Huffman } else { Codec::Arithmetic };
    let n = *n as usize % 32 + 1;
    if rest.len() < 2 * n {
        return;
    }
    let (entries, payload) = rest.split_at(2 * n);
    let pairs = entries.chunks_exact(2).map(|e| (e[0] as u16, e[1] as u64 + 1));
    let Ok(table) = FrequencyTable::from_counts(pairs) else { return };
    let bits = BitSequence::from_bits(payload.iter().flat_map(|b| (0..8).rev().map(move |i| b >> i & 1 == 1)));
    if let Ok(symbols) = entropy_decode(codec, &table, &bits, *count as u64) {
        assert_eq!(symbols.len(), *count as usize);
        // a fresh encode of what came out must round-trip
        if let Ok(enc) = entropy_encode(codec, &symbols) {
            let again = entropy_decode(codec, &enc.table, &enc.payload, symbols.len() as u64).unwrap();
            assert_eq!(again, symbols);
        }
    }
});
