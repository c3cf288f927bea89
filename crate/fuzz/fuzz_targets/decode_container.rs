#![no_main]

use entc::codec::decode_container;
use entc::container::Container;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(c) = Container::from_bytes(data) else { return };
    // keep single runs short; the bound itself is checked by the decoder
    if c.symbol_count() > 1 << 20 {
        return;
    }
    if let Ok(plane) = decode_container(&c) {
        assert_eq!((plane.width(), plane.height()), (c.width() as usize, c.height() as usize));
    }
});
