#![no_main]

use entc::container::Container;
use libfuzzer_sys::fuzz_target;

// Anything that parses must serialize back to the same bytes.
fuzz_target!(|data: &[u8]| {
    if let Ok(c) = Container::from_bytes(data) {
        assert_eq!(c.to_bytes(), data);
    }
});
