#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(plane) = entc::netpbm::parse_pgm(data) {
        let again = entc::netpbm::parse_pgm(&entc::netpbm::write_pgm(&plane)).unwrap();
        assert_eq!(plane, again);
    }
});
