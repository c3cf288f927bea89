#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(planes) = entc::netpbm::parse_ppm(data) {
        let bytes = entc::netpbm::write_ppm(&planes).unwrap();
        assert_eq!(entc::netpbm::parse_ppm(&bytes).unwrap(), planes);
    }
});
