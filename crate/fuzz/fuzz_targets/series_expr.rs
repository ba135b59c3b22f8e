#![no_main]

use boson_hopf::egf::{parse_series, Egf};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if data.len() > 256 {
        return;
    }
    if let Ok(f) = parse_series(data, 6) {
        assert_eq!(Egf::from_json(&f.to_json()).unwrap(), f);
    }
});
