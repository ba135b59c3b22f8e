#![no_main]

use boson_hopf::egf::Egf;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(f) = Egf::from_json(data) {
        assert_eq!(Egf::from_json(&f.to_json()).unwrap(), f);
    }
});
