#![no_main]

use boson_hopf::egf::RowFiniteMatrix;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(m) = RowFiniteMatrix::from_csv(data) {
        assert_eq!(RowFiniteMatrix::from_csv(&m.to_csv()).unwrap(), m);
    }
});
