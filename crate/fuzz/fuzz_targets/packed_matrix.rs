#![no_main]

use boson_hopf::diag::{canonicalize, pack, parse_matrix, PackedMatrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(raw) = parse_matrix(data) {
        if let Ok(m) = pack(&raw) {
            assert_eq!(PackedMatrix::parse(&m.to_text()).unwrap(), m);
            // canonicalization enumerates permutations of the shorter side
            if m.rows().min(m.cols()) <= 6 {
                let d = canonicalize(&m);
                assert_eq!(canonicalize(d.representative()), d);
            }
        }
    }
});
