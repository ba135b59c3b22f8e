#![no_main]

use boson_hopf::weyl::parse_normal_form_lines;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(nf) = parse_normal_form_lines(data) {
        assert_eq!(parse_normal_form_lines(&nf.to_lines()).unwrap(), nf);
    }
});
