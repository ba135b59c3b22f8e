#![no_main]

use boson_hopf::weyl::parse_word;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(w) = parse_word(data) {
        assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }
});
