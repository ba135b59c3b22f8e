#![no_main]

use boson_hopf::partitions::{parse_ordered_partition, parse_set_partition};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(p) = parse_set_partition(data) {
        assert_eq!(parse_set_partition(&p.to_string()).unwrap(), p);
    }
    if let Ok(p) = parse_ordered_partition(data) {
        assert_eq!(parse_ordered_partition(&p.to_string()).unwrap(), p);
    }
});
