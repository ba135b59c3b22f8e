#![no_main]

use boson_hopf::partitions::PartitionType;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(t) = PartitionType::parse(data) {
        assert_eq!(PartitionType::parse(&t.to_string()).unwrap(), t);
    }
});
