#![no_main]

use boson_hopf::diag::{
    element_from_json, element_to_json, tensor_from_json, tensor_to_json, PackedMatrix,
};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(x) = element_from_json::<PackedMatrix>(data) {
        assert_eq!(element_from_json::<PackedMatrix>(&element_to_json(&x)).unwrap(), x);
    }
    if let Ok(t) = tensor_from_json::<PackedMatrix>(data) {
        assert_eq!(tensor_from_json::<PackedMatrix>(&tensor_to_json(&t)).unwrap(), t);
    }
});
