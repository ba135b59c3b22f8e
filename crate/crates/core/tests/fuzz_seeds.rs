//! Replays the checked-in fuzz corpus through every parser.

use std::path::Path;

use boson_hopf::diag::{element_from_json, parse_matrix, tensor_from_json, PackedMatrix};
use boson_hopf::egf::{parse_series, Egf, RowFiniteMatrix};
use boson_hopf::partitions::{parse_ordered_partition, parse_set_partition, PartitionType};
use boson_hopf::weyl::{parse_element, parse_normal_form_lines, parse_word};

fn seeds() -> Vec<(String, String)> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus");
    let mut out = Vec::new();
    for target in std::fs::read_dir(&root).expect("fuzz corpus is checked in") {
        let target = target.unwrap();
        for seed in std::fs::read_dir(target.path()).unwrap() {
            let path = seed.unwrap().path();
            let text = std::fs::read_to_string(&path).unwrap();
            out.push((target.file_name().to_string_lossy().into_owned(), text));
        }
    }
    out.sort();
    out
}

#[test]
fn every_target_has_seeds_that_parse() {
    let seeds = seeds();
    let targets = [
        "element_json",
        "matrix_csv",
        "normal_form_lines",
        "packed_matrix",
        "partition",
        "partition_type",
        "series_expr",
        "series_json",
        "weyl_element",
        "weyl_word",
    ];
    for t in targets {
        let accepted = seeds
            .iter()
            .filter(|(name, _)| name == t)
            .filter(|(_, text)| match t {
                "element_json" => {
                    element_from_json::<PackedMatrix>(text).is_ok()
                        || tensor_from_json::<PackedMatrix>(text).is_ok()
                }
                "matrix_csv" => RowFiniteMatrix::from_csv(text).is_ok(),
                "normal_form_lines" => parse_normal_form_lines(text).is_ok(),
                "packed_matrix" => parse_matrix(text).is_ok(),
                "partition" => parse_set_partition(text).is_ok(),
                "partition_type" => PartitionType::parse(text).is_ok(),
                "series_expr" => parse_series(text, 6).is_ok(),
                "series_json" => Egf::from_json(text).is_ok(),
                "weyl_element" => parse_element(text).is_ok(),
                "weyl_word" => parse_word(text).is_ok(),
                _ => unreachable!(),
            })
            .count();
        assert!(accepted > 0, "no accepted seed for {t}");
    }
}

#[test]
fn all_parsers_survive_all_seeds() {
    for (_, text) in seeds() {
        let _ = parse_word(&text);
        let _ = parse_element(&text);
        let _ = parse_normal_form_lines(&text);
        let _ = parse_series(&text, 6);
        let _ = Egf::from_json(&text);
        let _ = RowFiniteMatrix::from_csv(&text);
        let _ = parse_set_partition(&text);
        let _ = parse_ordered_partition(&text);
        let _ = PartitionType::parse(&text);
        let _ = parse_matrix(&text);
        let _ = PackedMatrix::parse(&text);
        let _ = element_from_json::<PackedMatrix>(&text);
        let _ = tensor_from_json::<PackedMatrix>(&text);
    }
}
