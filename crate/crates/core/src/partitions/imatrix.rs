use std::collections::BTreeSet;

use super::enumerate::next_permutation;
use super::{OrderedSetPartition, SetPartition};
use crate::diag::PackedMatrix;
use crate::{Error, Result};

/// Largest number of (ordering of `q1`) × (ordering of `q2`) pairs
/// [`matrix_class`] will walk through.
const MAX_PREIMAGE_PAIRS: usize = 2_000_000;

/// `IM_o(P¹, P²)[i][j] = |B¹ᵢ ∩ B²ⱼ|`; always packed since blocks are nonempty.
pub fn intersection_matrix(
    p1: &OrderedSetPartition,
    p2: &OrderedSetPartition,
) -> Result<PackedMatrix> {
    if p1.ground_size() != p2.ground_size() {
        return Err(Error::GroundSetMismatch {
            left: p1.ground_size(),
            right: p2.ground_size(),
        });
    }
    let n = p1.ground_size();
    let mut column_of = vec![0usize; n + 1];
    for (j, b) in p2.blocks().iter().enumerate() {
        for &e in b {
            column_of[e] = j;
        }
    }
    let (rows, cols) = (p1.block_count(), p2.block_count());
    let mut entries = vec![0u32; rows * cols];
    for (i, b) in p1.blocks().iter().enumerate() {
        for &e in b {
            entries[i * cols + column_of[e]] += 1;
        }
    }
    Ok(PackedMatrix::new(rows, cols, entries).expect("intersection matrices are packed"))
}

/// Every ordering of the blocks of `q`, in lexicographic order of block indices.
pub fn ordered_preimages(q: &SetPartition) -> Vec<OrderedSetPartition> {
    let mut perm: Vec<usize> = (0..q.block_count()).collect();
    let mut out = Vec::new();
    loop {
        let blocks = perm.iter().map(|&i| q.blocks()[i].clone()).collect();
        out.push(OrderedSetPartition::from_sorted(q.ground_size(), blocks));
        if !next_permutation(&mut perm) {
            return out;
        }
    }
}

/// `{IM_o(P¹, P²) : Φ(P¹) = q1, Φ(P²) = q2}`, the class of matrices attached
/// to a pair of unordered partitions.
pub fn matrix_class(q1: &SetPartition, q2: &SetPartition) -> Result<BTreeSet<PackedMatrix>> {
    if q1.ground_size() != q2.ground_size() {
        return Err(Error::GroundSetMismatch {
            left: q1.ground_size(),
            right: q2.ground_size(),
        });
    }
    let fact = |k: usize| (1..=k).try_fold(1usize, |a, b| a.checked_mul(b));
    let pairs = fact(q1.block_count())
        .zip(fact(q2.block_count()))
        .and_then(|(a, b)| a.checked_mul(b))
        .unwrap_or(usize::MAX);
    if pairs > MAX_PREIMAGE_PAIRS {
        return Err(Error::BoundExceeded {
            what: "ordered preimage pairs",
            requested: pairs,
            bound: MAX_PREIMAGE_PAIRS,
        });
    }
    let (left, right) = (ordered_preimages(q1), ordered_preimages(q2));
    let mut out = BTreeSet::new();
    for p1 in &left {
        for p2 in &right {
            out.insert(intersection_matrix(p1, p2)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{
        enumerate_ordered_partitions, enumerate_partitions, parse_ordered_partition,
        parse_set_partition,
    };

    fn m(text: &str) -> PackedMatrix {
        PackedMatrix::parse(text).unwrap()
    }

    #[test]
    fn displayed_example() {
        let p1 = parse_ordered_partition("{1,2,5}{3,4,6}").unwrap();
        let p2 = parse_ordered_partition("{1,2}{3,4}{5,6}").unwrap();
        assert_eq!(intersection_matrix(&p1, &p2).unwrap(), m("2 0 1;0 2 1"));
    }

    #[test]
    fn class_of_displayed_example() {
        let q1 = parse_set_partition("{1,2,5}{3,4,6}").unwrap();
        let q2 = parse_set_partition("{1,2}{3,4}{5,6}").unwrap();
        assert_eq!(
            ordered_preimages(&q1).len() * ordered_preimages(&q2).len(),
            12
        );
        let class = matrix_class(&q1, &q2).unwrap();
        let expected: BTreeSet<PackedMatrix> = [
            "2 0 1;0 2 1",
            "2 1 0;0 1 2",
            "1 2 0;1 0 2",
            "0 2 1;2 0 1",
            "0 1 2;2 1 0",
            "1 0 2;1 2 0",
        ]
        .iter()
        .map(|t| m(t))
        .collect();
        assert_eq!(class, expected);
    }

    #[test]
    fn trivial_classes() {
        let one = parse_set_partition("{1}").unwrap();
        assert_eq!(
            matrix_class(&one, &one)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![m("1")]
        );
        let pair = parse_set_partition("{1,2}").unwrap();
        assert_eq!(
            matrix_class(&pair, &pair)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![m("2")]
        );
        let other = parse_set_partition("{1,2,3}").unwrap();
        assert_eq!(
            matrix_class(&pair, &other).unwrap_err().code(),
            "E_GROUND_SET"
        );
    }

    #[test]
    fn self_and_one_block() {
        let p = parse_ordered_partition("{2,4}{1}{3,5,6}").unwrap();
        assert_eq!(intersection_matrix(&p, &p).unwrap(), m("2 0 0;0 1 0;0 0 3"));
        let whole = parse_ordered_partition("{1,2,3,4,5,6}").unwrap();
        assert_eq!(intersection_matrix(&p, &whole).unwrap(), m("2;1;3"));
    }

    #[test]
    fn margins_are_block_sizes() {
        for n in 0..=4 {
            let all: Vec<_> = enumerate_ordered_partitions(n).unwrap().collect();
            for p1 in &all {
                for p2 in &all {
                    let im = intersection_matrix(p1, p2).unwrap();
                    let sizes = |p: &OrderedSetPartition| {
                        p.blocks()
                            .iter()
                            .map(|b| b.len() as u32)
                            .collect::<Vec<_>>()
                    };
                    assert_eq!(im.row_sums(), sizes(p1));
                    assert_eq!(im.col_sums(), sizes(p2));
                    assert_eq!(im.weight() as usize, n);
                }
            }
        }
    }

    #[test]
    fn class_is_a_permutation_orbit() {
        for n in 0..=5 {
            let all: Vec<_> = enumerate_partitions(n).unwrap().collect();
            for q1 in &all {
                for q2 in &all {
                    let class = matrix_class(q1, q2).unwrap();
                    let first = class.iter().next().unwrap();
                    assert_eq!(&first.orbit(), &class);
                }
            }
        }
    }
}
