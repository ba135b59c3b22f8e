//! Canonical representatives of packed matrices up to independent row and
//! column permutations.
//!
//! The representative is the orbit element whose row-major entry sequence is
//! lexicographically least (shapes agree within an orbit). For a fixed row
//! order the best column order simply sorts the columns as vectors, and
//! symmetrically for rows, so only permutations of the shorter side are
//! enumerated. Identical rows (or columns) are permuted as a multiset.

use std::fmt;

use super::PackedMatrix;
use crate::partitions::next_permutation;

/// A diagram: the class of a packed matrix under row/column permutations,
/// held by its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    canonical: PackedMatrix,
}

impl Diagram {
    pub fn empty() -> Self {
        Diagram {
            canonical: PackedMatrix::empty(),
        }
    }

    pub fn representative(&self) -> &PackedMatrix {
        &self.canonical
    }

    pub fn weight(&self) -> u32 {
        self.canonical.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// Least row-major sequence when the rows may be permuted freely and the
/// columns are then sorted.
fn best_over_row_orders(rows: &[Vec<u32>], ncols: usize) -> Vec<u32> {
    let mut order = rows.to_vec();
    order.sort();
    let mut best: Option<Vec<u32>> = None;
    loop {
        let mut columns: Vec<Vec<u32>> = (0..ncols)
            .map(|j| order.iter().map(|r| r[j]).collect())
            .collect();
        columns.sort();
        let flat: Vec<u32> = (0..order.len())
            .flat_map(|i| columns.iter().map(move |c| c[i]))
            .collect();
        if best.as_ref().is_none_or(|b| flat < *b) {
            best = Some(flat);
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    best.unwrap_or_default()
}

pub fn canonicalize(m: &PackedMatrix) -> Diagram {
    if m.is_empty() {
        return Diagram::empty();
    }
    let (r, c) = (m.rows(), m.cols());
    let entries = if r <= c {
        best_over_row_orders(&m.to_rows(), c)
    } else {
        // permute columns; for each column order the rows get sorted, which
        // is the same as sorting rows of the transpose's columns
        let mut order = m.transpose().to_rows();
        order.sort();
        let mut best: Option<Vec<u32>> = None;
        loop {
            let mut rows: Vec<Vec<u32>> = (0..r)
                .map(|i| order.iter().map(|col| col[i]).collect())
                .collect();
            rows.sort();
            let flat = rows.concat();
            if best.as_ref().is_none_or(|b| flat < *b) {
                best = Some(flat);
            }
            if !next_permutation(&mut order) {
                break;
            }
        }
        best.unwrap_or_default()
    };
    Diagram {
        canonical: PackedMatrix::new(r, c, entries).expect("permutations keep a matrix packed"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diag::packed_matrices_of_weight;

    fn m(t: &str) -> PackedMatrix {
        PackedMatrix::parse(t).unwrap()
    }

    #[test]
    fn displayed_class_collapses() {
        let class = [
            "2 0 1;0 2 1",
            "2 1 0;0 1 2",
            "1 2 0;1 0 2",
            "0 2 1;2 0 1",
            "0 1 2;2 1 0",
            "1 0 2;1 2 0",
        ];
        let diagrams: Vec<Diagram> = class.iter().map(|t| canonicalize(&m(t))).collect();
        assert!(diagrams.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(diagrams[0].representative().to_text(), "0 1 2;2 1 0");
    }

    #[test]
    fn small_cases() {
        assert_eq!(canonicalize(&m("1")).representative(), &m("1"));
        assert_eq!(canonicalize(&m("0 1;1 0")), canonicalize(&m("1 0;0 1")));
        assert_eq!(canonicalize(&PackedMatrix::empty()), Diagram::empty());
        assert_ne!(canonicalize(&m("1 1")), canonicalize(&m("1;1")));
    }

    #[test]
    fn canonical_is_orbit_minimum() {
        for w in 0..=4 {
            for mat in packed_matrices_of_weight(w) {
                let orbit = mat.orbit();
                let least = orbit
                    .iter()
                    .min_by(|a, b| a.entries().cmp(b.entries()))
                    .unwrap();
                assert_eq!(canonicalize(&mat).representative(), least, "{mat}");
                for other in &orbit {
                    assert_eq!(canonicalize(other), canonicalize(&mat));
                }
            }
        }
    }
}
