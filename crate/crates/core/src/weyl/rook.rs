use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{Letter, NormalForm, WeylWord};

/// Ferrers board of a boson word.
///
/// Row `i` belongs to the `i`-th `a⁺` in reading order and column `j` to the
/// `j`-th `a`; cell `(i, j)` is present when that `a` stands to the left of
/// that `a⁺`, i.e. when the pair can be contracted. Row lengths are
/// nondecreasing, so the board is the staircase under the lattice path that
/// steps right on `a` and up on `a⁺`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RookBoard {
    row_lengths: Vec<usize>,
    columns: usize,
}

pub fn rook_board(word: &WeylWord) -> RookBoard {
    let mut seen_a = 0;
    let mut row_lengths = Vec::new();
    for l in word.letters() {
        match l {
            Letter::Annihilation => seen_a += 1,
            Letter::Creation => row_lengths.push(seen_a),
        }
    }
    RookBoard {
        row_lengths,
        columns: seen_a,
    }
}

impl RookBoard {
    pub fn rows(&self) -> usize {
        self.row_lengths.len()
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.row_lengths
    }

    pub fn cells(&self) -> BTreeSet<(usize, usize)> {
        self.row_lengths
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
            .collect()
    }

    /// `Σ_k r(B,k) (a⁺)^(r−k) a^(s−k)`.
    pub fn reconstruct(&self) -> NormalForm {
        let (r, s) = (self.rows() as u32, self.columns as u32);
        NormalForm::from_terms(
            rook_numbers(self)
                .into_iter()
                .enumerate()
                .map(|(k, c)| ((r - k as u32, s - k as u32), c)),
        )
    }
}

/// `r(B, k)` for `k = 0..=min(rows, columns)`: non-attacking placements of
/// `k` rooks.
pub fn rook_numbers(board: &RookBoard) -> Vec<BigInt> {
    let mut lengths = board.row_lengths.clone();
    lengths.sort_unstable();
    // scanning rows by increasing length, every earlier rook occupies a
    // column the current row also covers
    let mut counts = vec![BigInt::from(1)];
    for len in lengths {
        let mut next = counts.clone();
        next.push(BigInt::from(0));
        for (k, c) in counts.iter().enumerate() {
            if len > k {
                next[k + 1] += c * (len - k);
            }
        }
        counts = next;
    }
    while counts.len() > 1 && counts.last().is_some_and(|c| c == &BigInt::from(0)) {
        counts.pop();
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::parse_word;

    #[test]
    fn single_contraction() {
        let b = rook_board(&parse_word("a a+").unwrap());
        assert_eq!(rook_numbers(&b), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(b.reconstruct().to_lines(), "0 0 1\n1 1 1\n");
    }

    #[test]
    fn empty_word() {
        let b = rook_board(&WeylWord::empty());
        assert_eq!(rook_numbers(&b), vec![BigInt::from(1)]);
        assert_eq!(b.reconstruct(), NormalForm::one());
    }

    #[test]
    fn five_letter_word() {
        let b = rook_board(&parse_word("a+ a a a+ a+").unwrap());
        assert_eq!(b.row_lengths(), &[0, 2, 2]);
        let r: Vec<i64> = rook_numbers(&b)
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(r, vec![1, 4, 2]);
        let nf = b.reconstruct();
        assert_eq!(nf.coeff(3, 2), BigInt::from(1));
        assert_eq!(nf.coeff(2, 1), BigInt::from(4));
        assert_eq!(nf.coeff(1, 0), BigInt::from(2));
    }

    #[test]
    fn board_shape_bounds() {
        for len in 0..=8 {
            for w in WeylWord::all_of_length(len) {
                let b = rook_board(&w);
                assert!(b.rows() <= w.creations());
                assert!(b.columns() <= w.annihilations());
                assert!(b
                    .cells()
                    .iter()
                    .all(|&(i, j)| i < b.rows() && j < b.columns()));
            }
        }
    }
}
