//! Weyl algebra `[a, a⁺] = 1`: boson words, normal forms and generalized
//! Stirling matrices.
//!
//! Normal forms are written in the basis `(a⁺)^k a^l`. Words are reduced to
//! normal form by the rewrite engine in [`rewrite`]; products of normal forms
//! use the closed reordering rule
//! `a^l (a⁺)^m = Σ_j j!·C(l,j)·C(m,j)·(a⁺)^(m−j) a^(l−j)`.

mod normal;
mod parse;
pub mod rewrite;
mod rook;
mod stirling;

pub use normal::{normal_order, normal_order_word, NormalForm};
pub use parse::{parse_element, parse_normal_form_lines, parse_word};
pub use rewrite::{rewrite_normal_form, RewriteStrategy};
pub use rook::{rook_board, rook_numbers, RookBoard};
pub use stirling::{dominant_term, excess, stirling_matrix, StirlingMatrix};

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// a⁺
    Creation,
    /// a
    Annihilation,
}

impl Letter {
    pub fn dual(self) -> Letter {
        match self {
            Letter::Creation => Letter::Annihilation,
            Letter::Annihilation => Letter::Creation,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::Creation => "a+",
            Letter::Annihilation => "a",
        })
    }
}

/// A boson word; the empty word is the unit.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylWord {
    letters: Vec<Letter>,
}

impl WeylWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        WeylWord { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `|w|_{a⁺}`
    pub fn creations(&self) -> usize {
        self.letters
            .iter()
            .filter(|l| **l == Letter::Creation)
            .count()
    }

    /// `|w|_a`
    pub fn annihilations(&self) -> usize {
        self.len() - self.creations()
    }

    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord { letters }
    }

    /// Image under the anti-automorphism exchanging `a ↔ a⁺` and reversing
    /// the order of letters.
    pub fn mirror(&self) -> WeylWord {
        WeylWord {
            letters: self.letters.iter().rev().map(|l| l.dual()).collect(),
        }
    }

    /// All `2^len` words of the given length, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = WeylWord> {
        (0u64..(1u64 << len)).map(move |bits| {
            WeylWord::new(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 0 {
                            Letter::Creation
                        } else {
                            Letter::Annihilation
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
