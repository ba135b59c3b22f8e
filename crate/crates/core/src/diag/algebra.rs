use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::element::{LinComb, Tensor, Tensor3};
use super::{canonicalize, Diagram, PackedMatrix};
use crate::rational::Q;

/// Which spots a coproduct splits: rows (white) or columns (black).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    WhiteSpots,
    BlackSpots,
}

/// A monoid basis graded by weight, with the splitting rule of the
/// coproduct on basis elements.
pub trait HopfBasis: Clone + Ord + fmt::Display {
    fn unit() -> Self;
    fn weight(&self) -> u32;
    fn star(&self, other: &Self) -> Self;
    /// `(π_X(b), π_Y(b))` for every ordered pair of complementary subsets
    /// of spots: `2^k` terms, not collected.
    fn splits(&self, side: Side) -> Vec<(Self, Self)>;

    fn is_unit(&self) -> bool {
        *self == Self::unit()
    }
}

/// Subsets of `0..k` as (X, complement of X), `X` enumerated by bitmask.
fn complementary_pairs(k: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    assert!(k < usize::BITS as usize, "too many spots to split");
    (0usize..1 << k).map(move |mask| {
        let (x, y): (Vec<usize>, Vec<usize>) = (0..k).partition(|i| mask >> i & 1 == 1);
        (x, y)
    })
}

impl HopfBasis for PackedMatrix {
    fn unit() -> Self {
        PackedMatrix::empty()
    }

    fn weight(&self) -> u32 {
        PackedMatrix::weight(self)
    }

    fn star(&self, other: &Self) -> Self {
        self.block_diagonal(other)
    }

    fn splits(&self, side: Side) -> Vec<(Self, Self)> {
        match side {
            Side::WhiteSpots => complementary_pairs(self.rows())
                .map(|(x, y)| (self.restrict_rows(&x), self.restrict_rows(&y)))
                .collect(),
            Side::BlackSpots => complementary_pairs(self.cols())
                .map(|(x, y)| (self.restrict_cols(&x), self.restrict_cols(&y)))
                .collect(),
        }
    }
}

impl HopfBasis for Diagram {
    fn unit() -> Self {
        Diagram::empty()
    }

    fn weight(&self) -> u32 {
        Diagram::weight(self)
    }

    fn star(&self, other: &Self) -> Self {
        canonicalize(&self.representative().block_diagonal(other.representative()))
    }

    fn splits(&self, side: Side) -> Vec<(Self, Self)> {
        self.representative()
            .splits(side)
            .into_iter()
            .map(|(a, b)| (canonicalize(&a), canonicalize(&b)))
            .collect()
    }
}

/// Bilinear extension of the superposition product.
pub fn star<B: HopfBasis>(x: &LinComb<B>, y: &LinComb<B>) -> LinComb<B> {
    let mut out = LinComb::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_term(a.star(b), ca * cb);
        }
    }
    out
}

/// Linear extension of an arbitrary splitting rule.
pub fn delta_with<B: HopfBasis>(x: &LinComb<B>, split: impl Fn(&B) -> Vec<(B, B)>) -> Tensor<B> {
    let mut out = Tensor::zero();
    for (b, c) in x.terms() {
        for pair in split(b) {
            out.add_term(pair, c.clone());
        }
    }
    out
}

pub fn delta<B: HopfBasis>(x: &LinComb<B>, side: Side) -> Tensor<B> {
    delta_with(x, |b| b.splits(side))
}

/// `Δ_WS`: split over subsets of rows.
pub fn delta_ws<B: HopfBasis>(x: &LinComb<B>) -> Tensor<B> {
    delta(x, Side::WhiteSpots)
}

/// `Δ_BS`: split over subsets of columns.
pub fn delta_bs<B: HopfBasis>(x: &LinComb<B>) -> Tensor<B> {
    delta(x, Side::BlackSpots)
}

/// `λ_∅`: the coefficient of the empty diagram.
pub fn counit<B: HopfBasis>(x: &LinComb<B>) -> Q {
    x.coeff(&B::unit())
}

/// Factorwise product in the tensor square.
pub fn tensor_star<B: HopfBasis>(s: &Tensor<B>, t: &Tensor<B>) -> Tensor<B> {
    let mut out = Tensor::zero();
    for ((a, b), c1) in s.terms() {
        for ((x, y), c2) in t.terms() {
            out.add_term((a.star(x), b.star(y)), c1 * c2);
        }
    }
    out
}

/// `(Δ ⊗ id)` applied to a tensor.
pub fn delta_left<B: HopfBasis>(t: &Tensor<B>, split: impl Fn(&B) -> Vec<(B, B)>) -> Tensor3<B> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.terms() {
        for (a1, a2) in split(a) {
            out.add_term((a1, a2, b.clone()), c.clone());
        }
    }
    out
}

/// `(id ⊗ Δ)` applied to a tensor.
pub fn delta_right<B: HopfBasis>(t: &Tensor<B>, split: impl Fn(&B) -> Vec<(B, B)>) -> Tensor3<B> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.terms() {
        for (b1, b2) in split(b) {
            out.add_term((a.clone(), b1, b2), c.clone());
        }
    }
    out
}

/// Memoized antipode for a fixed splitting rule.
pub struct Antipode<B: HopfBasis, F: Fn(&B) -> Vec<(B, B)>> {
    split: F,
    memo: RefCell<BTreeMap<B, LinComb<B>>>,
}

impl<B: HopfBasis, F: Fn(&B) -> Vec<(B, B)>> Antipode<B, F> {
    pub fn new(split: F) -> Self {
        Antipode {
            split,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn basis(&self, b: &B) -> LinComb<B> {
        if let Some(hit) = self.memo.borrow().get(b) {
            return hit.clone();
        }
        let out = if b.is_unit() {
            LinComb::basis(B::unit())
        } else {
            // S(b) = −b − Σ S(b′)·b″ over terms with both factors nonempty;
            // those left factors are strictly lighter than b
            let mut acc = LinComb::term(b.clone(), -Q::one());
            let w = b.weight();
            for (left, right) in (self.split)(b) {
                if left.is_unit() || right.is_unit() || left.weight() >= w {
                    continue;
                }
                acc = acc.sub(&star(&self.basis(&left), &LinComb::basis(right)));
            }
            acc
        };
        self.memo.borrow_mut().insert(b.clone(), out.clone());
        out
    }

    pub fn apply(&self, x: &LinComb<B>) -> LinComb<B> {
        x.map_linear(|b| self.basis(b))
    }
}

/// Antipode by the graded recursion, for an arbitrary splitting rule.
pub fn antipode_with<B: HopfBasis>(
    x: &LinComb<B>,
    split: impl Fn(&B) -> Vec<(B, B)>,
) -> LinComb<B> {
    Antipode::new(split).apply(x)
}

pub fn antipode<B: HopfBasis>(x: &LinComb<B>, side: Side) -> LinComb<B> {
    antipode_with(x, |b| b.splits(side))
}

/// `μ ∘ (f ⊗ g) ∘ Δ` evaluated on `x`.
pub fn convolve<B: HopfBasis>(
    x: &LinComb<B>,
    split: impl Fn(&B) -> Vec<(B, B)>,
    left: impl Fn(&B) -> LinComb<B>,
    right: impl Fn(&B) -> LinComb<B>,
) -> LinComb<B> {
    delta_with(x, split).contract(left, right, |a, b| a.star(b))
}

/// `e·ε(x)`: the counit value times the unit.
pub fn unit_counit<B: HopfBasis>(x: &LinComb<B>) -> LinComb<B> {
    let c = counit(x);
    if c.is_zero() {
        LinComb::zero()
    } else {
        LinComb::term(B::unit(), c)
    }
}
