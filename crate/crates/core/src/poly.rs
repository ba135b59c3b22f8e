//! Sparse commutative polynomials with exact rational coefficients.
//!
//! Monomials are exponent maps with zero exponents never stored, so derived
//! equality and ordering are canonical and printing is deterministic.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::Q;

/// Variables of the diagram alphabets: `L₁, L₂, …`, the doubled copies
/// `L′ᵢ, L″ᵢ`, `V₁, V₂, …` and the edge-counting variable `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    L(u32),
    LPrime(u32),
    LDoublePrime(u32),
    V(u32),
    Y,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::L(i) => write!(f, "L{i}"),
            Var::LPrime(i) => write!(f, "L'{i}"),
            Var::LDoublePrime(i) => write!(f, "L''{i}"),
            Var::V(i) => write!(f, "V{i}"),
            Var::Y => f.write_str("y"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono<V: Ord> {
    exps: BTreeMap<V, u32>,
}

impl<V: Ord> Default for Mono<V> {
    fn default() -> Self {
        Mono {
            exps: BTreeMap::new(),
        }
    }
}

impl<V: Ord + Clone> Mono<V> {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: V) -> Self {
        Self::pow(v, 1)
    }

    pub fn pow(v: V, e: u32) -> Self {
        let mut m = Self::default();
        m.set(v, e);
        m
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (V, u32)>) -> Self {
        pairs
            .into_iter()
            .fold(Self::one(), |acc, (v, e)| acc.mul(&Self::pow(v, e)))
    }

    pub fn set(&mut self, v: V, e: u32) {
        if e == 0 {
            self.exps.remove(&v);
        } else {
            self.exps.insert(v, e);
        }
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&V, u32)> {
        self.exps.iter().map(|(v, e)| (v, *e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, e) in other.iter() {
            let cur = out.exponent(v);
            out.set(v.clone(), cur + e);
        }
        out
    }
}

impl<V: Ord + fmt::Display> fmt::Display for Mono<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<V: Ord> {
    terms: BTreeMap<Mono<V>, Q>,
}

impl<V: Ord> Default for Poly<V> {
    fn default() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }
}

impl<V: Ord + Clone> Poly<V> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Mono::one(), Q::one())
    }

    pub fn monomial(m: Mono<V>, c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: V) -> Self {
        Self::monomial(Mono::var(v), Q::one())
    }

    pub fn add_term(&mut self, m: Mono<V>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono<V>) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono<V>, &Q)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (m, k) in self.terms() {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Ring morphism sending every variable `v` to `subst(v)`.
    pub fn substitute<W: Ord + Clone>(&self, subst: impl Fn(&V) -> Poly<W>) -> Poly<W> {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            let mut acc = Poly::monomial(Mono::one(), c.clone());
            for (v, e) in m.iter() {
                let image = subst(v);
                for _ in 0..e {
                    acc = acc.mul(&image);
                }
            }
            out = out.add(&acc);
        }
        out
    }
}

impl<V: Ord + fmt::Display> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else if m.exps.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}
