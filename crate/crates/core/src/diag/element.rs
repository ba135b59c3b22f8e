use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::Q;

fn add_into<K: Ord>(map: &mut BTreeMap<K, Q>, key: K, c: Q) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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

macro_rules! linear_space {
    ($name:ident, $key:ty) => {
        impl<B: Ord + Clone> $name<B> {
            pub fn zero() -> Self {
                $name {
                    terms: BTreeMap::new(),
                }
            }

            pub fn add_term(&mut self, key: $key, c: Q) {
                add_into(&mut self.terms, key, c);
            }

            pub fn terms(&self) -> impl Iterator<Item = (&$key, &Q)> {
                self.terms.iter()
            }

            pub fn coeff(&self, key: &$key) -> Q {
                self.terms.get(key).cloned().unwrap_or_else(Q::zero)
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (k, c) in other.terms() {
                    out.add_term(k.clone(), c.clone());
                }
                out
            }

            pub fn sub(&self, other: &Self) -> Self {
                self.add(&other.scale(&-Q::one()))
            }

            pub fn scale(&self, c: &Q) -> Self {
                let mut out = Self::zero();
                for (k, v) in self.terms() {
                    out.add_term(k.clone(), v * c);
                }
                out
            }
        }

        impl<B: Ord + Clone> Default for $name<B> {
            fn default() -> Self {
                Self::zero()
            }
        }

        impl<B: Ord + Clone> FromIterator<($key, Q)> for $name<B> {
            fn from_iter<I: IntoIterator<Item = ($key, Q)>>(iter: I) -> Self {
                let mut out = Self::zero();
                for (k, c) in iter {
                    out.add_term(k, c);
                }
                out
            }
        }
    };
}

/// Finite formal linear combination `Σ λ_b b` with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Q>,
}

/// Element of the tensor square, stored as collected `(left, right)` terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor<B: Ord> {
    terms: BTreeMap<(B, B), Q>,
}

/// Element of the tensor cube, for coassociativity checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3<B: Ord> {
    terms: BTreeMap<(B, B, B), Q>,
}

linear_space!(LinComb, B);
linear_space!(Tensor, (B, B));
linear_space!(Tensor3, (B, B, B));

impl<B: Ord + Clone> LinComb<B> {
    pub fn basis(b: B) -> Self {
        Self::term(b, Q::one())
    }

    pub fn term(b: B, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, f: impl Fn(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.terms() {
            out = out.add(&f(b).scale(c));
        }
        out
    }
}

impl<B: Ord + Clone> Tensor<B> {
    pub fn pure(left: B, right: B) -> Self {
        let mut out = Self::zero();
        out.add_term((left, right), Q::one());
        out
    }

    /// `τ(a ⊗ b) = b ⊗ a`.
    pub fn flip(&self) -> Self {
        self.terms()
            .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
            .collect()
    }

    /// `(f ⊗ g)` followed by the product `μ`.
    pub fn contract<C: Ord + Clone>(
        &self,
        left: impl Fn(&B) -> LinComb<C>,
        right: impl Fn(&B) -> LinComb<C>,
        mul: impl Fn(&C, &C) -> C,
    ) -> LinComb<C> {
        let mut out = LinComb::zero();
        for ((a, b), c) in self.terms() {
            let (fa, gb) = (left(a), right(b));
            for (x, cx) in fa.terms() {
                for (y, cy) in gb.terms() {
                    out.add_term(mul(x, y), c * cx * cy);
                }
            }
        }
        out
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{b}")?;
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Display for Tensor<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{a}⊗{b}")?;
        }
        Ok(())
    }
}
