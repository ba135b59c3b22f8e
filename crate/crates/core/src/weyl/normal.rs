use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rewrite::{rewrite_normal_form, RewriteStrategy};
use super::WeylWord;
use crate::rational::{binomial, factorial};

/// `Σ c(k,l) (a⁺)^k a^l` with nonzero integer coefficients keyed by `(k, l)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl NormalForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(k: u32, l: u32, c: BigInt) -> Self {
        let mut nf = Self::zero();
        nf.add_term(k, l, c);
        nf
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut nf = Self::zero();
        for ((k, l), c) in terms {
            nf.add_term(k, l, c);
        }
        nf
    }

    /// Normal form of a word, computed by the rewrite engine.
    pub fn from_word(word: &WeylWord) -> Self {
        rewrite_normal_form(word, RewriteStrategy::Leftmost)
    }

    pub fn add_term(&mut self, k: u32, l: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((k, l)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(k, l));
        }
    }

    pub fn coeff(&self, k: u32, l: u32) -> BigInt {
        self.terms.get(&(k, l)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (&(k, l), c) in other.terms() {
            out.add_term(k, l, c.clone());
        }
        out
    }

    /// Product in the Weyl algebra, reordered back into normal form.
    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(k, l), c1) in self.terms() {
            for (&(m, n), c2) in other.terms() {
                let base = c1 * c2;
                // a^l (a⁺)^m contracts j pairs in j!·C(l,j)·C(m,j) ways
                for j in 0..=l.min(m) {
                    let (ju, lu, mu) = (j as usize, l as usize, m as usize);
                    let ways = factorial(ju) * binomial(lu, ju) * binomial(mu, ju);
                    out.add_term(k + m - j, l + n - j, &base * ways);
                }
            }
        }
        out
    }

    pub fn pow(&self, power: u32) -> NormalForm {
        let mut acc = NormalForm::one();
        for _ in 0..power {
            acc = acc.mul(self);
        }
        acc
    }

    /// Image under the anti-automorphism `a ↔ a⁺` with order reversal, which
    /// sends `(a⁺)^k a^l` to `(a⁺)^l a^k`.
    pub fn mirror(&self) -> NormalForm {
        NormalForm::from_terms(self.terms().map(|(&(k, l), c)| ((l, k), c.clone())))
    }

    /// Serialization as `k l coefficient` lines sorted by `(k, l)`.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for ((k, l), c) in self.terms() {
            out.push_str(&format!("{k} {l} {c}\n"));
        }
        out
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // highest degree first reads like the usual way of writing these
        for (i, ((k, l), c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &BigInt::zero();
            match (i, negative) {
                (0, true) => f.write_str("- ")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = if negative { -c } else { c.clone() };
            let letters: Vec<&str> = std::iter::repeat_n("a+", *k as usize)
                .chain(std::iter::repeat_n("a", *l as usize))
                .collect();
            if letters.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", letters.join(" "))?;
            } else {
                write!(f, "{mag} {}", letters.join(" "))?;
            }
        }
        Ok(())
    }
}

/// `N(Ω^power)` by iterated normal-form multiplication.
pub fn normal_order(element: &NormalForm, power: u32) -> NormalForm {
    element.pow(power)
}

/// `N(w^power)`: the word is rewritten once, then powered in normal form.
pub fn normal_order_word(word: &WeylWord, power: u32) -> NormalForm {
    NormalForm::from_word(word).pow(power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::parse_word;

    fn nf(terms: &[((u32, u32), i64)]) -> NormalForm {
        NormalForm::from_terms(terms.iter().map(|&(kl, c)| (kl, BigInt::from(c))))
    }

    #[test]
    fn commutator_single_step() {
        let w = parse_word("a a+").unwrap();
        assert_eq!(normal_order_word(&w, 1), nf(&[((1, 1), 1), ((0, 0), 1)]));
    }

    #[test]
    fn number_operator_squared() {
        let w = parse_word("a+ a").unwrap();
        assert_eq!(normal_order_word(&w, 2), nf(&[((1, 1), 1), ((2, 2), 1)]));
    }

    #[test]
    fn five_letter_word_first_row() {
        // a⁺aaa⁺a⁺ = (a⁺)³a² + 4(a⁺)²a + 2a⁺
        let w = parse_word("a+ a a a+ a+").unwrap();
        assert_eq!(
            normal_order_word(&w, 1),
            nf(&[((1, 0), 2), ((2, 1), 4), ((3, 2), 1)])
        );
    }

    #[test]
    fn power_zero_is_unit() {
        let w = parse_word("a a a+").unwrap();
        assert_eq!(normal_order_word(&w, 0), NormalForm::one());
        assert_eq!(normal_order(&NormalForm::zero(), 0), NormalForm::one());
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut x = nf(&[((1, 1), 3)]);
        x.add_term(1, 1, BigInt::from(-3));
        assert!(x.is_zero());
    }

    #[test]
    fn lines_and_display() {
        let x = nf(&[((1, 0), 2), ((2, 1), -4)]);
        assert_eq!(x.to_lines(), "1 0 2\n2 1 -4\n");
        assert_eq!(x.to_string(), "- 4 a+ a+ a + 2 a+");
    }

    #[test]
    fn mirror_is_involutive_and_antimultiplicative() {
        let x = NormalForm::from_word(&parse_word("a a a+ a").unwrap());
        let y = NormalForm::from_word(&parse_word("a+ a a+").unwrap());
        assert_eq!(x.mirror().mirror(), x);
        assert_eq!(x.mul(&y).mirror(), y.mirror().mul(&x.mirror()));
    }
}
