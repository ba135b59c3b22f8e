use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{factorial, parse_rational, Q};
use crate::{Error, Result};

/// `Σ_{n ≤ N} aₙ xⁿ/n!`, stored by its EGF coefficients `a₀..a_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Egf {
    coeffs: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct EgfJson {
    order: usize,
    coeffs: Vec<String>,
}

fn fact_q(n: usize) -> Q {
    Q::from_integer(factorial(n))
}

impl Egf {
    /// Series from its EGF coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition(
                "a series needs at least the constant coefficient".into(),
            ));
        }
        Ok(Egf { coeffs })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Q) -> Self {
        Egf {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Q::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Series with ordinary coefficients `[xⁿ]`.
    pub fn from_ordinary(ordinary: Vec<Q>) -> Result<Self> {
        Self::new(
            ordinary
                .into_iter()
                .enumerate()
                .map(|(n, c)| c * fact_q(n))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| Q::zero())
    }

    pub fn constant(order: usize, c: Q) -> Self {
        Self::from_fn(order, |n| if n == 0 { c.clone() } else { Q::zero() })
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Q::one())
    }

    pub fn x(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 1 { Q::one() } else { Q::zero() })
    }

    /// `eˣ`, the unit of the Hadamard product.
    pub fn exp_x(order: usize) -> Self {
        Self::from_fn(order, |_| Q::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Q {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn ordinary(&self) -> Vec<Q> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c / fact_q(n))
            .collect()
    }

    fn same_order(&self, other: &Egf) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn truncate(&self, order: usize) -> Result<Egf> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(Egf {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn add(&self, other: &Egf) -> Result<Egf> {
        self.same_order(other)?;
        Ok(Egf {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Egf) -> Result<Egf> {
        self.same_order(other)?;
        Ok(Egf {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Q) -> Egf {
        Egf {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product of the series (binomial convolution of EGF coefficients).
    pub fn multiply(&self, other: &Egf) -> Result<Egf> {
        self.same_order(other)?;
        let (a, b) = (self.ordinary(), other.ordinary());
        let n = self.order();
        let prod = (0..=n)
            .map(|i| (0..=i).fold(Q::zero(), |acc, j| acc + &a[j] * &b[i - j]))
            .collect();
        Egf::from_ordinary(prod)
    }

    pub fn pow(&self, mut e: u64) -> Egf {
        let mut acc = Egf::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base).expect("same order");
            }
        }
        acc
    }

    /// `self ∘ inner`; the inner series must have zero constant term.
    pub fn compose(&self, inner: &Egf) -> Result<Egf> {
        self.same_order(inner)?;
        if !inner.coeff(0).is_zero() {
            return Err(Error::Precondition(
                "composition needs an inner series with zero constant term".into(),
            ));
        }
        let outer = self.ordinary();
        let mut acc = Egf::zero(self.order());
        for c in outer.iter().rev() {
            acc = acc
                .multiply(inner)?
                .add(&Egf::constant(self.order(), c.clone()))?;
        }
        Ok(acc)
    }

    /// `exp(self)`; requires a zero constant term so the result stays rational.
    pub fn exp(&self) -> Result<Egf> {
        if !self.coeff(0).is_zero() {
            return Err(Error::Precondition(
                "exp needs a series with zero constant term".into(),
            ));
        }
        // g = exp(f), g' = f'g: n·gₙ = Σ_{k=1..n} k·fₖ·g_{n−k}
        let f = self.ordinary();
        let mut g = vec![Q::one()];
        for n in 1..=self.order() {
            let s = (1..=n).fold(Q::zero(), |acc, k| {
                acc + Q::from_integer(k.into()) * &f[k] * &g[n - k]
            });
            g.push(s / Q::from_integer(n.into()));
        }
        Egf::from_ordinary(g)
    }

    /// `log(self)`; requires constant term 1.
    pub fn log(&self) -> Result<Egf> {
        if !self.coeff(0).is_one() {
            return Err(Error::Precondition(
                "log needs a series with constant term 1".into(),
            ));
        }
        // F = exp(f): n·fₙ = n·Fₙ − Σ_{k=1..n−1} k·fₖ·F_{n−k}
        let big_f = self.ordinary();
        let mut f = vec![Q::zero()];
        for n in 1..=self.order() {
            let nq = Q::from_integer(n.into());
            let s = (1..n).fold(Q::zero(), |acc, k| {
                acc + Q::from_integer(k.into()) * &f[k] * &big_f[n - k]
            });
            f.push((&nq * &big_f[n] - s) / nq);
        }
        Egf::from_ordinary(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&EgfJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        })
        .expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<Egf> {
        let raw: EgfJson = serde_json::from_str(text)
            .map_err(|e| Error::parse("series json", e.column(), e.to_string()))?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(Error::parse(
                "series json",
                0,
                format!(
                    "order {} needs {} coefficients, got {}",
                    raw.order,
                    raw.order + 1,
                    raw.coeffs.len()
                ),
            ));
        }
        Egf::new(
            raw.coeffs
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<_>>()?,
        )
    }
}

/// Pointwise product of EGF coefficient sequences.
pub fn hadamard(f: &Egf, g: &Egf) -> Result<Egf> {
    f.same_order(g)?;
    Ok(Egf {
        coeffs: f.coeffs.iter().zip(&g.coeffs).map(|(a, b)| a * b).collect(),
    })
}

/// EGF of all structures from the EGF of connected ones: `e^{connected}`.
pub fn exponential_formula(connected: &Egf) -> Result<Egf> {
    connected.exp()
}
