//! Exact integer and rational helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Parses `p`, `-p` or `p/q` with arbitrary-size integers.
pub fn parse_rational(text: &str) -> Result<Q> {
    let text = text.trim();
    let bad = |pos: usize, msg: &str| Error::parse("rational", pos, msg);
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad(0, "invalid numerator"))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| bad(text.find('/').unwrap_or(0) + 1, "invalid denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad(text.find('/').unwrap_or(0) + 1, "zero denominator"));
    }
    Ok(Q::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("3/6").unwrap(), q_frac(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), q(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(q_frac(1, 2).to_string(), "1/2");
    }
}
