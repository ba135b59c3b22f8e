use std::fmt;

use num_bigint::BigInt;

use super::{Diagram, PackedMatrix};
use crate::partitions::PartitionType;
use crate::poly::{Mono, Var};
use crate::rational::binomial;

/// `𝕃^α 𝕍^β y^d`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub y_deg: u32,
    pub l_exp: PartitionType,
    pub v_exp: PartitionType,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::default()
    }

    pub fn of_matrix(m: &PackedMatrix) -> Self {
        let (l_exp, v_exp) = m.bitype();
        Monomial {
            l_exp,
            v_exp,
            y_deg: m.weight(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let add = |a: &PartitionType, b: &PartitionType| {
            let n = a.as_slice().len().max(b.as_slice().len());
            PartitionType::new((1..=n).map(|j| a.get(j) + b.get(j)).collect())
        };
        Monomial {
            l_exp: add(&self.l_exp, &other.l_exp),
            v_exp: add(&self.v_exp, &other.v_exp),
            y_deg: self.y_deg + other.y_deg,
        }
    }

    pub fn to_mono(&self) -> Mono<Var> {
        self.l_exp
            .monomial(Var::L)
            .mul(&self.v_exp.monomial(Var::V))
            .mul(&Mono::pow(Var::Y, self.y_deg))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = self.to_mono();
        let parts: Vec<String> = mono
            .iter()
            .map(|(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// `m(𝒟, 𝕃, 𝕍, y)`, read off the bitype and the edge count.
pub fn monomial(d: &Diagram) -> Monomial {
    Monomial::of_matrix(d.representative())
}

/// Substitutes `z → z′ + z″` in every variable and splits each expanded
/// term into `(primed part, double-primed part)`.
///
/// Terms are listed variable by variable in increasing order, with the
/// exponent kept on the left decreasing; for `x²y³` this gives
/// `x²y³⊗1, 3x²y²⊗y, …, 1⊗x²y³`.
pub fn double_variables<V: Ord + Clone>(m: &Mono<V>) -> Vec<(Mono<V>, Mono<V>, BigInt)> {
    let mut out = vec![(Mono::one(), Mono::one(), BigInt::from(1))];
    for (v, e) in m.iter() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for (left, right, c) in &out {
            for j in (0..=e).rev() {
                next.push((
                    left.mul(&Mono::pow(v.clone(), j)),
                    right.mul(&Mono::pow(v.clone(), e - j)),
                    c * binomial(e as usize, j as usize),
                ));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diag::canonicalize;

    fn d(t: &str) -> Diagram {
        canonicalize(&PackedMatrix::parse(t).unwrap())
    }

    #[test]
    fn examples() {
        let m = monomial(&d("2 0 1;0 2 1"));
        assert_eq!(m.l_exp, PartitionType::new(vec![0, 0, 2]));
        assert_eq!(m.v_exp, PartitionType::new(vec![0, 3]));
        assert_eq!(m.y_deg, 6);
        assert_eq!(m.to_string(), "L3^2 V2^3 y^6");
        assert!(monomial(&Diagram::empty()).is_one());
        assert_eq!(monomial(&Diagram::empty()).to_string(), "1");
        assert_eq!(monomial(&d("1")).to_string(), "L1 V1 y");
    }

    #[test]
    fn doubling_golden() {
        let xy: Mono<char> = Mono::from_pairs([('x', 2), ('y', 3)]);
        let terms = double_variables(&xy);
        let coeffs: Vec<i64> = terms.iter().map(|t| i64::try_from(&t.2).unwrap()).collect();
        assert_eq!(coeffs, vec![1, 3, 3, 1, 2, 6, 6, 2, 1, 3, 3, 1]);
        assert_eq!(terms[0], (xy.clone(), Mono::one(), BigInt::from(1)));
        assert_eq!(terms[11], (Mono::one(), xy.clone(), BigInt::from(1)));
        assert_eq!(
            terms[5],
            (
                Mono::from_pairs([('x', 1), ('y', 2)]),
                Mono::from_pairs([('x', 1), ('y', 1)]),
                BigInt::from(6)
            )
        );
        for (l, r, _) in &terms {
            assert_eq!(l.mul(r), xy);
        }
    }

    #[test]
    fn doubling_trivial() {
        let one: Mono<char> = Mono::one();
        assert_eq!(
            double_variables(&one),
            vec![(one.clone(), one.clone(), BigInt::from(1))]
        );
        let x = Mono::var('x');
        assert_eq!(
            double_variables(&x),
            vec![
                (x.clone(), one.clone(), BigInt::from(1)),
                (one, x, BigInt::from(1))
            ]
        );
    }
}
