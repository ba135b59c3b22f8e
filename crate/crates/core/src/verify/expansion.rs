use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::diag::{canonicalize, monomial, Diagram, Monomial, PackedMatrix};
use crate::limits::Limits;
use crate::partitions::{
    complete_bell, enumerate_ordered_partitions_within, enumerate_partitions_within,
    intersection_matrix, PartitionType,
};
use crate::poly::Var;
use crate::rational::{factorial, Q};
use crate::{Error, Result};

/// Polynomial in `𝕃, 𝕍, y` with exact coefficients; terms are ordered by
/// `y` degree first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BiPolynomial {
    terms: BTreeMap<Monomial, Q>,
}

impl BiPolynomial {
    pub fn add_term(&mut self, m: Monomial, c: Q) {
        let slot = self.terms.entry(m).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// One term per line: `<coefficient> <monomial>`.
impl fmt::Display for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in &self.terms {
            writeln!(f, "{c} {m}")?;
        }
        Ok(())
    }
}

fn l_type(m: &crate::poly::Mono<Var>) -> PartitionType {
    let mut alpha = Vec::new();
    for (v, e) in m.iter() {
        let Var::L(j) = v else {
            unreachable!("complete Bell polynomials only use L variables")
        };
        let j = *j as usize;
        if alpha.len() < j {
            alpha.resize(j, 0);
        }
        alpha[j - 1] = e as usize;
    }
    PartitionType::new(alpha)
}

/// `Σₙ yⁿ/n! · Yₙ(𝕃)·Yₙ(𝕍)` up to `n_max`, read off complete Bell polynomials.
pub fn expand_direct(n_max: usize, limits: &Limits) -> Result<BiPolynomial> {
    Limits::check("expansion order", n_max, limits.partitions)?;
    let mut out = BiPolynomial::default();
    for n in 0..=n_max {
        let inv = Q::new(BigInt::from(1), factorial(n));
        let bell: Vec<(PartitionType, Q)> = complete_bell(n)
            .terms()
            .map(|(m, c)| (l_type(m), c.clone()))
            .collect();
        for (alpha, ca) in &bell {
            for (beta, cb) in &bell {
                let m = Monomial {
                    y_deg: n as u32,
                    l_exp: alpha.clone(),
                    v_exp: beta.clone(),
                };
                out.add_term(m, ca * cb * &inv);
            }
        }
    }
    Ok(out)
}

/// `mult(𝒟)` for every diagram of weight `n`, tallied over all pairs of
/// unordered partitions of an `n`-set.
pub fn diagram_multiplicities(n: usize, limits: &Limits) -> Result<BTreeMap<Diagram, u64>> {
    Limits::check("diagram order", n, limits.diagrams)?;
    let partitions: Vec<_> = enumerate_partitions_within(n, limits)?
        .map(|p| p.to_ordered())
        .collect();
    let mut cache: HashMap<PackedMatrix, Diagram> = HashMap::new();
    let mut tally: BTreeMap<Diagram, u64> = BTreeMap::new();
    for p1 in &partitions {
        for p2 in &partitions {
            let m = intersection_matrix(p1, p2)?;
            let d = cache.entry(m).or_insert_with_key(canonicalize).clone();
            *tally.entry(d).or_insert(0) += 1;
        }
    }
    Ok(tally)
}

/// Number of pairs of unordered partitions of `{1..n}` whose intersection
/// matrix lies in the class `d`.
pub fn multiplicity(d: &Diagram, n: usize, limits: &Limits) -> Result<u64> {
    if d.weight() as usize != n {
        return Err(Error::Precondition(format!(
            "diagram has weight {}, not {n}",
            d.weight()
        )));
    }
    Ok(diagram_multiplicities(n, limits)?
        .get(d)
        .copied()
        .unwrap_or(0))
}

/// `Σₙ yⁿ/n! · Σ_{|𝒟|=n} mult(𝒟)·𝕃^{α(𝒟)}𝕍^{β(𝒟)}` up to `n_max`.
pub fn expand_by_diagrams(n_max: usize, limits: &Limits) -> Result<BiPolynomial> {
    Limits::check("diagram order", n_max, limits.diagrams)?;
    let mut out = BiPolynomial::default();
    for n in 0..=n_max {
        let inv = Q::new(BigInt::from(1), factorial(n));
        for (d, mult) in diagram_multiplicities(n, limits)? {
            out.add_term(monomial(&d), Q::from_integer(BigInt::from(mult)) * &inv);
        }
    }
    Ok(out)
}

/// Every `IM_o(P¹, P²)` over pairs of ordered partitions of a `w`-set.
pub fn intersection_matrices_of_weight(
    w: usize,
    limits: &Limits,
) -> Result<BTreeSet<PackedMatrix>> {
    let ordered: Vec<_> = enumerate_ordered_partitions_within(w, limits)?.collect();
    let pairs = ordered.len().to_u64().unwrap_or(u64::MAX).saturating_pow(2);
    if pairs > 100_000_000 {
        return Err(Error::BoundExceeded {
            what: "ordered partition pairs",
            requested: pairs as usize,
            bound: 100_000_000,
        });
    }
    let mut out = BTreeSet::new();
    for p1 in &ordered {
        for p2 in &ordered {
            out.insert(intersection_matrix(p1, p2)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diag::{diagrams_of_weight, packed_matrices_of_weight};
    use crate::partitions::{bell_number, faa_di_bruno, types_of_weight};
    use crate::rational::{q, q_frac};

    fn mono(y: u32, l: &[usize], v: &[usize]) -> Monomial {
        Monomial {
            y_deg: y,
            l_exp: PartitionType::new(l.to_vec()),
            v_exp: PartitionType::new(v.to_vec()),
        }
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn direct_low_orders() {
        let e = expand_direct(2, &limits()).unwrap();
        assert_eq!(e.coeff(&Monomial::one()), q(1));
        assert_eq!(e.coeff(&mono(1, &[1], &[1])), q(1));
        // (L₁² + L₂)(V₁² + V₂)/2
        for (l, v) in [
            (&[2][..], &[2][..]),
            (&[2], &[0, 1]),
            (&[0, 1], &[2]),
            (&[0, 1], &[0, 1]),
        ] {
            assert_eq!(e.coeff(&mono(2, l, v)), q_frac(1, 2));
        }
        assert_eq!(e.len(), 6);
    }

    #[test]
    fn direct_matches_faa_di_bruno() {
        let e = expand_direct(5, &limits()).unwrap();
        for n in 0..=5usize {
            for a in types_of_weight(n) {
                for b in types_of_weight(n) {
                    let want = Q::new(faa_di_bruno(&a) * faa_di_bruno(&b), factorial(n));
                    let m = Monomial {
                        y_deg: n as u32,
                        l_exp: a.clone(),
                        v_exp: b,
                    };
                    assert_eq!(e.coeff(&m), want);
                }
            }
        }
    }

    #[test]
    fn cross_oracle_through_the_bound() {
        for n in 0..=6 {
            assert_eq!(
                expand_direct(n, &limits()).unwrap(),
                expand_by_diagrams(n, &limits()).unwrap()
            );
        }
    }

    #[test]
    fn small_multiplicities() {
        let one = canonicalize(&PackedMatrix::parse("1").unwrap());
        assert_eq!(multiplicity(&one, 1, &limits()).unwrap(), 1);
        assert!(multiplicity(&one, 2, &limits()).is_err());
        let two = diagram_multiplicities(2, &limits()).unwrap();
        let total: u64 = two.values().sum();
        assert_eq!(total, 4);
        assert_eq!(two.len(), 4);
    }

    #[test]
    fn multiplicities_sum_to_bell_squared() {
        for n in 0..=6 {
            let total: u64 = diagram_multiplicities(n, &limits()).unwrap().values().sum();
            let b = bell_number(n);
            assert_eq!(BigInt::from(total), &b * &b, "n = {n}");
        }
    }

    #[test]
    fn every_diagram_occurs() {
        for n in 0..=4 {
            let m = diagram_multiplicities(n, &limits()).unwrap();
            assert!(m.values().all(|&c| c > 0));
            let got: BTreeSet<_> = m.keys().cloned().collect();
            assert_eq!(got, diagrams_of_weight(n as u32));
        }
    }

    #[test]
    fn ordered_matching_is_onto() {
        for w in 0..=4 {
            assert_eq!(
                intersection_matrices_of_weight(w, &limits()).unwrap(),
                packed_matrices_of_weight(w as u32)
            );
        }
    }

    #[test]
    fn bounds() {
        let small = Limits {
            diagrams: 3,
            ..Limits::default()
        };
        assert_eq!(expand_by_diagrams(4, &small).unwrap_err().code(), "E_BOUND");
        assert_eq!(expand_direct(13, &limits()).unwrap_err().code(), "E_BOUND");
    }
}
