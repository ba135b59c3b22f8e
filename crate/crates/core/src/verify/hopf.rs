use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diag::{
    counit, delta_left, delta_right, delta_with, diagrams_of_weight, packed_matrices_of_weight,
    star, tensor_star, unit_counit, Antipode, HopfBasis, LinComb, Side, Tensor,
};
use crate::rational::Q;
use crate::{Error, Result};

/// Whether a check ran over basis elements or random linear combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Basis,
    Random,
}

/// Outcome of one axiom over one weight (basis scope) or over the random
/// samples (random scope, `weight` is the largest sampled weight).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub algebra: String,
    pub coproduct: String,
    pub scope: Scope,
    pub weight: u32,
    pub cases: usize,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// JSON array with one object per check.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.checks).expect("report serializes")
    }
}

/// Accumulates cases for each `(axiom, scope, weight)` and keeps the
/// first counterexample.
struct Tally {
    algebra: String,
    coproduct: String,
    entries: BTreeMap<(Scope, u32, usize), (usize, Option<String>)>,
    names: Vec<&'static str>,
}

impl Tally {
    fn record(
        &mut self,
        axiom: &'static str,
        scope: Scope,
        weight: u32,
        ok: bool,
        case: impl FnOnce() -> String,
    ) {
        let idx = match self.names.iter().position(|n| *n == axiom) {
            Some(i) => i,
            None => {
                self.names.push(axiom);
                self.names.len() - 1
            }
        };
        let entry = self
            .entries
            .entry((scope, weight, idx))
            .or_insert((0, None));
        entry.0 += 1;
        if !ok && entry.1.is_none() {
            entry.1 = Some(case());
        }
    }

    fn finish(self) -> Vec<AxiomCheck> {
        self.entries
            .into_iter()
            .map(
                |((scope, weight, idx), (cases, counterexample))| AxiomCheck {
                    axiom: self.names[idx],
                    algebra: self.algebra.clone(),
                    coproduct: self.coproduct.clone(),
                    scope,
                    weight,
                    cases,
                    status: if counterexample.is_none() {
                        "pass"
                    } else {
                        "fail"
                    },
                    counterexample,
                },
            )
            .collect()
    }
}

type Split<'a, B> = &'a dyn Fn(&B) -> Vec<(B, B)>;

struct Checker<'a, B: HopfBasis> {
    split: Split<'a, B>,
    antipode: Antipode<B, Split<'a, B>>,
}

impl<'a, B: HopfBasis> Checker<'a, B> {
    fn delta(&self, x: &LinComb<B>) -> Tensor<B> {
        delta_with(x, self.split)
    }

    /// The single-element axioms, recorded under `weight`.
    fn linear_axioms(&self, x: &LinComb<B>, scope: Scope, weight: u32, tally: &mut Tally) {
        let d = self.delta(x);
        let show = || x.to_string();

        let left = delta_left(&d, self.split);
        let right = delta_right(&d, self.split);
        tally.record("coassociativity", scope, weight, left == right, show);

        let counit_left: LinComb<B> = d
            .terms()
            .map(|((a, b), c)| (b.clone(), c * counit(&LinComb::basis(a.clone()))))
            .collect();
        tally.record("counit_left", scope, weight, counit_left == *x, show);
        let counit_right: LinComb<B> = d
            .terms()
            .map(|((a, b), c)| (a.clone(), c * counit(&LinComb::basis(b.clone()))))
            .collect();
        tally.record("counit_right", scope, weight, counit_right == *x, show);

        tally.record("cocommutativity", scope, weight, d.flip() == d, show);

        if let [(b, _)] = x.terms().collect::<Vec<_>>()[..] {
            let graded = d
                .terms()
                .all(|((l, r), _)| l.weight() + r.weight() == b.weight());
            tally.record("grading", scope, weight, graded, show);
        }

        let target = unit_counit(x);
        let s_left = d.contract(
            |a| self.antipode.basis(a),
            |b| LinComb::basis(b.clone()),
            |a, b| a.star(b),
        );
        tally.record("antipode_left", scope, weight, s_left == target, show);
        let s_right = d.contract(
            |a| LinComb::basis(a.clone()),
            |b| self.antipode.basis(b),
            |a, b| a.star(b),
        );
        tally.record("antipode_right", scope, weight, s_right == target, show);
    }

    fn product_axioms(
        &self,
        x: &LinComb<B>,
        y: &LinComb<B>,
        scope: Scope,
        weight: u32,
        tally: &mut Tally,
    ) {
        let show = || format!("x = {x}; y = {y}");
        let lhs = self.delta(&star(x, y));
        let rhs = tensor_star(&self.delta(x), &self.delta(y));
        tally.record("multiplicativity", scope, weight, lhs == rhs, show);
        let counit_mult = counit(&star(x, y)) == counit(x) * counit(y);
        let weights_add = star(x, y).terms().all(|(b, _)| {
            x.terms().any(|(u, _)| {
                y.terms()
                    .any(|(v, _)| u.weight() + v.weight() == b.weight())
            })
        });
        tally.record("product_grading", scope, weight, weights_add, show);
        tally.record("counit_multiplicative", scope, weight, counit_mult, show);
    }
}

fn random_combination<B: HopfBasis>(pool: &[B], rng: &mut ChaCha8Rng) -> LinComb<B> {
    let n = rng.gen_range(1..=3);
    let mut out = LinComb::zero();
    for _ in 0..n {
        let b = pool.choose(rng).expect("pool is nonempty").clone();
        let num: i64 = rng.gen_range(-5..=5);
        let den: i64 = rng.gen_range(1..=4);
        out.add_term(b, Q::new(num.into(), den.into()));
    }
    out
}

/// Runs every axiom for one algebra and splitting rule.
///
/// `basis[w]` lists the basis elements of weight `w`. Basis checks are
/// exhaustive; products use every pair whose weights add up to at most the
/// largest weight. `samples` random combinations (and as many random pairs)
/// are drawn from the whole basis.
pub fn check_axioms<B: HopfBasis>(
    algebra: &str,
    coproduct: &str,
    basis: &[Vec<B>],
    split: &dyn Fn(&B) -> Vec<(B, B)>,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<AxiomCheck> {
    let checker = Checker {
        split,
        antipode: Antipode::new(split),
    };
    let mut tally = Tally {
        algebra: algebra.to_string(),
        coproduct: coproduct.to_string(),
        entries: BTreeMap::new(),
        names: Vec::new(),
    };
    let max_weight = basis.len().saturating_sub(1) as u32;

    for (w, elems) in basis.iter().enumerate() {
        for b in elems {
            checker.linear_axioms(
                &LinComb::basis(b.clone()),
                Scope::Basis,
                w as u32,
                &mut tally,
            );
        }
    }
    for (w1, xs) in basis.iter().enumerate() {
        for (w2, ys) in basis.iter().enumerate().take(basis.len() - w1) {
            for x in xs {
                for y in ys {
                    let (x, y) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
                    checker.product_axioms(&x, &y, Scope::Basis, (w1 + w2) as u32, &mut tally);
                }
            }
        }
    }

    let pool: Vec<B> = basis.iter().flatten().cloned().collect();
    if !pool.is_empty() {
        for _ in 0..samples {
            let x = random_combination(&pool, rng);
            checker.linear_axioms(&x, Scope::Random, max_weight, &mut tally);
            let y = random_combination(&pool, rng);
            checker.product_axioms(&x, &y, Scope::Random, max_weight, &mut tally);
        }
        // the zero element satisfies every axiom
        let zero = LinComb::zero();
        checker.linear_axioms(&zero, Scope::Random, max_weight, &mut tally);
        checker.product_axioms(&zero, &zero, Scope::Random, max_weight, &mut tally);
    }
    tally.finish()
}

/// Bialgebra, counit, cocommutativity and antipode axioms on both the
/// labelled and unlabelled algebra, for both coproducts.
pub fn hopf_axiom_suite(max_weight: u32, samples: usize, seed: u64) -> Result<HopfReport> {
    if max_weight > 5 {
        return Err(Error::BoundExceeded {
            what: "axiom suite weight",
            requested: max_weight as usize,
            bound: 5,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labelled: Vec<Vec<_>> = (0..=max_weight)
        .map(|w| packed_matrices_of_weight(w).into_iter().collect())
        .collect();
    let classes: Vec<Vec<_>> = (0..=max_weight)
        .map(|w| diagrams_of_weight(w).into_iter().collect())
        .collect();
    let mut checks = Vec::new();
    for (side, name) in [(Side::WhiteSpots, "ws"), (Side::BlackSpots, "bs")] {
        checks.extend(check_axioms(
            "LDiag",
            name,
            &labelled,
            &|b| b.splits(side),
            samples,
            &mut rng,
        ));
        checks.extend(check_axioms(
            "Diag",
            name,
            &classes,
            &|b| b.splits(side),
            samples,
            &mut rng,
        ));
    }
    Ok(HopfReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diag::PackedMatrix;

    #[test]
    fn small_suite_passes() {
        let report = hopf_axiom_suite(2, 10, 7).unwrap();
        assert!(report.all_passed(), "{}", report.to_json());
        assert!(report
            .checks
            .iter()
            .any(|c| c.axiom == "antipode_right" && c.algebra == "Diag"));
    }

    #[test]
    fn suite_is_deterministic() {
        assert_eq!(
            hopf_axiom_suite(2, 5, 3).unwrap(),
            hopf_axiom_suite(2, 5, 3).unwrap()
        );
    }

    #[test]
    fn suite_bound() {
        assert_eq!(hopf_axiom_suite(6, 0, 0).unwrap_err().code(), "E_BOUND");
    }

    #[test]
    fn corrupted_coproduct_is_caught() {
        let basis: Vec<Vec<PackedMatrix>> = (0..=3)
            .map(|w| packed_matrices_of_weight(w).into_iter().collect())
            .collect();
        let broken = |b: &PackedMatrix| -> Vec<(PackedMatrix, PackedMatrix)> {
            b.splits(Side::WhiteSpots)
                .into_iter()
                .filter(|(l, r)| !(l.is_unit() && !r.is_unit()))
                .collect()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let checks = check_axioms("LDiag", "broken", &basis, &broken, 5, &mut rng);
        let failed: Vec<_> = checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.axiom)
            .collect();
        assert!(failed.contains(&"counit_left"));
        assert!(failed.contains(&"coassociativity"));
        let bad = checks.iter().find(|c| !c.passed()).unwrap();
        assert!(bad.counterexample.is_some());
        assert!(HopfReport { checks }
            .to_json()
            .contains("\"status\": \"fail\""));
    }
}
