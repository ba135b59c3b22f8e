use num_traits::One;

use crate::diag::{delta_ws, diagrams_of_weight, monomial, Diagram, LinComb, Monomial};
use crate::poly::{Poly, Var};
use crate::rational::Q;
use crate::{Limits, Result};

/// `m(𝒟, 𝕃, 𝕍, y)` with each `Lⱼ` replaced by `rename(j)` and, when
/// `unit_v`, every `Vⱼ` set to 1.
fn specialize(m: &Monomial, unit_v: bool, rename: impl Fn(u32) -> Poly<Var>) -> Poly<Var> {
    Poly::monomial(m.to_mono(), Q::one()).substitute(|v| match *v {
        Var::L(j) => rename(j),
        Var::V(_) if unit_v => Poly::one(),
        other => Poly::var(other),
    })
}

fn both_sides(d: &Diagram, unit_v: bool) -> (Poly<Var>, Poly<Var>) {
    let doubled = specialize(&monomial(d), unit_v, |j| {
        Poly::var(Var::LPrime(j)).add(&Poly::var(Var::LDoublePrime(j)))
    });
    let mut split = Poly::zero();
    for ((d1, d2), c) in delta_ws(&LinComb::basis(d.clone())).terms() {
        let left = specialize(&monomial(d1), unit_v, |j| Poly::var(Var::LPrime(j)));
        let right = specialize(&monomial(d2), unit_v, |j| Poly::var(Var::LDoublePrime(j)));
        split = split.add(&left.mul(&right).scale(c));
    }
    (doubled, split)
}

/// Checks `m(d, 𝕃′+𝕃″, 1, y) = Σ m(d₍₁₎, 𝕃′, 1, y)·m(d₍₂₎, 𝕃″, 1, y)` over
/// the terms of `Δ_WS(d)`.
pub fn sweedler_holds(d: &Diagram) -> bool {
    let (doubled, split) = both_sides(d, true);
    doubled == split
}

/// Diagrams of weight at most `max_weight` for which the identity fails,
/// together with the number of diagrams checked.
pub fn sweedler_check(max_weight: u32, limits: &Limits) -> Result<(usize, Vec<Diagram>)> {
    Limits::check("diagram order", max_weight as usize, limits.diagrams)?;
    let mut checked = 0;
    let mut failures = Vec::new();
    for w in 0..=max_weight {
        for d in diagrams_of_weight(w) {
            checked += 1;
            if !sweedler_holds(&d) {
                failures.push(d);
            }
        }
    }
    Ok((checked, failures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diag::{canonicalize, PackedMatrix};

    fn d(t: &str) -> Diagram {
        canonicalize(&PackedMatrix::parse(t).unwrap())
    }

    #[test]
    fn holds_up_to_weight_four() {
        let (checked, failures) = sweedler_check(4, &Limits::default()).unwrap();
        assert!(failures.is_empty());
        assert_eq!(
            checked,
            (0..=4).map(|w| diagrams_of_weight(w).len()).sum::<usize>()
        );
    }

    #[test]
    fn needs_unit_v() {
        // splitting the rows of one column of degree 2 leaves V₁² on the
        // right against V₂ on the left
        let (doubled, split) = both_sides(&d("1;1"), false);
        assert_ne!(doubled, split);
        assert!(sweedler_holds(&d("1;1")));
        let (doubled, split) = both_sides(&d("1 1"), false);
        assert_eq!(doubled, split);
    }

    #[test]
    fn bound() {
        let small = Limits {
            diagrams: 3,
            ..Limits::default()
        };
        assert_eq!(sweedler_check(4, &small).unwrap_err().code(), "E_BOUND");
    }
}
