//! Brute-force oracles tying the modules together: the double exponential
//! expansion computed directly and through diagram multiplicities, the
//! bialgebra and antipode axioms, and the compatibility of the white-spot
//! coproduct with variable doubling.

mod expansion;
mod hopf;
mod sweedler;

pub use expansion::{
    diagram_multiplicities, expand_by_diagrams, expand_direct, intersection_matrices_of_weight,
    multiplicity, BiPolynomial,
};
pub use hopf::{check_axioms, hopf_axiom_suite, AxiomCheck, HopfReport, Scope};
pub use sweedler::{sweedler_check, sweedler_holds};
