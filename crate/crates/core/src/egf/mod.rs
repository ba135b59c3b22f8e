//! Truncated exponential generating functions `Σ aₙ xⁿ/n!` over the
//! rationals, row-finite matrix transforms and substitution matrices.

mod expr;
mod matrix;
mod series;

pub use expr::parse_series;
pub use matrix::{
    apply_matrix, one_param_power, substitution_matrix, RowFiniteMatrix, SubstitutionMatrix,
};
pub use series::{exponential_formula, hadamard, Egf};
