//! Labelled diagrams (packed matrices), diagrams (their permutation
//! classes) and the Hopf algebra structure on their linear spans.
//!
//! The product is superposition, i.e. the block-diagonal sum of packed
//! matrices. The coproduct `Δ_WS` splits the rows (white spots) of a matrix
//! into every ordered pair of complementary subsets and packs each half;
//! `Δ_BS` does the same with columns (black spots). On diagrams the
//! labelled coproduct is applied to the canonical representative and each
//! tensor factor canonicalized.

mod algebra;
mod canon;
mod dot;
mod element;
mod json;
mod monomial;
mod packed;

pub use algebra::{
    antipode, antipode_with, convolve, counit, delta, delta_bs, delta_left, delta_right,
    delta_with, delta_ws, star, tensor_star, unit_counit, Antipode, HopfBasis, Side,
};
pub use canon::{canonicalize, Diagram};
pub use dot::to_dot;
pub use element::{LinComb, Tensor, Tensor3};
pub use json::{element_from_json, element_to_json, tensor_from_json, tensor_to_json, MatrixBasis};
pub use monomial::{double_variables, monomial, Monomial};
pub use packed::{pack, packed_matrices_of_weight, parse_matrix, PackedMatrix};

use std::collections::BTreeSet;

/// Labelled-algebra element `Σ λ_M M`.
pub type LDiagElement = LinComb<PackedMatrix>;
/// Element of the algebra spanned by diagrams.
pub type DiagElement = LinComb<Diagram>;

/// Every diagram of total weight `w`.
pub fn diagrams_of_weight(w: u32) -> BTreeSet<Diagram> {
    packed_matrices_of_weight(w)
        .iter()
        .map(canonicalize)
        .collect()
}
