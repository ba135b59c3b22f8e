//! Exact combinatorics of boson normal ordering and diagram Hopf algebras.
//!
//! The crate is organised bottom-up:
//!
//! - [`weyl`]: Weyl-algebra normal forms, generalized Stirling matrices and
//!   the rook-board picture of a single boson word.
//! - [`egf`]: truncated exponential generating functions with exact rational
//!   coefficients, row-finite matrix transforms and one-parameter groups of
//!   substitution matrices.
//! - [`partitions`]: set partitions, partition types, Faà di Bruno
//!   coefficients, complete Bell polynomials and intersection matrices.
//! - [`diag`]: packed matrices (labelled diagrams), their classes (diagrams),
//!   the superposition product, the white/black-spot coproducts, counit and
//!   antipode.
//! - [`verify`]: brute-force oracles for the double exponential formula and
//!   executable bialgebra/Hopf axiom checks.
//! - [`cli`]: the command-line frontend used by the `boson-hopf` binary.

pub mod cli;
pub mod diag;
pub mod egf;
mod error;
pub mod limits;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use limits::Limits;
