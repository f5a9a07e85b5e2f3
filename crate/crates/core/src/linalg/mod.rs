//! Exact dense linear algebra over the rationals.

pub mod congruence;
pub mod matrix;
pub mod rational;
pub mod reduce;
pub mod subspace;

pub use congruence::{congruence_diagonalize, signature, Congruence};
pub use matrix::Matrix;
pub use rational::{format_rational, frac, int, one, parse_rational, zero, Rational};
pub use reduce::{RowReducer, SparseRow};
pub use subspace::{unit_vector, Subspace};
