//! Exact construction and analysis of metric Lie algebras over the
//! rationals: invariant forms, derivation algebras, oscillator algebras and
//! double extensions.

pub mod constructions;
pub mod derivations;
pub mod error;
pub mod forms;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod reproduce;

pub use error::{Error, Result};
pub use forms::{invariant_forms, metric_dimension, BilinearForm, InvariantFormSpace};
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Rational, Subspace};
