use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("bracket table is not antisymmetric at ({i}, {j})")]
    Antisymmetry { i: usize, j: usize },

    #[error("Jacobi identity fails on {} triple(s), first ({}, {}, {})", .0.len(), .0[0].0, .0[0].1, .0[0].2)]
    Jacobi(Vec<(usize, usize, usize)>),

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("bilinear form is not invariant on {} triple(s), first ({}, {}, {})", .0.len(), .0[0].0, .0[0].1, .0[0].2)]
    NotInvariant(Vec<(usize, usize, usize)>),

    #[error("span is not closed under the commutator: [{i}, {j}] escapes")]
    NotClosed { i: usize, j: usize },

    #[error("invalid parameters: {0}")]
    InvalidSpec(String),

    #[error("double extension precondition failed: {0}")]
    Extension(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
