use thiserror::Error;

use crate::exactalg::SparsePolynomial;

/// Failures of exact polynomial arithmetic.
#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("negative exponent {0} in polynomial power")]
    NegativeExponent(i64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible; remainder {remainder}")]
    NotDivisible { remainder: SparsePolynomial },
    #[error("factored sum does not reduce to a polynomial; remainder {remainder}")]
    NonPolynomial { remainder: SparsePolynomial },
    #[error("factored sum still contains the live variable t{0}")]
    LiveAtom(u16),
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} variables requested, at most {max} supported", max = crate::exactalg::MAX_VARS)]
    TooManyVariables(usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Debug, Clone, Error)]
pub enum ShapeError {
    #[error("invalid partition {0:?}: parts must be positive and non-increasing")]
    InvalidPartition(Vec<usize>),
    #[error("numbering is not a bijection onto 1..={0}")]
    InvalidNumbering(usize),
    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("level {level} out of range 1..{rows}")]
    LevelOutOfRange { level: usize, rows: usize },
    #[error("transposition character of {0:?} gives a non-integral fixed-space dimension")]
    NonIntegralFixedDimension(Vec<usize>),
    #[error("tabloid shape {found:?} does not match {expected:?}")]
    ShapeMismatch { expected: Vec<usize>, found: Vec<usize> },
}

#[derive(Debug, Clone, Error)]
pub enum ResidueError {
    #[error("variable t{0} is not live in the form")]
    NotLive(u16),
    #[error("cannot take a residue of t{0} at itself")]
    CenterIsVariable(u16),
    #[error("step for t{var} is centred at t{center}, which is integrated later")]
    IllFormedSchedule { var: u16, center: u16 },
    #[error("plan does not cover the live variables (missing t{0})")]
    PlanMismatch(u16),
}

/// Top-level error for the solver and verifier.
#[derive(Debug, Clone, Error)]
pub enum KzError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Residue(#[from] ResidueError),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("parameter m must be non-zero")]
    ZeroParameter,
    #[error("fundamental matrix is singular")]
    Singular,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = KzError> = std::result::Result<T, E>;
