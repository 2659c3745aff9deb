//! Exact arithmetic: sparse polynomials over Q, factored Laurent sums over
//! point differences, unreduced fractions and polynomial matrices.

mod factored;
mod fraction;
mod json;
mod matrix;
mod poly;
pub mod qlinalg;

pub use factored::{merge_factor, normalize_factored, Atom, FactoredSum, FactoredTerm, Factors, PointDiff};
pub use fraction::{PolyFraction, RationalVector};
pub use matrix::{det_adjugate, PolyMatrix};
pub use poly::{vandermonde_power, Coefficient, Monomial, SparsePolynomial, MAX_POINTS, MAX_VARS};

pub(crate) use poly::int;
