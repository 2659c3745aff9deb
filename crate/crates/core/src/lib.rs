//! Exact solutions of Knizhnik–Zamolodchikov systems valued in irreducible
//! representations of the symmetric group, built from iterated residues of
//! hypergeometric forms.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exactalg;
pub mod kzsolve;
pub mod residue;
pub mod shapes;
pub mod verify;

pub use error::{AlgebraError, KzError, ResidueError, Result, ShapeError};
pub use exactalg::{PolyFraction, PolyMatrix, SparsePolynomial};
pub use shapes::{Numbering, Partition, Tabloid};
