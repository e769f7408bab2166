//! Exact arithmetic over GF(p) and dense linear algebra.

mod field;
mod gf2;
mod matrix;
mod subspace;

pub use field::{is_prime, FieldElement, PrimeField};
pub use matrix::{dot, rank_solve, Matrix, RankSolve, Rref};
pub use subspace::{Echelon, Subspace};
