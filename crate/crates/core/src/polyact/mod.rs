//! Polynomials over GF(p), their grading, and the group action on them.

mod action;
mod graded;
mod monomial;
mod polynomial;

pub use action::{
    act, act_by_inverse, delta, orbit, orbit_norm, transfer, twist_weights, twisted_transfer,
    weighted_sum_matrix,
};
pub(crate) use action::weighted_sum;
pub use graded::{DegreeSpace, GradedBasis, GradedRing, SymPowers};
pub use monomial::{count_of_degree, monomials_of_degree, Monomial};
pub use polynomial::Polynomial;
