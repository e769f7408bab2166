use std::sync::Arc;

use crate::gfcore::{Matrix, Subspace};
use crate::matrixgroup::Group;
use crate::polyact::{GradedBasis, GradedRing, Polynomial, SymPowers};

/// `k[V]^G_d` for `d = 0..=D`, each as an echelon-canonical basis in monomial
/// coordinates.
#[derive(Clone, Debug)]
pub struct InvariantTable {
    ring: Arc<GradedRing>,
    bases: Vec<GradedBasis>,
}

impl InvariantTable {
    pub fn compute(g: &Group, max_degree: usize) -> Self {
        let ring = Arc::new(GradedRing::new(g.field(), g.dim(), max_degree));
        Self::with_ring(g, ring)
    }

    /// Uses an existing ring; the table reaches the ring's maximum degree.
    pub fn with_ring(g: &Group, ring: Arc<GradedRing>) -> Self {
        let inverses: Vec<Matrix> = g
            .generators()
            .iter()
            .map(|s| s.inverse().expect("group generators are invertible"))
            .collect();
        let mut stream = SymPowers::new(&ring, inverses);
        let mut bases = Vec::with_capacity(ring.max_degree() + 1);
        for d in 0..=ring.max_degree() {
            stream.advance_to(d);
            let sub = fixed_coordinates(&ring, d, stream.matrices());
            bases.push(GradedBasis::new(ring.space(d).clone(), sub));
        }
        Self { ring, bases }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, d: usize) -> &GradedBasis {
        &self.bases[d]
    }

    pub fn dim(&self, d: usize) -> usize {
        self.bases[d].dim()
    }

    /// `dim k[V]^G_d` for `d = 0..=D`.
    pub fn hilbert_series(&self) -> Vec<usize> {
        self.bases.iter().map(GradedBasis::dim).collect()
    }

    pub fn polynomials(&self, d: usize) -> Vec<Polynomial> {
        self.bases[d].polynomials()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        match f.degree() {
            None => true,
            Some(d) if d <= self.max_degree() && f.is_homogeneous() => {
                self.bases[d].contains(f).unwrap_or(false)
            }
            Some(_) => false,
        }
    }
}

/// Vectors `c` with `c·R = c` for every matrix `R` (images of monomials as rows).
fn fixed_coordinates(ring: &GradedRing, d: usize, mats: &[Matrix]) -> Subspace {
    let f = ring.field();
    let dim = ring.dim(d);
    if mats.is_empty() {
        return Subspace::full(f, dim);
    }
    let mut rows = Vec::with_capacity(mats.len() * dim);
    for m in mats {
        rows.extend(m.minus_identity().transpose().to_rows());
    }
    Matrix::from_row_vectors(f, dim, &rows).kernel()
}

/// `k[V]^G_d` on its own.
pub fn invariant_basis(g: &Group, d: usize) -> GradedBasis {
    InvariantTable::compute(g, d).basis(d).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixgroup::fixtures;

    #[test]
    fn paper_low_degrees() {
        let g = fixtures::paper_example();
        let f = g.field();
        let t = InvariantTable::compute(&g, 3);
        assert_eq!(t.dim(0), 1);
        assert_eq!(t.dim(1), 2);
        let lin = t.polynomials(1);
        assert_eq!(lin, vec![Polynomial::var(f, 4, 0), Polynomial::var(f, 4, 1)]);
        let x = |i| Polynomial::var(f, 4, i);
        let f3 = x(0)
            .mul(&x(2))
            .mul(&x(0).add(&x(2)))
            .add(&x(1).mul(&x(3)).mul(&x(1).add(&x(3))));
        assert!(t.contains(&f3));
        assert!(!t.contains(&x(2)));
    }

    #[test]
    fn one_transvection_series() {
        let t = InvariantTable::compute(&fixtures::single_transvection(2), 5);
        assert_eq!(t.hilbert_series(), vec![1, 1, 2, 2, 3, 3]);
    }
}
