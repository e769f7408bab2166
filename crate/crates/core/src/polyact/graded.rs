use std::collections::HashMap;
use std::sync::Arc;

use super::monomial::{monomials_of_degree, Monomial};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::gfcore::{Matrix, PrimeField, Subspace};

/// The monomial coordinate system of `k[V]_d`, largest monomial first.
#[derive(Debug)]
pub struct DegreeSpace {
    n: usize,
    degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeSpace {
    pub fn new(n: usize, degree: usize) -> Self {
        let monomials = monomials_of_degree(n, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self {
            n,
            degree,
            monomials,
            index,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coefficient vector of a polynomial homogeneous of this degree.
    pub fn coords(&self, f: &Polynomial) -> Result<Vec<u32>> {
        let mut v = vec![0u32; self.dim()];
        for (m, c) in f.terms() {
            let i = self.index_of(m).ok_or_else(|| {
                Error::Dimension(format!("term {m} is not of degree {}", self.degree))
            })?;
            v[i] = c;
        }
        Ok(v)
    }

    pub fn poly(&self, field: PrimeField, v: &[u32]) -> Polynomial {
        assert_eq!(v.len(), self.dim());
        Polynomial::from_terms(
            field,
            self.n,
            v.iter()
                .zip(&self.monomials)
                .filter(|(&c, _)| c != 0)
                .map(|(&c, m)| (m.clone(), c)),
        )
    }
}

/// Monomial coordinates of `k[V]_0, ..., k[V]_D` together with the tables for
/// multiplying a coordinate vector by a variable.
#[derive(Debug)]
pub struct GradedRing {
    field: PrimeField,
    n: usize,
    spaces: Vec<Arc<DegreeSpace>>,
    /// `up[d][a * n + k]`: index in degree `d + 1` of monomial `a` times `x_{k+1}`.
    up: Vec<Vec<usize>>,
    /// `down[d][j]`: for monomial `j` of degree `d + 1`, its first variable
    /// `i` and the index of `m_j / x_i` in degree `d`.
    down: Vec<Vec<(usize, usize)>>,
}

impl GradedRing {
    pub fn new(field: PrimeField, n: usize, max_degree: usize) -> Self {
        let spaces: Vec<Arc<DegreeSpace>> = (0..=max_degree)
            .map(|d| Arc::new(DegreeSpace::new(n, d)))
            .collect();
        let mut up = Vec::with_capacity(max_degree);
        let mut down = Vec::with_capacity(max_degree);
        for d in 0..max_degree {
            let (lo, hi) = (&spaces[d], &spaces[d + 1]);
            let mut table = Vec::with_capacity(lo.dim() * n);
            for m in lo.monomials() {
                for k in 0..n {
                    table.push(hi.index_of(&m.mul_var(k)).expect("degree d+1 monomial"));
                }
            }
            up.push(table);
            down.push(
                hi.monomials()
                    .iter()
                    .map(|m| {
                        let i = m.first_var().expect("positive degree");
                        let mut e = m.exponents().to_vec();
                        e[i] -= 1;
                        (i, lo.index_of(&Monomial::from_exponents(&e)).expect("degree d"))
                    })
                    .collect(),
            );
        }
        Self {
            field,
            n,
            spaces,
            up,
            down,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, d: usize) -> &Arc<DegreeSpace> {
        &self.spaces[d]
    }

    pub fn dim(&self, d: usize) -> usize {
        self.spaces[d].dim()
    }

    /// Coordinates of `f` in `k[V]_d`; `f` must be zero or homogeneous of degree `d`.
    pub fn coords(&self, d: usize, f: &Polynomial) -> Result<Vec<u32>> {
        if d > self.max_degree() {
            return Err(Error::Dimension(format!(
                "degree {d} beyond the configured maximum {}",
                self.max_degree()
            )));
        }
        self.spaces[d].coords(f)
    }

    pub fn poly(&self, d: usize, v: &[u32]) -> Polynomial {
        self.spaces[d].poly(self.field, v)
    }

    /// `x_{k+1} · v` for `v` in degree `d`.
    pub fn shift(&self, d: usize, v: &[u32], k: usize) -> Vec<u32> {
        let table = &self.up[d];
        let mut out = vec![0u32; self.dim(d + 1)];
        for (a, &c) in v.iter().enumerate() {
            if c != 0 {
                out[table[a * self.n + k]] = c;
            }
        }
        out
    }

    /// `m · v` for `v` in degree `d` and a monomial `m`.
    pub fn shift_by(&self, d: usize, v: &[u32], m: &Monomial) -> Vec<u32> {
        let mut cur = v.to_vec();
        let mut deg = d;
        for (k, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                cur = self.shift(deg, &cur, k);
                deg += 1;
            }
        }
        cur
    }

    /// `g · v` for `v` in degree `d` and `g` homogeneous of degree `e`, landing
    /// in degree `d + e`.
    pub fn mul_poly(&self, d: usize, v: &[u32], g: &Polynomial) -> Vec<u32> {
        let f = self.field;
        let e = g.degree().unwrap_or(0);
        let mut out = vec![0u32; self.dim(d + e)];
        for (m, c) in g.terms() {
            let part = self.shift_by(d, v, m);
            for (t, &x) in out.iter_mut().zip(&part) {
                *t = f.mul_add(*t, c, x);
            }
        }
        out
    }

    /// Every `x_k · v` for `v` among `rows` (degree `d`).
    pub fn shift_all(&self, d: usize, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(rows.len() * self.n);
        for v in rows {
            for k in 0..self.n {
                out.push(self.shift(d, v, k));
            }
        }
        out
    }

    /// Matrix of `f ↦ L·f` on degree `d + 1` from the one on degree `d`, where
    /// `l` substitutes `x_i ↦ Σ_k l[i][k] x_k` and `prev` has the images of the
    /// degree-`d` monomials as rows.
    pub fn lift(&self, d: usize, prev: &Matrix, l: &Matrix) -> Matrix {
        let f = self.field;
        let n = self.n;
        let table = &self.up[d];
        let dim_hi = self.dim(d + 1);
        let mut data = vec![0u32; dim_hi * dim_hi];
        for (j, &(i, jp)) in self.down[d].iter().enumerate() {
            let row = &mut data[j * dim_hi..(j + 1) * dim_hi];
            let lrow = l.row(i);
            for (a, &c) in prev.row(jp).iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (k, &lk) in lrow.iter().enumerate() {
                    if lk != 0 {
                        let t = &mut row[table[a * n + k]];
                        *t = f.mul_add(*t, c, lk);
                    }
                }
            }
        }
        Matrix::from_data(f, dim_hi, dim_hi, data)
    }
}

/// Symmetric powers of a family of linear substitutions, one degree at a time.
///
/// Only the current degree is kept; `advance` builds the next one from it.
pub struct SymPowers<'a> {
    ring: &'a GradedRing,
    forms: Vec<Matrix>,
    degree: usize,
    current: Vec<Matrix>,
}

impl<'a> SymPowers<'a> {
    /// `forms[s]` has the image of `x_{i+1}` in row `i`.
    pub fn new(ring: &'a GradedRing, forms: Vec<Matrix>) -> Self {
        let one = Matrix::identity(ring.field(), 1);
        let current = vec![one; forms.len()];
        Self {
            ring,
            forms,
            degree: 0,
            current,
        }
    }

    /// Substitutions realizing the action of every element of `g`, in element
    /// order: `σ·x_i` is row `i` of `σ^{-1}`.
    pub fn for_group(ring: &'a GradedRing, g: &crate::matrixgroup::Group) -> Self {
        Self::new(ring, g.inverses().to_vec())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Rows are the images of the monomials of the current degree.
    pub fn matrices(&self) -> &[Matrix] {
        &self.current
    }

    pub fn advance(&mut self) {
        let d = self.degree;
        let next: Vec<Matrix> = self
            .current
            .iter()
            .zip(&self.forms)
            .map(|(m, l)| self.ring.lift(d, m, l))
            .collect();
        self.current = next;
        self.degree += 1;
    }

    pub fn advance_to(&mut self, d: usize) {
        assert!(d >= self.degree, "symmetric powers only move upward");
        while self.degree < d {
            self.advance();
        }
    }
}

/// A subspace of `k[V]_d`, held in monomial coordinates.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    degree: usize,
    space: Arc<DegreeSpace>,
    subspace: Subspace,
}

impl GradedBasis {
    pub fn new(space: Arc<DegreeSpace>, subspace: Subspace) -> Self {
        assert_eq!(space.dim(), subspace.ambient());
        Self {
            degree: space.degree(),
            space,
            subspace,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn space(&self) -> &Arc<DegreeSpace> {
        &self.space
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        self.subspace.basis()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        let f = self.subspace.field();
        self.vectors().iter().map(|v| self.space.poly(f, v)).collect()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.subspace.contains(&self.space.coords(f)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixgroup::fixtures;

    #[test]
    fn shift_matches_polynomial_product() {
        let f = PrimeField::new(3).unwrap();
        let ring = GradedRing::new(f, 3, 5);
        let p = Polynomial::var(f, 3, 0)
            .mul(&Polynomial::var(f, 3, 2))
            .add(&Polynomial::var(f, 3, 1).pow(2).scale(2));
        let v = ring.coords(2, &p).unwrap();
        for k in 0..3 {
            let expect = p.mul(&Polynomial::var(f, 3, k));
            assert_eq!(ring.poly(3, &ring.shift(2, &v, k)), expect);
        }
        let m = Monomial::from_exponents(&[1, 0, 2]);
        assert_eq!(
            ring.poly(5, &ring.shift_by(2, &v, &m)),
            p.mul_monomial(&m, 1)
        );
    }

    #[test]
    fn stream_matches_substitution() {
        let g = fixtures::mixed_gf3();
        let f = g.field();
        let ring = GradedRing::new(f, 3, 6);
        let mut stream = SymPowers::for_group(&ring, &g);
        for d in 0..=6 {
            stream.advance_to(d);
            let space = ring.space(d);
            for (s, mat) in stream.matrices().iter().enumerate() {
                let rows = g.inverse_of(s).to_rows();
                for (j, m) in space.monomials().iter().enumerate() {
                    let image = Polynomial::monomial(f, m.clone(), 1).substitute_linear(&rows);
                    assert_eq!(mat.row(j), space.coords(&image).unwrap().as_slice());
                }
            }
        }
    }
}
