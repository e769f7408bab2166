use std::fmt;

use super::field::PrimeField;
use super::gf2;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Output of [`rank_solve`].
#[derive(Clone, Debug)]
pub struct RankSolve {
    pub rank: usize,
    /// A particular solution of `A x = b`, when `b` was given and the system
    /// is consistent.
    pub solution: Option<Vec<u32>>,
    pub kernel: Subspace,
}

impl Matrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != c {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
            data.extend(row.iter().map(|&v| field.reduce(v)));
        }
        Ok(Self {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds a matrix from already-reduced residues.
    pub fn from_data(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < field.p()));
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_row_vectors(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Self::from_data(field, rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zero(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Self::zero(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * other.get(k, j) as u64) % p;
                }
            }
            for (j, &v) in acc.iter().enumerate() {
                out.set(i, j, v as u32);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| dot(self.field, self.row(i), v))
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.mul_add(*o, c, self.get(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |f, a, b| f.sub(a, b))
    }

    fn zip(&self, other: &Self, op: impl Fn(PrimeField, u32, u32) -> u32) -> Result<Self> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| op(self.field, a, b))
            .collect();
        Ok(Self::from_data(self.field, self.rows, self.cols, data))
    }

    /// `self - I` for square matrices.
    pub fn minus_identity(&self) -> Self {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i);
            m.set(i, i, self.field.sub(v, 1));
        }
        m
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        let data = self.data.iter().map(|&v| f.mul(v, c)).collect();
        Self::from_data(f, self.rows, self.cols, data)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("square");
            }
            base = base.mul(&base).expect("square");
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form, leading coefficients 1.
    pub fn rref(&self) -> Rref {
        if self.field.p() == 2 {
            let (data, pivots) = gf2::rref(self.rows, self.cols, &self.data);
            return Rref {
                matrix: Self::from_data(self.field, self.rows, self.cols, data),
                pivots,
            };
        }
        let (data, pivots) = rref_dense(self.field, self.rows, self.cols, self.data.clone());
        Rref {
            matrix: Self::from_data(self.field, self.rows, self.cols, data),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Right kernel `{v : A v = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let rref = self.rref();
        kernel_from_rref(&rref, self.cols)
    }

    /// Left kernel `{v : v A = 0}`.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().kernel()
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::span(self.field, self.cols, &self.to_rows())
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        self.transpose().row_space()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let rref = aug.rref();
        if rref.pivots.len() < n || rref.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, rref.matrix.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Solves `A x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let rref = aug.rref();
        if rref.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (i, &c) in rref.pivots.iter().enumerate() {
            x[c] = rref.matrix.get(i, self.cols);
        }
        Some(x)
    }

    /// Characteristic polynomial `det(tI - A)`, coefficients from `t^0` up,
    /// computed division-free of `n!` via reduction to Hessenberg form.
    pub fn charpoly(&self) -> Vec<u32> {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                h.swap_cols(i, m);
            }
            let t_inv = f.inv(h.get(m, m - 1)).expect("nonzero pivot");
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), t_inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = f.sub(h.get(i, j), f.mul(u, h.get(m, j)));
                    h.set(i, j, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, m), f.mul(u, h.get(r, i)));
                    h.set(r, m, v);
                }
            }
        }
        // p_{m+1} = (t - h_mm) p_m - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_i
        let mut polys: Vec<Vec<u32>> = vec![vec![1 % f.p()]];
        for m in 0..n {
            let pm = &polys[m];
            let mut next = vec![0u32; m + 2];
            for (k, &c) in pm.iter().enumerate() {
                next[k + 1] = f.add(next[k + 1], c);
                next[k] = f.sub(next[k], f.mul(h.get(m, m), c));
            }
            let mut prod = 1u32;
            for i in (0..m).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                let coef = f.mul(h.get(i, m), prod);
                if coef == 0 {
                    continue;
                }
                for (k, &c) in polys[i].iter().enumerate() {
                    next[k] = f.sub(next[k], f.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Entries as signed integers in `[0, p)`, row by row.
    pub fn to_int_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&v| v as i64).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.field.p())?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

pub fn dot(f: PrimeField, a: &[u32], b: &[u32]) -> u32 {
    let p = f.p() as u64;
    let mut acc = 0u64;
    for (&x, &y) in a.iter().zip(b) {
        acc = (acc + x as u64 * y as u64) % p;
    }
    acc as u32
}

pub(crate) fn rref_dense(
    f: PrimeField,
    rows: usize,
    cols: usize,
    mut data: Vec<u32>,
) -> (Vec<u32>, Vec<usize>) {
    let p = f.p() as u64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(data[r * cols + c]).expect("nonzero pivot") as u64;
        for j in c..cols {
            data[r * cols + j] = ((data[r * cols + j] as u64 * inv) % p) as u32;
        }
        let (before, rest) = data.split_at_mut(r * cols);
        let (pivot_row, after) = rest.split_at_mut(cols);
        let eliminate = |row: &mut [u32]| {
            let factor = row[c];
            if factor == 0 {
                return;
            }
            let neg = p - factor as u64;
            for j in c..cols {
                row[j] = ((row[j] as u64 + neg * pivot_row[j] as u64) % p) as u32;
            }
        };
        before.chunks_mut(cols).for_each(eliminate);
        after.chunks_mut(cols).for_each(eliminate);
        pivots.push(c);
        r += 1;
    }
    (data, pivots)
}

pub(crate) fn kernel_from_rref(rref: &Rref, cols: usize) -> Subspace {
    let f = rref.matrix.field;
    let mut is_pivot = vec![false; cols];
    for &c in &rref.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (i, &c) in rref.pivots.iter().enumerate() {
            v[c] = f.neg(rref.matrix.get(i, free));
        }
        basis.push(v);
    }
    Subspace::span(f, cols, &basis)
}

/// Exact rank, a particular solution of `A x = b` when `b` is given and the
/// system is consistent, and the kernel of `A`.
pub fn rank_solve(a: &Matrix, b: Option<&[u32]>) -> Result<RankSolve> {
    if let Some(b) = b {
        if b.len() != a.rows() {
            return Err(Error::Dimension(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                a.rows()
            )));
        }
    }
    let rref = a.rref();
    Ok(RankSolve {
        rank: rref.pivots.len(),
        solution: b.and_then(|b| a.solve(b)),
        kernel: kernel_from_rref(&rref, a.cols()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn random_matrix(rng: &mut impl Rng, f: PrimeField, r: usize, c: usize) -> Matrix {
        let data = (0..r * c).map(|_| rng.gen_range(0..f.p())).collect();
        Matrix::from_data(f, r, c, data)
    }

    #[test]
    fn identity_has_full_rank_and_trivial_kernel() {
        let i4 = Matrix::identity(field(2), 4);
        let rs = rank_solve(&i4, None).unwrap();
        assert_eq!(rs.rank, 4);
        assert_eq!(rs.kernel.dim(), 0);
    }

    #[test]
    fn paper_transvection_minus_identity_has_rank_one() {
        let s1 = Matrix::from_rows(
            field(2),
            &[[1, 0, 0, 0], [0, 1, 0, 0], [1, 0, 1, 0], [0, 0, 0, 1]],
        )
        .unwrap();
        assert_eq!(s1.minus_identity().rank(), 1);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let f = field(3);
        let a = Matrix::from_rows(f, &[[1, 1], [1, 1]]).unwrap();
        let rs = rank_solve(&a, Some(&[1, 2])).unwrap();
        assert_eq!(rs.rank, 1);
        assert!(rs.solution.is_none());
        let rs = rank_solve(&a, Some(&[2, 2])).unwrap();
        let x = rs.solution.unwrap();
        assert_eq!(a.mul_vec(&x), vec![2, 2]);
    }

    #[test]
    fn rank_nullity_on_random_gf3() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = field(3);
        for _ in 0..200 {
            let a = random_matrix(&mut rng, f, 5, 5);
            let rs = rank_solve(&a, None).unwrap();
            assert_eq!(rs.rank + rs.kernel.dim(), 5);
            for v in rs.kernel.basis() {
                assert!(a.mul_vec(v).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn gf2_packed_path_matches_dense_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = field(2);
        for (r, c) in [(3, 5), (70, 65), (130, 140), (64, 64)] {
            let a = random_matrix(&mut rng, f, r, c);
            let (dense, piv) = rref_dense(f, r, c, a.data().to_vec());
            let packed = a.rref();
            assert_eq!(packed.pivots, piv);
            assert_eq!(packed.matrix.data(), &dense[..]);
        }
    }

    #[test]
    fn inverse_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for p in [2, 3, 5, 7] {
            let f = field(p);
            for _ in 0..50 {
                let a = random_matrix(&mut rng, f, 4, 4);
                match a.inverse() {
                    Some(inv) => {
                        assert!(a.mul(&inv).unwrap().is_identity());
                        assert!(a.is_invertible());
                    }
                    None => assert!(a.rank() < 4),
                }
            }
        }
    }

    fn eval_matrix_poly(coeffs: &[u32], a: &Matrix) -> Matrix {
        let f = a.field();
        let n = a.rows();
        let mut acc = Matrix::zero(f, n, n);
        for &c in coeffs.iter().rev() {
            acc = acc
                .mul(a)
                .unwrap()
                .add(&Matrix::identity(f, n).scale(c))
                .unwrap();
        }
        acc
    }

    proptest! {
        #[test]
        fn charpoly_is_monic_and_annihilates(pi in 0usize..4, n in 1usize..5, seed in any::<u64>()) {
            let f = field([2, 3, 5, 7][pi]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix(&mut rng, f, n, n);
            let cp = a.charpoly();
            prop_assert_eq!(cp.len(), n + 1);
            prop_assert_eq!(cp[n], 1);
            let trace = (0..n).fold(0, |t, i| f.add(t, a.get(i, i)));
            prop_assert_eq!(cp[n - 1], f.neg(trace));
            prop_assert!(eval_matrix_poly(&cp, &a).is_zero());
        }
    }
}
