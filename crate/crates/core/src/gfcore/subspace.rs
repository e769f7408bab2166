use std::fmt;

use super::field::PrimeField;
use super::gf2;
use super::matrix::{dot, Matrix};
use crate::error::{Error, Result};

/// A subspace of GF(p)^n stored by its reduced row echelon basis.
///
/// The basis is canonical: two equal subspaces carry identical basis vectors
/// in the same order, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Self {
            field,
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_row_vectors(field, ambient, vectors);
        let rref = m.rref();
        let basis = (0..rref.pivots.len())
            .map(|i| rref.matrix.row(i).to_vec())
            .collect();
        Self {
            field,
            ambient,
            basis,
            pivots: rref.pivots,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating every pivot of the basis.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut r = v.to_vec();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            let t = r[c];
            if t != 0 {
                let neg = f.neg(t);
                for (x, &y) in r.iter_mut().zip(row) {
                    *x = f.mul_add(*x, neg, y);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains(v)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Self::span(self.field, self.ambient, &all))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.perp().sum(&other.perp())?.perp())
    }

    /// Annihilator under the standard pairing of GF(p)^n with its dual.
    pub fn perp(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.field, self.ambient);
        }
        Matrix::from_row_vectors(self.field, self.ambient, &self.basis).kernel()
    }

    /// Coordinates of `v` in the echelon basis, when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    pub fn pairing_vanishes(&self, form: &[u32]) -> bool {
        self.basis.iter().all(|v| dot(self.field, v, form) == 0)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(GF({})^{}, ", self.field.p(), self.ambient)?;
        f.debug_list().entries(&self.basis).finish()?;
        write!(f, ")")
    }
}

enum Residual {
    Zero,
    Dense(Vec<u32>, usize),
    Packed(Vec<u64>, usize),
}

#[derive(Clone)]
enum Rows {
    Dense(Vec<Vec<u32>>),
    Packed(Vec<Vec<u64>>),
}

/// Incrementally built row space in (unreduced) echelon form.
///
/// Used for the large per-degree computations: vectors are inserted one at a
/// time and the caller learns whether each one was new.
#[derive(Clone)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    rows: Rows,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        let rows = if field.p() == 2 {
            Rows::Packed(Vec::new())
        } else {
            Rows::Dense(Vec::new())
        };
        Self {
            field,
            width,
            rows,
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.width
    }

    /// Inserts `v`; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.width);
        if self.is_full() {
            return false;
        }
        match self.eliminate(v) {
            Residual::Zero => false,
            Residual::Packed(w, c) => {
                if let Rows::Packed(rows) = &mut self.rows {
                    rows.push(w);
                }
                self.pivots.push(c);
                true
            }
            Residual::Dense(w, c) => {
                if let Rows::Dense(rows) = &mut self.rows {
                    rows.push(w);
                }
                self.pivots.push(c);
                true
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.width);
        matches!(self.eliminate(v), Residual::Zero)
    }

    fn eliminate(&self, v: &[u32]) -> Residual {
        let f = self.field;
        match &self.rows {
            Rows::Packed(rows) => {
                let mut w = gf2::pack(v);
                for (row, &c) in rows.iter().zip(&self.pivots) {
                    if gf2::bit(&w, c) {
                        gf2::xor_from(&mut w, row, c / 64);
                    }
                }
                match first_set_bit(&w) {
                    Some(c) => Residual::Packed(w, c),
                    None => Residual::Zero,
                }
            }
            Rows::Dense(rows) => {
                let mut w = v.to_vec();
                for (row, &c) in rows.iter().zip(&self.pivots) {
                    let t = w[c];
                    if t != 0 {
                        let neg = f.neg(t);
                        for (x, &y) in w[c..].iter_mut().zip(&row[c..]) {
                            *x = f.mul_add(*x, neg, y);
                        }
                    }
                }
                let Some(c) = w.iter().position(|&x| x != 0) else {
                    return Residual::Zero;
                };
                let inv = f.inv(w[c]).expect("nonzero");
                for x in w[c..].iter_mut() {
                    *x = f.mul(*x, inv);
                }
                Residual::Dense(w, c)
            }
        }
    }

    pub fn rows_dense(&self) -> Vec<Vec<u32>> {
        match &self.rows {
            Rows::Dense(rows) => rows.clone(),
            Rows::Packed(rows) => rows
                .iter()
                .map(|w| {
                    let mut out = vec![0u32; self.width];
                    gf2::unpack(w, self.width, &mut out);
                    out
                })
                .collect(),
        }
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::span(self.field, self.width, &self.rows_dense())
    }
}

fn first_set_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}
