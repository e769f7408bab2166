use std::collections::BTreeMap;
use std::fmt;

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::gfcore::PrimeField;

/// Sparse polynomial over GF(p) in `x1..xn`.
///
/// Terms live in a map keyed by monomial in ascending graded-lex order, so the
/// leading term is the last entry. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    n: usize,
    terms: BTreeMap<Monomial, u32>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, n: usize) -> Self {
        Self {
            field,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, n: usize, c: u32) -> Self {
        let mut p = Self::zero(field, n);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn one(field: PrimeField, n: usize) -> Self {
        Self::constant(field, n, 1)
    }

    /// `x_{i+1}`.
    pub fn var(field: PrimeField, n: usize, i: usize) -> Self {
        let mut p = Self::zero(field, n);
        p.add_term(Monomial::var(n, i), 1);
        p
    }

    pub fn monomial(field: PrimeField, m: Monomial, c: u32) -> Self {
        let mut p = Self::zero(field, m.n_vars());
        p.add_term(m, c);
        p
    }

    /// `Σ c_i x_i`.
    pub fn linear_form(field: PrimeField, coeffs: &[u32]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(field, n);
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c);
        }
        p
    }

    pub fn from_terms(
        field: PrimeField,
        n: usize,
        terms: impl IntoIterator<Item = (Monomial, u32)>,
    ) -> Self {
        let mut p = Self::zero(field, n);
        for (m, c) in terms {
            assert_eq!(m.n_vars(), n);
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(&Monomial::one(self.n)) == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, u32)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn add_term(&mut self, m: Monomial, c: u32) {
        let c = c % self.field.p();
        if c == 0 {
            return;
        }
        let f = self.field;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = f.add(*e.get(), c);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        assert_eq!(self.n, other.n, "polynomials in different variable counts");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), self.field.neg(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(self.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.field.p();
        if c == 0 {
            return Self::zero(self.field, self.n);
        }
        Self {
            field: self.field,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), self.field.mul(v, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(self.field, self.n);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.mul(b), self.field.mul(ca, cb));
            }
        }
        out
    }

    /// Product with every term whose exponent of `x_{var+1}` reaches `below`
    /// discarded.
    pub fn mul_truncated(&self, other: &Self, var: usize, below: u16) -> Self {
        self.check(other);
        let mut out = Self::zero(self.field, self.n);
        for (a, &ca) in &self.terms {
            let ea = a.exponent(var);
            if ea >= below {
                continue;
            }
            for (b, &cb) in &other.terms {
                if ea + b.exponent(var) < below {
                    out.add_term(a.mul(b), self.field.mul(ca, cb));
                }
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32) -> Self {
        let mut out = Self::zero(self.field, self.n);
        for (a, &v) in &self.terms {
            out.add_term(a.mul(m), self.field.mul(v, c));
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Self {
        Self {
            field: self.field,
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    /// Rescales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(c).expect("nonzero")),
        }
    }

    /// `q` with `self = q * g`, or `None` when `g` does not divide `self`.
    ///
    /// Leading-term elimination: if `g | f` every remainder stays a multiple
    /// of `g`, so its leading term is divisible by `lt(g)`; the first time it
    /// is not, `g` does not divide `f`.
    pub fn exact_divide(&self, g: &Self) -> Result<Option<Self>> {
        self.check(g);
        let (lm, lc) = g.leading_term().ok_or(Error::DivisionByZero)?;
        let lm = lm.clone();
        let lc_inv = self.field.inv(lc)?;
        let f = self.field;
        let mut r = self.clone();
        let mut q = Self::zero(self.field, self.n);
        while let Some((m, c)) = r.leading_term() {
            let Some(t) = lm.quotient_of(m) else {
                return Ok(None);
            };
            let c = f.mul(c, lc_inv);
            let neg = f.neg(c);
            for (b, &cb) in &g.terms {
                r.add_term(t.mul(b), f.mul(neg, cb));
            }
            q.add_term(t, c);
        }
        Ok(Some(q))
    }

    /// Substitutes `x_i ↦ images[i]`.
    pub fn substitute(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.n);
        let target_n = images.first().map_or(0, |p| p.n);
        let mut powers: Vec<Vec<Self>> = images
            .iter()
            .map(|p| vec![Self::one(self.field, p.n)])
            .collect();
        let mut out = Self::zero(self.field, target_n);
        for (m, &c) in &self.terms {
            let mut t = Self::constant(self.field, target_n, c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Substitutes the linear forms given by the rows of `l` (row `i` is the
    /// image of `x_{i+1}`).
    pub fn substitute_linear(&self, rows: &[Vec<u32>]) -> Self {
        let images: Vec<Self> = rows
            .iter()
            .map(|r| Self::linear_form(self.field, r))
            .collect();
        self.substitute(&images)
    }

    pub fn evaluate(&self, point: &[u32]) -> u32 {
        assert_eq!(point.len(), self.n);
        let f = self.field;
        self.terms.iter().fold(0, |acc, (m, &c)| {
            let v = m
                .exponents()
                .iter()
                .zip(point)
                .fold(c, |t, (&e, &x)| f.mul(t, f.pow(x, e as u64)));
            f.add(acc, v)
        })
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms from the leading one down, e.g. `x1^2*x2 + 2*x3`; zero prints `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, &c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match (c, m.is_one()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{m}")?,
                _ => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}
