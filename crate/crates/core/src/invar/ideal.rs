use crate::gfcore::{Echelon, PrimeField, Subspace};
use crate::polyact::{GradedRing, Polynomial};

/// Summary of a graded ideal computed slice by slice up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealProfile {
    /// Minimal homogeneous generators in order of discovery.
    pub generators: Vec<Polynomial>,
    pub generator_degrees: Vec<usize>,
    /// `dim J_d` for `d = 0..=bound`.
    pub per_degree_dims: Vec<usize>,
    /// Number of minimal generators found up to the bound.
    pub mu: usize,
    pub expected_codim: usize,
    pub is_complete_intersection: bool,
    pub bound: usize,
    /// First degree at which the slice reached a target that forces every
    /// higher slice (the whole `k[V]_d`, or `I(U)_d`); from there on no
    /// further generators can appear.
    pub saturated_at: Option<usize>,
}

impl IdealProfile {
    pub(crate) fn new(
        generators: Vec<(usize, Polynomial)>,
        per_degree_dims: Vec<usize>,
        expected_codim: usize,
        bound: usize,
        saturated_at: Option<usize>,
    ) -> Self {
        let mu = generators.len();
        let (generator_degrees, generators) = generators.into_iter().unzip();
        Self {
            generators,
            generator_degrees,
            per_degree_dims,
            mu,
            expected_codim,
            is_complete_intersection: mu == expected_codim,
            bound,
            saturated_at,
        }
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.generator_degrees.clone();
        d.sort_unstable();
        d
    }
}

/// One graded piece; `Full` stands for all of `k[V]_d` without storing it.
#[derive(Clone)]
pub(crate) enum Slice {
    Full(usize),
    Part(Echelon),
}

impl Slice {
    pub fn dim(&self) -> usize {
        match self {
            Slice::Full(w) => *w,
            Slice::Part(e) => e.rank(),
        }
    }

    pub fn is_full(&self) -> bool {
        match self {
            Slice::Full(_) => true,
            Slice::Part(e) => e.is_full(),
        }
    }

    pub fn to_subspace(&self, field: PrimeField) -> Subspace {
        match self {
            Slice::Full(w) => Subspace::full(field, *w),
            Slice::Part(e) => e.to_subspace(),
        }
    }

    fn rows(&self) -> Vec<Vec<u32>> {
        match self {
            Slice::Full(_) => unreachable!("full slices are never shifted"),
            Slice::Part(e) => e.rows_dense(),
        }
    }
}

/// Ideal of `k[V]` generated by homogeneous elements, built degree by degree.
///
/// Each slice is `k[V]_1 · J_{d-1}` plus whichever candidates are offered at
/// degree `d`; candidates that enlarge the slice are the minimal generators
/// (graded Nakayama), picked in the order offered.
pub(crate) struct IdealBuilder<'a> {
    ring: &'a GradedRing,
    slices: Vec<Slice>,
    saturated_at: Option<usize>,
}

impl<'a> IdealBuilder<'a> {
    pub fn new(ring: &'a GradedRing) -> Self {
        Self {
            ring,
            slices: Vec::new(),
            saturated_at: None,
        }
    }

    pub fn slice(&self, d: usize) -> &Slice {
        &self.slices[d]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.slices.iter().map(Slice::dim).collect()
    }

    pub fn saturated_at(&self) -> Option<usize> {
        self.saturated_at
    }

    /// Declares that the slice just built is known to propagate to all
    /// higher degrees.
    pub fn mark_saturated(&mut self) {
        if self.saturated_at.is_none() {
            self.saturated_at = Some(self.slices.len() - 1);
        }
    }

    /// Builds the next slice; returns the indices of the candidates that were
    /// new minimal generators.
    pub fn step(&mut self, candidates: &[Vec<u32>]) -> Vec<usize> {
        let d = self.slices.len();
        let width = self.ring.dim(d);
        if d > 0 && self.slices[d - 1].is_full() {
            self.slices.push(Slice::Full(width));
            return Vec::new();
        }
        let mut ech = Echelon::new(self.ring.field(), width);
        if d > 0 {
            for v in self.ring.shift_all(d - 1, &self.slices[d - 1].rows()) {
                if ech.is_full() {
                    break;
                }
                ech.insert(&v);
            }
        }
        let mut fresh = Vec::new();
        for (i, v) in candidates.iter().enumerate() {
            if ech.insert(v) {
                fresh.push(i);
            }
        }
        if ech.is_full() {
            self.slices.push(Slice::Full(width));
            if self.saturated_at.is_none() {
                self.saturated_at = Some(d);
            }
        } else {
            self.slices.push(Slice::Part(ech));
        }
        fresh
    }
}

/// Ideal of the subring `k[V]^G`, with slices inside `k[V]_d`.
///
/// The part of slice `d` coming from lower degrees is `Σ g · J_{d - deg g}`
/// over the algebra generators `g`, which spans `k[V]^G_+ · J` in degree `d`.
pub(crate) struct SubringIdealBuilder<'a> {
    ring: &'a GradedRing,
    multipliers: &'a [(usize, Polynomial)],
    slices: Vec<Echelon>,
}

impl<'a> SubringIdealBuilder<'a> {
    pub fn new(ring: &'a GradedRing, multipliers: &'a [(usize, Polynomial)]) -> Self {
        Self {
            ring,
            multipliers,
            slices: Vec::new(),
        }
    }

    pub fn slice(&self, d: usize) -> &Echelon {
        &self.slices[d]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.slices.iter().map(Echelon::rank).collect()
    }

    pub fn step(&mut self, candidates: &[Vec<u32>]) -> Vec<usize> {
        let d = self.slices.len();
        let mut ech = Echelon::new(self.ring.field(), self.ring.dim(d));
        for (e, g) in self.multipliers {
            if *e == 0 || *e > d {
                continue;
            }
            for v in self.slices[d - e].rows_dense() {
                ech.insert(&self.ring.mul_poly(d - e, &v, g));
            }
        }
        let mut fresh = Vec::new();
        for (i, v) in candidates.iter().enumerate() {
            if ech.insert(v) {
                fresh.push(i);
            }
        }
        self.slices.push(ech);
        fresh
    }
}

/// `true` when the homogeneous `polys` (exactly `n` of them) form a
/// homogeneous system of parameters.
///
/// The quotient by `n` parameters of degrees `d_i` vanishes above
/// `Σ(d_i - 1)`, and a full slice at any degree forces finite length, so one
/// slice decides it.
pub fn is_hsop(ring: &GradedRing, polys: &[Polynomial]) -> bool {
    let n = ring.n_vars();
    if polys.len() != n || polys.iter().any(|p| p.is_zero() || !p.is_homogeneous()) {
        return false;
    }
    let target: usize = polys.iter().map(|p| p.degree().unwrap() - 1).sum::<usize>() + 1;
    if target > ring.max_degree() {
        let big = GradedRing::new(ring.field(), n, target);
        return is_hsop(&big, polys);
    }
    let mut b = IdealBuilder::new(ring);
    for d in 0..=target {
        let cands: Vec<Vec<u32>> = polys
            .iter()
            .filter(|p| p.degree() == Some(d))
            .map(|p| ring.coords(d, p).expect("homogeneous"))
            .collect();
        b.step(&cands);
    }
    b.slice(target).is_full()
}
