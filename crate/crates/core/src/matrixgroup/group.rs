use std::collections::{HashMap, VecDeque};

use crate::error::{fault, Error, Result};
use crate::gfcore::{Matrix, PrimeField, Subspace};

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A finite subgroup of GL_n(GF(p)), stored as its full element list.
///
/// Elements are ordered by breadth-first closure from the identity, right
/// multiplying by the generators in the order given, so the order is
/// reproducible from the generator list alone.
#[derive(Clone, Debug)]
pub struct Group {
    field: PrimeField,
    n: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
    inverses: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    is_abelian: bool,
}

impl Group {
    pub fn trivial(field: PrimeField, n: usize) -> Self {
        Self::close(field, n, Vec::new(), 1).expect("trivial group")
    }

    pub fn close(
        field: PrimeField,
        n: usize,
        generators: Vec<Matrix>,
        element_cap: usize,
    ) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch(g.field().p(), field.p()));
            }
            if g.rows() != n || g.cols() != n {
                return Err(Error::Dimension(format!(
                    "generator {i} is {}x{}, expected {n}x{n}",
                    g.rows(),
                    g.cols()
                )));
            }
            if !g.is_invertible() {
                return Err(Error::SingularGenerator(i));
            }
        }
        let identity = Matrix::identity(field, n);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let h = elements[i].mul(g)?;
                if index.contains_key(&h) {
                    continue;
                }
                if elements.len() >= element_cap {
                    return Err(Error::ElementCap(element_cap));
                }
                index.insert(h.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(h);
            }
        }
        let inverses = elements
            .iter()
            .map(|g| g.inverse().ok_or_else(|| fault!("closure produced a singular element")))
            .collect::<Result<Vec<_>>>()?;
        let is_abelian = generators.iter().enumerate().all(|(i, a)| {
            generators[i + 1..]
                .iter()
                .all(|b| a.mul(b).ok() == b.mul(a).ok())
        });
        Ok(Self {
            field,
            n,
            generators,
            elements,
            inverses,
            index,
            is_abelian,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    /// Dimension of the space acted on.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn inverse_of(&self, i: usize) -> &Matrix {
        &self.inverses[i]
    }

    pub fn inverses(&self) -> &[Matrix] {
        &self.inverses
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.index.contains_key(m)
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian
    }

    pub fn is_p_group(&self) -> bool {
        let p = self.p() as usize;
        let mut m = self.order();
        while m % p == 0 {
            m /= p;
        }
        m == 1
    }

    /// `p` does not divide the order.
    pub fn is_nonmodular(&self) -> bool {
        self.order() % self.p() as usize != 0
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Subgroup generated by the given elements (all must lie in `self`).
    pub fn subgroup(&self, generators: Vec<Matrix>) -> Result<Self> {
        for g in &generators {
            if !self.contains(g) {
                return Err(fault!("subgroup generator outside the group"));
            }
        }
        Self::close(self.field, self.n, generators, self.order().max(1))
    }

    /// `V^G`, the common fixed space of the generators.
    pub fn fixed_space(&self) -> Subspace {
        fixed_space_of(self.field, self.n, &self.generators)
    }

    /// The action on a stable subspace, expressed in the coordinates of the
    /// given basis (column convention: `σ b_j = Σ_i M_ij b_i`).
    pub fn restrict(&self, basis: &[Vec<u32>]) -> Result<Self> {
        let k = basis.len();
        let b = Matrix::from_columns(self.field, self.n, basis);
        if b.rank() != k {
            return Err(Error::Dimension("restriction basis is dependent".into()));
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut m = Matrix::zero(self.field, k, k);
            for (j, v) in basis.iter().enumerate() {
                let image = g.mul_vec(v);
                let coords = b
                    .solve(&image)
                    .ok_or_else(|| fault!("subspace is not stable under a generator"))?;
                for (i, &c) in coords.iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            gens.push(m);
        }
        Self::close(self.field, k, gens, self.order().max(1))
    }

    /// Verifies that every pair of elements commutes (used as an oracle for
    /// the cheaper generator test).
    pub fn all_elements_commute(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, a)| {
            self.elements[i + 1..]
                .iter()
                .all(|b| a.mul(b).ok() == b.mul(a).ok())
        })
    }
}

pub(crate) fn fixed_space_of(field: PrimeField, n: usize, mats: &[Matrix]) -> Subspace {
    if mats.is_empty() {
        return Subspace::full(field, n);
    }
    let mut rows = Vec::with_capacity(mats.len() * n);
    for m in mats {
        rows.extend(m.minus_identity().to_rows());
    }
    Matrix::from_row_vectors(field, n, &rows).kernel()
}
