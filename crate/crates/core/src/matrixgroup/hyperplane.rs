use super::group::Group;
use super::reflection::{normalize, reflection_census, ReflectionKind};
use crate::error::{fault, Error, Result};
use crate::gfcore::{Matrix, PrimeField};

/// A linear character of a group, tabulated on its element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    field: PrimeField,
    values: Vec<u32>,
}

impl Character {
    pub fn trivial(field: PrimeField, order: usize) -> Self {
        Self {
            field,
            values: vec![1; order],
        }
    }

    pub fn from_values(field: PrimeField, values: Vec<u32>) -> Self {
        Self { field, values }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, i: usize) -> Result<u32> {
        self.values.get(i).copied().ok_or(Error::CharacterDomain(i))
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    pub fn pow(&self, k: u64) -> Self {
        Self {
            field: self.field,
            values: self.values.iter().map(|&v| self.field.pow(v, k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.values.len(), other.values.len());
        Self {
            field: self.field,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| self.field.mul(a, b))
                .collect(),
        }
    }

    /// `χ(στ) = χ(σ)χ(τ)` over all pairs and `χ(1) = 1`.
    pub fn is_multiplicative_on(&self, g: &Group) -> bool {
        if self.values.len() != g.order() || self.values[0] != 1 % self.field.p() {
            return false;
        }
        let f = self.field;
        for (i, a) in g.elements().iter().enumerate() {
            for (j, b) in g.elements().iter().enumerate() {
                let k = g.index_of(&a.mul(b).expect("square")).expect("closed");
                if self.values[k] != f.mul(self.values[i], self.values[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Restriction to a subgroup whose elements all lie in `ambient`.
    pub fn restrict(&self, ambient: &Group, sub: &Group) -> Result<Self> {
        let values = sub
            .elements()
            .iter()
            .map(|m| {
                ambient
                    .index_of(m)
                    .map(|i| self.values[i])
                    .ok_or_else(|| fault!("subgroup element outside ambient group"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            field: self.field,
            values,
        })
    }
}

/// Scalar `c` with `σ·x = c x`, for the action `(σ·x)(v) = x(σ^{-1} v)` on
/// linear forms; `None` when `x` is not an eigenvector.
pub fn form_eigenvalue(sigma_inv: &Matrix, form: &[u32]) -> Option<u32> {
    let image = sigma_inv.vec_mul(form);
    let f = sigma_inv.field();
    let j = form.iter().position(|&x| x != 0)?;
    let c = f.mul(image[j], f.inv(form[j]).ok()?);
    image
        .iter()
        .zip(form)
        .all(|(&a, &b)| a == f.mul(c, b))
        .then_some(c)
}

/// A reflecting hyperplane `H = ker(x_H)` of the group.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    /// Normalized: first nonzero coefficient is 1.
    pub form: Vec<u32>,
    pub kind: ReflectionKind,
    /// Pointwise stabilizer `G_H`.
    pub stabilizer: Group,
    /// `σ·x_H = χ_H(σ) x_H` for every element of the ambient group.
    pub character: Character,
}

/// One entry per distinct reflecting hyperplane, ordered by the normalized
/// form (leading position first, then coefficients).
pub fn hyperplanes(g: &Group) -> Result<Vec<Hyperplane>> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let f = g.field();
    let census = reflection_census(g)?;
    let mut forms: Vec<(Vec<u32>, ReflectionKind)> = Vec::new();
    for (_, r) in &census.reflections {
        let mut form = r.form.clone();
        normalize(f, &mut form);
        match forms.iter().find(|(x, _)| *x == form) {
            Some((_, kind)) if *kind != r.kind => {
                return Err(fault!(
                    "hyperplane {form:?} carries both transvections and homologies in an abelian group"
                ));
            }
            Some(_) => {}
            None => forms.push((form, r.kind)),
        }
    }
    forms.sort_by(|(a, _), (b, _)| {
        let lead = |v: &[u32]| v.iter().position(|&x| x != 0);
        lead(a).cmp(&lead(b)).then_with(|| a.cmp(b))
    });
    let mut out = Vec::with_capacity(forms.len());
    for (form, kind) in forms {
        let hyper = Matrix::from_row_vectors(f, g.dim(), std::slice::from_ref(&form)).kernel();
        let fixing: Vec<Matrix> = g
            .elements()
            .iter()
            .filter(|m| hyper.basis().iter().all(|v| m.mul_vec(v) == *v))
            .cloned()
            .collect();
        let stabilizer = g.subgroup(fixing)?;
        let mut values = Vec::with_capacity(g.order());
        for i in 0..g.order() {
            let c = form_eigenvalue(g.inverse_of(i), &form).ok_or_else(|| {
                fault!("element {i} does not map the hyperplane form {form:?} to a multiple of itself")
            })?;
            values.push(c);
        }
        out.push(Hyperplane {
            form,
            kind,
            stabilizer,
            character: Character::from_values(f, values),
        });
    }
    Ok(out)
}
