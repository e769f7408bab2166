use super::group::{fixed_space_of, Group};
use super::reflection::reflection_census;
use crate::error::{fault, Error, Result};
use crate::gfcore::{Matrix, Subspace};

/// The split `G = T × D`, `V = V^D ⊕ V_D` of an abelian reflection group.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Generated by the transvections.
    pub t: Group,
    /// Generated by the homologies.
    pub d: Group,
    /// `V^D`.
    pub fixed_by_d: Subspace,
    /// `V_D`, the sum of the images of `σ - 1` over `σ ∈ D`.
    pub moved_by_d: Subspace,
    /// Columns: the basis of `V^D` followed by the basis of `V_D`.
    pub adapted_basis: Matrix,
}

impl Decomposition {
    /// `T` acting on `V^D`, in the echelon basis of `V^D`.
    pub fn t_on_fixed(&self) -> Result<Group> {
        self.t.restrict(self.fixed_by_d.basis())
    }

    /// `D` acting on `V_D`, in the echelon basis of `V_D`.
    pub fn d_on_moved(&self) -> Result<Group> {
        self.d.restrict(self.moved_by_d.basis())
    }

    /// Components of `v` in `V^D` and `V_D`.
    pub fn split(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let coords = self
            .adapted_basis
            .solve(v)
            .expect("adapted basis is invertible");
        let m = self.fixed_by_d.dim();
        let f = self.adapted_basis.field();
        let n = v.len();
        let mut a = vec![0u32; n];
        let mut b = vec![0u32; n];
        for (k, &c) in coords.iter().enumerate() {
            let col = self.adapted_basis.column(k);
            let target = if k < m { &mut a } else { &mut b };
            for (t, &x) in target.iter_mut().zip(&col) {
                *t = f.mul_add(*t, c, x);
            }
        }
        (a, b)
    }
}

pub fn decompose(g: &Group) -> Result<Decomposition> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let census = reflection_census(g)?;
    if !census.is_reflection_group {
        return Err(Error::NotReflectionGroup);
    }
    let f = g.field();
    let n = g.dim();
    let t = census.transvection_subgroup;
    let d = census.homology_subgroup;

    let fixed_by_d = fixed_space_of(f, n, d.generators());
    let mut image_rows = Vec::new();
    for m in d.elements() {
        image_rows.extend(m.minus_identity().transpose().to_rows());
    }
    let moved_by_d = Subspace::span(f, n, &image_rows);

    let mut columns: Vec<Vec<u32>> = fixed_by_d.basis().to_vec();
    columns.extend(moved_by_d.basis().iter().cloned());
    let adapted_basis = Matrix::from_columns(f, n, &columns);

    let dec = Decomposition {
        t,
        d,
        fixed_by_d,
        moved_by_d,
        adapted_basis,
    };
    check(g, &dec)?;
    Ok(dec)
}

fn check(g: &Group, dec: &Decomposition) -> Result<()> {
    let (t, d) = (&dec.t, &dec.d);
    let shared = t.elements().iter().filter(|m| d.contains(m)).count();
    if shared != 1 {
        return Err(fault!("T and D intersect in {shared} elements"));
    }
    if t.order() * d.order() != g.order() {
        return Err(fault!(
            "|T|·|D| = {}·{} differs from |G| = {}",
            t.order(),
            d.order(),
            g.order()
        ));
    }
    if !t.is_p_group() {
        return Err(fault!("T has order {}, not a power of p", t.order()));
    }
    if !d.is_nonmodular() {
        return Err(fault!("p divides |D| = {}", d.order()));
    }
    let n = g.dim();
    if dec.fixed_by_d.dim() + dec.moved_by_d.dim() != n || dec.adapted_basis.rank() != n {
        return Err(fault!(
            "V^D (dim {}) and V_D (dim {}) do not split V",
            dec.fixed_by_d.dim(),
            dec.moved_by_d.dim()
        ));
    }
    for tau in t.generators() {
        if dec.moved_by_d.basis().iter().any(|w| tau.mul_vec(w) != *w) {
            return Err(fault!("a transvection moves V_D"));
        }
    }
    for sigma in d.generators() {
        if dec.fixed_by_d.basis().iter().any(|w| sigma.mul_vec(w) != *w) {
            return Err(fault!("a homology moves V^D"));
        }
    }
    for sigma in g.generators() {
        for space in [&dec.fixed_by_d, &dec.moved_by_d] {
            if space.basis().iter().any(|w| !space.contains(&sigma.mul_vec(w))) {
                return Err(fault!("summand is not G-stable"));
            }
        }
    }
    Ok(())
}
