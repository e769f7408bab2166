use super::generators::AlgebraGenerators;
use super::ideal::{IdealBuilder, IdealProfile, SubringIdealBuilder};
use super::table::InvariantTable;
use crate::error::{Error, Result};
use crate::gfcore::{Matrix, Subspace};
use crate::matrixgroup::Group;
use crate::polyact::{count_of_degree, DegreeSpace, Polynomial};

/// The ideal of `k[V]` generated by all positive-degree invariants.
pub fn hilbert_ideal(table: &InvariantTable, bound: usize) -> IdealProfile {
    let n = table.ring().n_vars();
    let candidates: Vec<Vec<Vec<u32>>> = (0..=bound)
        .map(|d| {
            if d == 0 {
                Vec::new()
            } else {
                table.basis(d).vectors().to_vec()
            }
        })
        .collect();
    extend_to_k_v(table, &candidates, bound, n, |_, _| false)
}

/// `Hilb_U`: the ideal of `k[V]` generated by the invariants lying in
/// `I(U)`, the ideal generated by the linear forms vanishing on `U`.
pub fn relative_hilbert_ideal(
    g: &Group,
    table: &InvariantTable,
    u: &Subspace,
    bound: usize,
) -> Result<IdealProfile> {
    if !g.fixed_space().contains_subspace(u)? {
        return Err(Error::NotFixed);
    }
    let n = g.dim();
    let k = u.dim();
    let candidates: Vec<Vec<Vec<u32>>> = (0..=bound)
        .map(|d| if d == 0 { Vec::new() } else { vanishing_invariants(table, u, d) })
        .collect();
    // I(U)_d is the kernel of restriction to U, of dimension dim k[V]_d - dim k[U]_d
    let target = |d: usize, dim: usize| dim == count_of_degree(n, d) - count_of_degree(k, d);
    Ok(extend_to_k_v(table, &candidates, bound, n - k, target))
}

fn extend_to_k_v(
    table: &InvariantTable,
    candidates: &[Vec<Vec<u32>>],
    bound: usize,
    expected_codim: usize,
    saturates: impl Fn(usize, usize) -> bool,
) -> IdealProfile {
    let ring = table.ring();
    let mut b = IdealBuilder::new(ring);
    let mut gens = Vec::new();
    for (d, cands) in candidates.iter().enumerate().take(bound + 1) {
        for i in b.step(cands) {
            gens.push((d, ring.poly(d, &cands[i])));
        }
        if d > 0 && saturates(d, b.slice(d).dim()) {
            b.mark_saturated();
        }
    }
    IdealProfile::new(gens, b.dims(), expected_codim, bound, b.saturated_at())
}

/// Basis (monomial coordinates) of `k[V]^G_d ∩ I(U)_d`.
pub fn vanishing_invariants(table: &InvariantTable, u: &Subspace, d: usize) -> Vec<Vec<u32>> {
    let basis = table.basis(d);
    let k = u.dim();
    let target = DegreeSpace::new(k, d);
    if target.dim() == 0 {
        return basis.vectors().to_vec();
    }
    let f = table.ring().field();
    let n = table.ring().n_vars();
    // x_i ↦ Σ_j u_j[i] t_j
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let coeffs: Vec<u32> = u.basis().iter().map(|b| b[i]).collect();
            Polynomial::linear_form(f, &coeffs)
        })
        .collect();
    let rows: Vec<Vec<u32>> = basis
        .polynomials()
        .iter()
        .map(|p| {
            let r = p.substitute(&images);
            target.coords(&r).expect("restriction keeps the degree")
        })
        .collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let combos = Matrix::from_row_vectors(f, target.dim(), &rows).left_kernel();
    let vecs: Vec<Vec<u32>> = combos
        .basis()
        .iter()
        .map(|a| {
            let mut out = vec![0u32; table.ring().dim(d)];
            for (&c, v) in a.iter().zip(basis.vectors()) {
                for (o, &x) in out.iter_mut().zip(v) {
                    *o = f.mul_add(*o, c, x);
                }
            }
            out
        })
        .collect();
    Subspace::span(f, table.ring().dim(d), &vecs).basis().to_vec()
}

/// `J`, `J^{ec}` and their comparison for an ideal `J` of `k[V]^G`.
#[derive(Clone, Debug)]
pub struct ContractExtend {
    /// `dim J_d`, `J` as an ideal of `k[V]^G`.
    pub j_dims: Vec<usize>,
    /// `dim (J·k[V])_d`.
    pub je_dims: Vec<usize>,
    /// `dim (J·k[V] ∩ k[V]^G)_d`.
    pub jec_dims: Vec<usize>,
    /// Minimal generators of `J^{ec}` over `k[V]^G`.
    pub jec: IdealProfile,
    /// Minimal generators of `J^{ec}` that are not in `J`.
    pub new_generators: Vec<(usize, Polynomial)>,
    /// `J_d = J^{ec}_d` for every `d ≤ bound`.
    pub equal: bool,
    pub first_difference: Option<usize>,
    pub bound: usize,
}

pub fn contract_extend(
    table: &InvariantTable,
    algebra: &AlgebraGenerators,
    j_generators: &[Polynomial],
    bound: usize,
) -> Result<ContractExtend> {
    assert!(bound <= table.max_degree());
    let ring = table.ring();
    for (i, p) in j_generators.iter().enumerate() {
        if !p.is_homogeneous() || p.is_zero() || !table.contains(p) {
            return Err(Error::NotInvariant(i));
        }
    }
    let by_degree = |d: usize| -> Vec<Vec<u32>> {
        j_generators
            .iter()
            .filter(|p| p.degree() == Some(d))
            .map(|p| ring.coords(d, p).expect("homogeneous"))
            .collect()
    };
    let mut j = SubringIdealBuilder::new(ring, &algebra.generators);
    let mut je = IdealBuilder::new(ring);
    let mut jec = SubringIdealBuilder::new(ring, &algebra.generators);
    let mut jec_gens = Vec::new();
    let mut new_generators = Vec::new();
    let mut jec_dims = Vec::new();
    for d in 0..=bound {
        let cands = by_degree(d);
        j.step(&cands);
        je.step(&cands);
        let inv = table.basis(d).subspace();
        let contracted = if je.slice(d).is_full() {
            inv.clone()
        } else {
            je.slice(d).to_subspace(ring.field()).intersection(inv)?
        };
        jec_dims.push(contracted.dim());
        let cands = contracted.basis().to_vec();
        for i in jec.step(&cands) {
            let p = ring.poly(d, &cands[i]);
            if !j.slice(d).contains(&cands[i]) {
                new_generators.push((d, p.clone()));
            }
            jec_gens.push((d, p));
        }
    }
    let j_dims = j.dims();
    let first_difference = j_dims.iter().zip(&jec_dims).position(|(a, b)| a != b);
    let jec_profile = IdealProfile::new(jec_gens, jec.dims(), 0, bound, None);
    Ok(ContractExtend {
        j_dims,
        je_dims: je.dims(),
        jec_dims,
        jec: jec_profile,
        new_generators,
        equal: first_difference.is_none(),
        first_difference,
        bound,
    })
}
