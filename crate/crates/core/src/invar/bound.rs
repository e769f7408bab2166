use serde::Serialize;

use super::ideal::is_hsop;
use crate::gfcore::{Matrix, Subspace};
use crate::matrixgroup::Group;
use crate::polyact::{orbit_norm, GradedRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    /// Orbit norms along a G-stable flag of linear forms.
    FlagNorms,
    /// Orbit norms of the coordinate functions.
    CoordinateNorms,
    /// `|G|`, for `p ∤ |G|` (Noether's bound, valid in the non-modular case).
    Noether,
    /// `n(|G| - 1)`.
    OrderBound,
    /// Supplied by the caller.
    Override,
}

/// Degree bounds used by the bounded-degree computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    /// The invariant ring is generated in degrees `≤ generation`.
    pub generation: usize,
    /// `k[V]` is generated over the parameter subalgebra in degrees
    /// `≤ module`; so is the image of the transfer over `k[V]^G`.
    pub module: usize,
    pub source: BoundSource,
    /// The parameters behind the bound, when one was found.
    pub hsop: Vec<Polynomial>,
}

impl DegreeBound {
    pub fn fixed(d: usize) -> Self {
        Self {
            generation: d,
            module: d,
            source: BoundSource::Override,
            hsop: Vec::new(),
        }
    }

    pub fn hsop_degrees(&self) -> Vec<usize> {
        self.hsop.iter().map(|p| p.degree().unwrap_or(0)).collect()
    }
}

/// `max(d_max, Σ(d_i - 1))` from a verified system of parameters built out
/// of orbit norms (Symonds' bound), capped by `|G|` when `p ∤ |G|`, falling
/// back to `n(|G| - 1)`.
pub fn default_degree_bound(g: &Group) -> DegreeBound {
    let b = norm_bound(g);
    let order = g.order().max(1);
    if g.is_nonmodular() && order < b.generation {
        return DegreeBound {
            generation: order,
            module: order,
            source: BoundSource::Noether,
            hsop: Vec::new(),
        };
    }
    b
}

fn norm_bound(g: &Group) -> DegreeBound {
    let f = g.field();
    let n = g.dim();
    let ring = GradedRing::new(f, n, 1);
    let attempts = [
        (BoundSource::FlagNorms, stable_flag(g)),
        (BoundSource::CoordinateNorms, Some(Matrix::identity(f, n).to_rows())),
    ];
    for (source, forms) in attempts {
        let Some(forms) = forms else { continue };
        let norms: Vec<Polynomial> = forms
            .iter()
            .map(|y| orbit_norm(g, &Polynomial::linear_form(f, y)))
            .collect();
        if is_hsop(&ring, &norms) {
            let degs: Vec<usize> = norms.iter().map(|p| p.degree().unwrap()).collect();
            let module: usize = degs.iter().map(|d| d - 1).sum();
            let top = degs.iter().copied().max().unwrap_or(1);
            return DegreeBound {
                generation: module.max(top).max(1),
                module,
                source,
                hsop: norms,
            };
        }
    }
    let d = (n * (g.order() - 1)).max(1);
    DegreeBound {
        generation: d,
        module: d,
        source: BoundSource::OrderBound,
        hsop: Vec::new(),
    }
}

/// Linear forms `y_1, ..., y_n` with every `span(y_1..y_k)` stable under `G`,
/// when the generators can be triangularized over the base field.
pub fn stable_flag(g: &Group) -> Option<Vec<Vec<u32>>> {
    let f = g.field();
    let n = g.dim();
    // σ acts on a form c by c ↦ c·σ^{-1}
    let ops: Vec<Matrix> = g
        .generators()
        .iter()
        .map(|s| s.inverse().expect("invertible"))
        .collect();
    let mut flag: Vec<Vec<u32>> = Vec::with_capacity(n);
    let mut w = Subspace::zero(f, n);
    while flag.len() < n {
        let mut s = Subspace::full(f, n);
        for op in &ops {
            let mut narrowed = None;
            for lambda in 1..f.p() {
                let residues: Vec<Vec<u32>> = s
                    .basis()
                    .iter()
                    .map(|v| {
                        let image = op.vec_mul(v);
                        let shifted: Vec<u32> = image
                            .iter()
                            .zip(v)
                            .map(|(&a, &b)| f.sub(a, f.mul(lambda, b)))
                            .collect();
                        w.reduce(&shifted)
                    })
                    .collect();
                let combos = Matrix::from_row_vectors(f, n, &residues).left_kernel();
                let vecs: Vec<Vec<u32>> = combos
                    .basis()
                    .iter()
                    .map(|a| {
                        let mut out = vec![0u32; n];
                        for (&c, v) in a.iter().zip(s.basis()) {
                            for (o, &x) in out.iter_mut().zip(v) {
                                *o = f.mul_add(*o, c, x);
                            }
                        }
                        out
                    })
                    .collect();
                let candidate = Subspace::span(f, n, &vecs);
                if candidate.dim() > w.dim() {
                    narrowed = Some(candidate);
                    break;
                }
            }
            s = narrowed?;
        }
        let y = s
            .basis()
            .iter()
            .find(|v| !w.contains(v))
            .expect("narrowed space exceeds the flag")
            .clone();
        w = w.sum(&Subspace::span(f, n, std::slice::from_ref(&y))).expect("same ambient");
        flag.push(y);
    }
    Some(flag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixgroup::fixtures;
    use crate::polyact::act;

    #[test]
    fn paper_bound_is_six() {
        let g = fixtures::paper_example();
        let flag = stable_flag(&g).unwrap();
        assert_eq!(
            flag,
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]
        );
        let b = default_degree_bound(&g);
        assert_eq!(b.source, BoundSource::FlagNorms);
        assert_eq!(b.hsop_degrees(), vec![1, 1, 4, 4]);
        assert_eq!((b.generation, b.module), (6, 6));
    }

    #[test]
    fn flags_are_stable() {
        for g in [fixtures::mixed_gf3(), fixtures::paper_example(), fixtures::single_transvection(3)] {
            let f = g.field();
            let flag = stable_flag(&g).unwrap();
            for k in 1..=flag.len() {
                let w = Subspace::span(f, g.dim(), &flag[..k]);
                for s in g.generators() {
                    for y in &flag[..k] {
                        let image = act(s, &Polynomial::linear_form(f, y));
                        let coeffs: Vec<u32> =
                            (0..g.dim()).map(|i| image.coefficient(&crate::polyact::Monomial::var(g.dim(), i))).collect();
                        assert!(w.contains(&coeffs));
                    }
                }
            }
        }
    }

    #[test]
    fn minus_identity_uses_norms() {
        let f = crate::gfcore::PrimeField::new(5).unwrap();
        let g = Group::close(f, 2, vec![Matrix::identity(f, 2).scale(4)], 10).unwrap();
        let b = default_degree_bound(&g);
        assert_eq!(b.hsop_degrees(), vec![2, 2]);
        assert_eq!((b.generation, b.module), (2, 2));
    }

    #[test]
    fn non_modular_groups_without_a_flag_use_the_order() {
        // a Singer-type element of order 8 on GF(3)^2
        let f = crate::gfcore::PrimeField::new(3).unwrap();
        let s = Matrix::from_rows(f, &[[0, 1], [1, 1]]).unwrap();
        let g = Group::close(f, 2, vec![s], 100).unwrap();
        assert_eq!(g.order(), 8);
        assert!(stable_flag(&g).is_none());
        let b = default_degree_bound(&g);
        assert_eq!((b.source, b.generation), (BoundSource::Noether, 8));
    }
}
