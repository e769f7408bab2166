use super::graded::{GradedRing, SymPowers};
use super::polynomial::Polynomial;
use crate::error::{fault, Error, Result};
use crate::gfcore::Matrix;
use crate::matrixgroup::{Character, Group, ReflectionInfo};

/// `σ·f` given `σ^{-1}`: substitutes `x_i ↦` row `i` of `σ^{-1}`.
pub fn act_by_inverse(sigma_inv: &Matrix, f: &Polynomial) -> Polynomial {
    assert_eq!(sigma_inv.rows(), f.n_vars());
    f.substitute_linear(&sigma_inv.to_rows())
}

/// `(σ·f)(v) = f(σ^{-1} v)`.
///
/// # Panics
/// When `σ` is singular or its size differs from the variable count.
pub fn act(sigma: &Matrix, f: &Polynomial) -> Polynomial {
    let inv = sigma.inverse().expect("act needs an invertible matrix");
    act_by_inverse(&inv, f)
}

/// `Δ_ρ(f)` with `ρ(f) - f = Δ_ρ(f)·x_ρ`.
pub fn delta(rho: &ReflectionInfo, f: &Polynomial) -> Result<Polynomial> {
    let field = f.field();
    let diff = act(&rho.matrix, f).sub(f);
    let x = Polynomial::linear_form(field, &rho.form);
    diff.exact_divide(&x)?
        .ok_or_else(|| fault!("x_ρ = {x} does not divide ρ(f) - f for f = {f}"))
}

/// `Σ_σ σ·f`.
pub fn transfer(g: &Group, f: &Polynomial) -> Polynomial {
    g.inverses()
        .iter()
        .fold(Polynomial::zero(f.field(), f.n_vars()), |acc, inv| {
            acc.add(&act_by_inverse(inv, f))
        })
}

/// `Σ_σ χ(σ)^{-1} σ·f`.
pub fn twisted_transfer(g: &Group, chi: &Character, f: &Polynomial) -> Result<Polynomial> {
    if chi.len() != g.order() {
        return Err(Error::CharacterDomain(chi.len().min(g.order())));
    }
    let field = f.field();
    let mut acc = Polynomial::zero(field, f.n_vars());
    for (i, inv) in g.inverses().iter().enumerate() {
        let w = field.inv(chi.value(i)?)?;
        acc = acc.add(&act_by_inverse(inv, f).scale(w));
    }
    Ok(acc)
}

/// Product of the distinct polynomials in the orbit `G·x`.
pub fn orbit_norm(g: &Group, x: &Polynomial) -> Polynomial {
    orbit(g, x)
        .iter()
        .fold(Polynomial::one(x.field(), x.n_vars()), |acc, y| acc.mul(y))
}

/// The orbit `G·f`, in order of first appearance along the element list.
pub fn orbit(g: &Group, f: &Polynomial) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for inv in g.inverses() {
        let y = act_by_inverse(inv, f);
        if !out.contains(&y) {
            out.push(y);
        }
    }
    out
}

/// Matrix of `f ↦ Σ_σ w_σ σ·f` on `k[V]_d`; row `j` is the image of
/// monomial `j`, so coordinates transform as `c ↦ c·M`.
pub fn weighted_sum_matrix(ring: &GradedRing, g: &Group, weights: &[u32], d: usize) -> Matrix {
    assert_eq!(weights.len(), g.order());
    let mut stream = SymPowers::for_group(ring, g);
    stream.advance_to(d);
    weighted_sum(ring, stream.matrices(), weights, d)
}

pub(crate) fn weighted_sum(ring: &GradedRing, mats: &[Matrix], weights: &[u32], d: usize) -> Matrix {
    let f = ring.field();
    let dim = ring.dim(d);
    let mut data = vec![0u32; dim * dim];
    for (m, &w) in mats.iter().zip(weights) {
        if w == 0 {
            continue;
        }
        for (t, &x) in data.iter_mut().zip(m.data()) {
            *t = f.mul_add(*t, w, x);
        }
    }
    Matrix::from_data(f, dim, dim, data)
}

/// Weights `χ(σ)^{-1}` of the twisted transfer.
pub fn twist_weights(chi: &Character) -> Vec<u32> {
    let f = chi.field();
    chi.values()
        .iter()
        .map(|&c| f.inv(c).expect("character values are units"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcore::PrimeField;
    use crate::matrixgroup::{classify_element, fixtures, hyperplanes};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn act_on_x2_for_the_basic_transvection() {
        let f = gf(2);
        let s = Matrix::from_rows(f, &[[1, 0], [1, 1]]).unwrap();
        let x2 = Polynomial::var(f, 2, 1);
        let image = act(&s, &x2);
        assert_eq!(image, Polynomial::linear_form(f, &[1, 1]));
        // (σ·x2)(v) = x2(σ^{-1} v) on all four points
        let inv = s.inverse().unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let w = inv.mul_vec(&[a, b]);
                assert_eq!(image.evaluate(&[a, b]), x2.evaluate(&w));
            }
        }
        let r = classify_element(&s).unwrap();
        let d = delta(r.reflection().unwrap(), &x2).unwrap();
        assert!(d.is_one());
    }

    #[test]
    fn paper_generators_fix_x1_and_x2() {
        let g = fixtures::paper_example();
        let f = g.field();
        for s in g.generators() {
            for i in 0..2 {
                let x = Polynomial::var(f, 4, i);
                assert_eq!(act(s, &x), x);
            }
        }
    }

    #[test]
    fn transfer_of_top_power_in_one_transvection() {
        for p in [2u64, 3, 5] {
            let g = fixtures::single_transvection(p);
            let f = g.field();
            let x2 = Polynomial::var(f, 2, 1);
            let t = transfer(&g, &x2.pow(p - 1));
            let x1 = Polynomial::var(f, 2, 0).pow(p - 1);
            assert_eq!(t, x1.neg(), "p = {p}");
        }
    }

    #[test]
    fn twisted_transfer_for_a_homology() {
        let g = fixtures::diagonal(3, &[1, 2]);
        let f = g.field();
        let hs = hyperplanes(&g).unwrap();
        let chi = &hs[0].character;
        let x2 = Polynomial::var(f, 2, 1);
        assert_eq!(twisted_transfer(&g, chi, &x2.scale(2)).unwrap(), x2);
        let wrong = Character::trivial(f, 5);
        assert!(twisted_transfer(&g, &wrong, &x2).is_err());
    }

    #[test]
    fn paper_orbit_norms() {
        let g = fixtures::paper_example();
        let f = g.field();
        let lf = |c: &[u32]| Polynomial::linear_form(f, c);
        for (i, v) in [(2usize, [0u32, 0, 1, 0]), (3, [0, 0, 0, 1])] {
            let mut expect = Polynomial::one(f, 4);
            for mask in [[0, 0], [1, 0], [0, 1], [1, 1]] {
                let mut c = v;
                c[0] = mask[0];
                c[1] = mask[1];
                expect = expect.mul(&lf(&c));
            }
            let n = orbit_norm(&g, &Polynomial::var(f, 4, i));
            assert_eq!(n, expect);
            for s in g.generators() {
                assert_eq!(act(s, &n), n);
            }
        }
        let x1 = Polynomial::var(f, 4, 0);
        assert_eq!(orbit_norm(&g, &x1), x1);
    }

    #[test]
    fn weighted_matrix_matches_polynomial_transfer() {
        let g = fixtures::mixed_gf3();
        let f = g.field();
        let ring = GradedRing::new(f, 3, 4);
        let chi = hyperplanes(&g).unwrap().remove(1).character;
        let m = weighted_sum_matrix(&ring, &g, &twist_weights(&chi), 4);
        for (j, mono) in ring.space(4).monomials().iter().enumerate() {
            let tt = twisted_transfer(&g, &chi, &Polynomial::monomial(f, mono.clone(), 1)).unwrap();
            assert_eq!(m.row(j), ring.coords(4, &tt).unwrap().as_slice());
        }
    }
}
