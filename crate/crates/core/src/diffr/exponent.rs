use crate::error::{fault, Error, Result};
use crate::gfcore::Matrix;
use crate::matrixgroup::Group;
use crate::polyact::{monomials_of_degree, Monomial, Polynomial};

/// Outcome of the exponent search at one hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneExponent {
    /// Largest `a` with `x_H^a | Σ_{σ ∈ G_H} χ_H(σ)^{-a} σ(m)` for every tested `m`.
    pub exponent: usize,
    /// A monomial for which divisibility fails at `exponent + 1`.
    pub witness: Polynomial,
    /// Every monomial of degree `≤ test_bound` was tested.
    pub test_bound: usize,
    pub cap: usize,
}

/// Default monomial degree cap for the search: `2|G_H|`.
///
/// In coordinates `y_1 = x_H, y_2, ...` with `G_H` acting by
/// `y_1 ↦ χ y_1`, `y_j ↦ y_j + λ_j y_1`, the coefficient of
/// `y_1^{b+k} y'^{c-e}` in the twisted transfer of `y_1^b y'^c` is a product
/// of binomials times a sum that depends only on `(b, e)`, so a failure at
/// exponent `A` is already witnessed by `y_1^b y'^e`, of degree `< A`. The
/// exponent never exceeds the cap `2(|G_H| - 1)`, so degree `2|G_H|`
/// suffices.
pub fn default_test_bound(stabilizer_order: usize) -> usize {
    2 * stabilizer_order
}

/// `a_H` for the pointwise stabilizer `G_H` of `H = ker(x_H)`.
pub fn hyperplane_exponent(
    stabilizer: &Group,
    form: &[u32],
    test_bound: usize,
) -> Result<HyperplaneExponent> {
    let f = stabilizer.field();
    let n = stabilizer.dim();
    let lead = form
        .iter()
        .position(|&c| c != 0)
        .ok_or_else(|| Error::Dimension("zero hyperplane form".into()))?;
    // rows of B: x_H, then the unit covectors other than e_lead
    let mut b_rows = vec![form.to_vec()];
    for j in (0..n).filter(|&j| j != lead) {
        let mut e = vec![0u32; n];
        e[j] = 1;
        b_rows.push(e);
    }
    let b = Matrix::from_row_vectors(f, n, &b_rows);
    let b_inv = b.inverse().expect("adapted basis is invertible");

    // images of y_1..y_n under each σ ∈ G_H, in y-coordinates
    let mut chis = Vec::with_capacity(stabilizer.order());
    let mut images: Vec<Vec<Polynomial>> = Vec::with_capacity(stabilizer.order());
    for inv in stabilizer.inverses() {
        let l = b.mul(inv)?.mul(&b_inv)?;
        let chi = l.get(0, 0);
        if chi == 0 || (1..n).any(|k| l.get(0, k) != 0) {
            return Err(fault!("stabilizer element does not scale x_H: {l:?}"));
        }
        for j in 1..n {
            for k in 1..n {
                if l.get(j, k) != u32::from(j == k) {
                    return Err(fault!("stabilizer element moves H: {l:?}"));
                }
            }
        }
        chis.push(chi);
        images.push((0..n).map(|i| Polynomial::linear_form(f, l.row(i))).collect());
    }

    let cap = 2 * stabilizer.order().saturating_sub(1);
    for a in 1..=cap + 1 {
        let below = a as u16;
        let weights: Vec<u32> = chis
            .iter()
            .map(|&c| f.inv(f.pow(c, a as u64)).expect("unit"))
            .collect();
        for d in 0..=test_bound {
            for m in monomials_of_degree(n, d) {
                if m.exponent(0) >= below {
                    continue;
                }
                let mut acc = Polynomial::zero(f, n);
                for (img, &w) in images.iter().zip(&weights) {
                    acc = acc.add(&image_truncated(f, &m, img, below).scale(w));
                }
                if !acc.is_zero() {
                    let witness = Polynomial::monomial(f, m, 1).substitute_linear(&b_rows);
                    return Ok(HyperplaneExponent {
                        exponent: a - 1,
                        witness,
                        test_bound,
                        cap,
                    });
                }
            }
        }
    }
    Err(Error::ExponentCap { cap })
}

/// `σ(m)` with every term of `y_1`-degree `≥ below` dropped.
fn image_truncated(
    f: crate::gfcore::PrimeField,
    m: &Monomial,
    images: &[Polynomial],
    below: u16,
) -> Polynomial {
    let n = m.n_vars();
    let mut acc = Polynomial::one(f, n);
    for (i, &e) in m.exponents().iter().enumerate() {
        for _ in 0..e {
            acc = acc.mul_truncated(&images[i], 0, below);
            if acc.is_zero() {
                return acc;
            }
        }
    }
    acc
}
