use rayon::prelude::*;

use super::exponent::{default_test_bound, hyperplane_exponent, HyperplaneExponent};
use crate::error::{fault, Result};
use crate::gfcore::{dot, PrimeField};
use crate::matrixgroup::{decompose, hyperplanes, Character, Group, Hyperplane, ReflectionKind};
use crate::polyact::{act_by_inverse, Polynomial};

#[derive(Clone, Debug)]
pub struct HyperplaneFactor {
    pub hyperplane: Hyperplane,
    pub exponent: HyperplaneExponent,
}

impl HyperplaneFactor {
    pub fn form(&self) -> &[u32] {
        &self.hyperplane.form
    }

    pub fn a(&self) -> usize {
        self.exponent.exponent
    }

    /// `a_H = |G_H| - 1`.
    pub fn is_tame_shape(&self) -> bool {
        self.a() + 1 == self.hyperplane.stabilizer.order()
    }
}

/// The different `θ_G = Π x_H^{a_H}` and its semi-invariance character.
#[derive(Clone, Debug)]
pub struct DifferentResult {
    pub factors: Vec<HyperplaneFactor>,
    /// Monic: product of normalized forms.
    pub theta: Polynomial,
    /// `σ·θ = χ_θ(σ) θ`.
    pub character: Character,
    pub degree: usize,
    /// Product over the transvection hyperplanes.
    pub theta_t: Polynomial,
    /// Product over the homology hyperplanes.
    pub theta_d: Polynomial,
}

/// Computes `θ_G` hyperplane by hyperplane from the pointwise stabilizers.
///
/// `test_bound` overrides the per-hyperplane monomial degree cap.
pub fn different(g: &Group, test_bound: Option<usize>) -> Result<DifferentResult> {
    let f = g.field();
    let n = g.dim();
    let hs = hyperplanes(g)?;
    let factors = hs
        .into_par_iter()
        .map(|h| {
            let bound = test_bound.unwrap_or_else(|| default_test_bound(h.stabilizer.order()));
            let exponent = hyperplane_exponent(&h.stabilizer, &h.form, bound)?;
            Ok(HyperplaneFactor {
                hyperplane: h,
                exponent,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let product = |kind: Option<ReflectionKind>| -> Polynomial {
        factors
            .iter()
            .filter(|h| kind.is_none_or(|k| h.hyperplane.kind == k))
            .fold(Polynomial::one(f, n), |acc, h| {
                acc.mul(&Polynomial::linear_form(f, h.form()).pow(h.a() as u64))
            })
    };
    let theta = product(None);
    let theta_t = product(Some(ReflectionKind::Transvection));
    let theta_d = product(Some(ReflectionKind::Homology));
    let character = factors.iter().fold(Character::trivial(f, g.order()), |acc, h| {
        acc.mul(&h.hyperplane.character.pow(h.a() as u64))
    });
    let degree = factors.iter().map(HyperplaneFactor::a).sum();

    check_semi_invariance(g, &theta, &character)?;
    if theta.leading_term().map(|(_, c)| c) != Some(1) {
        return Err(fault!("θ = {theta} is not monic"));
    }
    check_factorization(g, &factors, &theta_t, &theta_d, f)?;

    Ok(DifferentResult {
        factors,
        theta,
        character,
        degree,
        theta_t,
        theta_d,
    })
}

fn check_semi_invariance(g: &Group, theta: &Polynomial, chi: &Character) -> Result<()> {
    for (i, inv) in g.inverses().iter().enumerate() {
        let image = act_by_inverse(inv, theta);
        if image != theta.scale(chi.value(i)?) {
            return Err(fault!(
                "element {i} maps θ = {theta} to {image}, not χ_θ = {} times θ",
                chi.value(i)?
            ));
        }
    }
    Ok(())
}

/// `θ = θ_T θ_D` with `θ_T` a function on `V^D`, `θ_D` on `V_D`, `D` fixing
/// `θ_T` and `T` fixing `θ_D`. Only meaningful for reflection groups.
fn check_factorization(
    g: &Group,
    factors: &[HyperplaneFactor],
    theta_t: &Polynomial,
    theta_d: &Polynomial,
    f: PrimeField,
) -> Result<()> {
    let Ok(dec) = decompose(g) else {
        return Ok(());
    };
    for h in factors {
        let (other, label) = match h.hyperplane.kind {
            ReflectionKind::Transvection => (&dec.moved_by_d, "V_D"),
            ReflectionKind::Homology => (&dec.fixed_by_d, "V^D"),
        };
        if other.basis().iter().any(|v| dot(f, v, h.form()) != 0) {
            return Err(fault!(
                "hyperplane form {:?} ({:?}) does not vanish on {label}",
                h.form(),
                h.hyperplane.kind
            ));
        }
    }
    for (sub, poly, name) in [(&dec.d, theta_t, "D on θ_T"), (&dec.t, theta_d, "T on θ_D")] {
        for inv in sub.inverses() {
            if act_by_inverse(inv, poly) != *poly {
                return Err(fault!("{name} is not trivial"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixgroup::fixtures;

    #[test]
    fn paper_different() {
        let g = fixtures::paper_example();
        let d = different(&g, None).unwrap();
        assert_eq!(d.degree, 3);
        assert!(d.character.is_trivial());
        let f = g.field();
        let x1 = Polynomial::var(f, 4, 0);
        let x2 = Polynomial::var(f, 4, 1);
        assert_eq!(d.theta, x1.mul(&x2).mul(&x1.add(&x2)));
        assert_eq!(d.theta_d, Polynomial::one(f, 4));
    }

    #[test]
    fn trivial_group_has_unit_different() {
        let f = PrimeField::new(3).unwrap();
        let d = different(&Group::trivial(f, 2), None).unwrap();
        assert!(d.theta.is_one());
        assert_eq!(d.degree, 0);
    }

    #[test]
    fn homology_different() {
        let g = fixtures::diagonal(3, &[1, 2]);
        let d = different(&g, None).unwrap();
        assert_eq!(d.theta, Polynomial::var(g.field(), 2, 1));
        let s = g.index_of(&g.generators()[0]).unwrap();
        assert_eq!(d.character.value(s).unwrap(), 2);
    }

    #[test]
    fn mixed_factorization() {
        let g = fixtures::mixed_gf3();
        let f = g.field();
        let d = different(&g, None).unwrap();
        assert_eq!(d.theta_t, Polynomial::var(f, 3, 0).pow(2));
        assert_eq!(d.theta_d, Polynomial::var(f, 3, 1));
        assert_eq!(d.theta, d.theta_t.mul(&d.theta_d));
    }
}
