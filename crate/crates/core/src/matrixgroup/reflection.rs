use serde::{Deserialize, Serialize};

use super::group::Group;
use crate::error::{fault, Result};
use crate::gfcore::{dot, Matrix, PrimeField, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflectionKind {
    Transvection,
    Homology,
}

/// Rank-one data of a pseudo-reflection: `ρ(v) - v = x(v) e`.
///
/// `form` is normalized so that its first nonzero coefficient is 1; `vector`
/// absorbs the scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionInfo {
    pub kind: ReflectionKind,
    pub vector: Vec<u32>,
    pub form: Vec<u32>,
    /// `V^ρ = ker(form)`.
    pub hyperplane: Subspace,
    /// `ρ(e) = c e`; equal to 1 exactly for transvections.
    pub eigenvalue: u32,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementClass {
    Identity,
    Reflection(ReflectionInfo),
    NonReflection,
}

impl ElementClass {
    pub fn reflection(&self) -> Option<&ReflectionInfo> {
        match self {
            ElementClass::Reflection(r) => Some(r),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ElementClass::Identity => "identity",
            ElementClass::Reflection(r) => match r.kind {
                ReflectionKind::Transvection => "transvection",
                ReflectionKind::Homology => "homology",
            },
            ElementClass::NonReflection => "non_reflection",
        }
    }
}

/// Scales a nonzero vector so its first nonzero entry is 1; returns the
/// scalar that was divided out.
pub fn normalize(f: PrimeField, v: &mut [u32]) -> Option<u32> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.inv(lead).expect("nonzero");
    for x in v.iter_mut() {
        *x = f.mul(*x, inv);
    }
    Some(lead)
}

pub fn classify_element(sigma: &Matrix) -> Result<ElementClass> {
    assert!(sigma.is_square());
    let f = sigma.field();
    let n = sigma.rows();
    if sigma.is_identity() {
        return Ok(ElementClass::Identity);
    }
    let m = sigma.minus_identity();
    if m.rank() != 1 {
        return Ok(ElementClass::NonReflection);
    }
    let i0 = (0..n)
        .find(|&i| m.row(i).iter().any(|&x| x != 0))
        .expect("rank one");
    let mut form = m.row(i0).to_vec();
    normalize(f, &mut form);
    let j0 = form.iter().position(|&x| x == 1).expect("normalized");
    let vector: Vec<u32> = (0..n).map(|i| m.get(i, j0)).collect();
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) != f.mul(vector[i], form[j]) {
                return Err(fault!("rank-one factorization failed for {sigma:?}"));
            }
        }
    }
    let eigenvalue = f.add(1, dot(f, &form, &vector));
    if eigenvalue == 0 {
        return Err(fault!("pseudo-reflection with eigenvalue 0 is singular: {sigma:?}"));
    }
    let kind = if eigenvalue == 1 {
        ReflectionKind::Transvection
    } else {
        ReflectionKind::Homology
    };
    let hyperplane = Matrix::from_row_vectors(f, n, std::slice::from_ref(&form)).kernel();
    Ok(ElementClass::Reflection(ReflectionInfo {
        kind,
        vector,
        form,
        hyperplane,
        eigenvalue,
        matrix: sigma.clone(),
    }))
}

impl ReflectionInfo {
    /// `I + e x`, which must equal the classified matrix.
    pub fn reconstruct(&self) -> Matrix {
        let f = self.matrix.field();
        let n = self.form.len();
        let mut m = Matrix::identity(f, n);
        for i in 0..n {
            for j in 0..n {
                let v = f.mul_add(m.get(i, j), self.vector[i], self.form[j]);
                m.set(i, j, v);
            }
        }
        m
    }
}

/// Every pseudo-reflection of the group together with the subgroups they
/// generate.
#[derive(Clone, Debug)]
pub struct ReflectionCensus {
    /// `(element index, data)` in element order.
    pub reflections: Vec<(usize, ReflectionInfo)>,
    pub is_reflection_group: bool,
    pub transvection_subgroup: Group,
    pub homology_subgroup: Group,
}

impl ReflectionCensus {
    pub fn transvection_count(&self) -> usize {
        self.reflections
            .iter()
            .filter(|(_, r)| r.kind == ReflectionKind::Transvection)
            .count()
    }

    pub fn homology_count(&self) -> usize {
        self.reflections.len() - self.transvection_count()
    }

    pub fn of_kind(&self, kind: ReflectionKind) -> impl Iterator<Item = &ReflectionInfo> {
        self.reflections
            .iter()
            .filter(move |(_, r)| r.kind == kind)
            .map(|(_, r)| r)
    }
}

pub fn classify_all(g: &Group) -> Result<Vec<ElementClass>> {
    g.elements().iter().map(classify_element).collect()
}

pub fn reflection_census(g: &Group) -> Result<ReflectionCensus> {
    let mut reflections = Vec::new();
    for (i, m) in g.elements().iter().enumerate() {
        if let ElementClass::Reflection(r) = classify_element(m)? {
            reflections.push((i, r));
        }
    }
    let gens = |kind: Option<ReflectionKind>| -> Vec<Matrix> {
        reflections
            .iter()
            .filter(|(_, r)| kind.is_none_or(|k| r.kind == k))
            .map(|(_, r)| r.matrix.clone())
            .collect()
    };
    let all = g.subgroup(gens(None))?;
    Ok(ReflectionCensus {
        is_reflection_group: all.order() == g.order(),
        transvection_subgroup: g.subgroup(gens(Some(ReflectionKind::Transvection)))?,
        homology_subgroup: g.subgroup(gens(Some(ReflectionKind::Homology)))?,
        reflections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixgroup::fixtures;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn paper_generators_are_transvections() {
        let g = fixtures::paper_example();
        let forms = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]];
        for (gen, form) in g.generators().iter().zip(forms) {
            let r = classify_element(gen).unwrap();
            let r = r.reflection().unwrap();
            assert_eq!(r.kind, ReflectionKind::Transvection);
            assert_eq!(r.form, form);
            assert_eq!(r.reconstruct(), *gen);
        }
    }

    #[test]
    fn product_of_two_paper_transvections_is_not_a_reflection() {
        let g = fixtures::paper_example();
        let s12 = g.generators()[0].mul(&g.generators()[1]).unwrap();
        assert_eq!(s12.minus_identity().rank(), 2);
        assert_eq!(classify_element(&s12).unwrap(), ElementClass::NonReflection);
    }

    #[test]
    fn diagonal_homology() {
        let fl = f(5);
        let m = Matrix::from_rows(fl, &[[1, 0, 0], [0, 1, 0], [0, 0, 3]]).unwrap();
        let ElementClass::Reflection(r) = classify_element(&m).unwrap() else {
            panic!("expected a reflection");
        };
        assert_eq!(r.kind, ReflectionKind::Homology);
        assert_eq!(r.eigenvalue, 3);
        assert_eq!(r.form, vec![0, 0, 1]);
        assert_eq!(r.reconstruct(), m);
    }

    #[test]
    fn identity_is_identity() {
        assert_eq!(
            classify_element(&Matrix::identity(f(3), 3)).unwrap(),
            ElementClass::Identity
        );
    }

    #[test]
    fn census_paper_example() {
        let c = reflection_census(&fixtures::paper_example()).unwrap();
        assert_eq!(c.transvection_count(), 3);
        assert_eq!(c.homology_count(), 0);
        assert!(c.is_reflection_group);
        assert_eq!(c.transvection_subgroup.order(), 8);
        assert_eq!(c.homology_subgroup.order(), 1);
    }

    #[test]
    fn census_homology_group() {
        let c = reflection_census(&fixtures::diagonal(3, &[1, 2])).unwrap();
        assert_eq!(c.homology_count(), 1);
        assert_eq!(c.transvection_subgroup.order(), 1);
        assert_eq!(c.homology_subgroup.order(), 2);
        assert!(c.is_reflection_group);
    }

    #[test]
    fn census_minus_identity_has_no_reflections() {
        let fl = f(5);
        let g = Group::close(fl, 2, vec![Matrix::identity(fl, 2).scale(4)], 10).unwrap();
        let c = reflection_census(&g).unwrap();
        assert!(c.reflections.is_empty());
        assert!(!c.is_reflection_group);
    }

    #[test]
    fn every_reflection_of_small_gl_reconstructs() {
        // all of GL_2(F_3)
        let fl = f(3);
        let mut seen = 0;
        for code in 0..81u32 {
            let e: Vec<i64> = (0..4).map(|k| ((code / 3u32.pow(k)) % 3) as i64).collect();
            let m = Matrix::from_rows(fl, &[[e[0], e[1]], [e[2], e[3]]]).unwrap();
            if !m.is_invertible() {
                continue;
            }
            if let ElementClass::Reflection(r) = classify_element(&m).unwrap() {
                seen += 1;
                assert_eq!(r.reconstruct(), m);
                let transvection = m.minus_identity().mul(&m.minus_identity()).unwrap().is_zero();
                assert_eq!(r.kind == ReflectionKind::Transvection, transvection);
            }
        }
        // 4 hyperplanes x (8 - 3) admissible vectors
        assert_eq!(seen, 20);
    }
}
