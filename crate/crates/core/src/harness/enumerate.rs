use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gfcore::{Matrix, PrimeField};
use crate::matrixgroup::{classify_element, normalize, Group};

/// Isomorphism-ish invariant of a matrix group: order plus the multiset of
/// element classes with characteristic polynomials. Conjugate groups share it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupSignature {
    pub p: u32,
    pub n: usize,
    pub order: usize,
    pub classes: Vec<String>,
}

pub fn signature(g: &Group) -> Result<GroupSignature> {
    let mut classes = Vec::with_capacity(g.order());
    for m in g.elements() {
        let c = classify_element(m)?;
        classes.push(format!("{}:{:?}", c.label(), m.charpoly()));
    }
    classes.sort();
    Ok(GroupSignature {
        p: g.p(),
        n: g.dim(),
        order: g.order(),
        classes,
    })
}

#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    pub name: String,
    pub group: Group,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every subgroup generated by commuting reflections, one per signature.
    Exhaustive,
    /// Distinct groups from random commuting reflection sets.
    Sampled { seed: u64, count: usize },
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub groups: Vec<EnumeratedGroup>,
    /// Sampling stopped before reaching the requested count.
    pub truncated: bool,
}

/// Every pseudo-reflection `v ↦ v + x(v) e` of `GL_n(p)`, with `x` normalized.
pub fn all_reflections(f: PrimeField, n: usize) -> Vec<Matrix> {
    let vectors = nonzero_vectors(f, n);
    let mut out = Vec::new();
    for x in &vectors {
        let mut xn = x.clone();
        normalize(f, &mut xn);
        if xn != *x {
            continue;
        }
        for e in &vectors {
            let xe = e.iter().zip(x).fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b));
            if f.add(1, xe) == 0 {
                continue;
            }
            let mut m = Matrix::identity(f, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, f.mul_add(m.get(i, j), e[i], x[j]));
                }
            }
            out.push(m);
        }
    }
    out
}

fn nonzero_vectors(f: PrimeField, n: usize) -> Vec<Vec<u32>> {
    let p = f.p();
    let total = (p as usize).pow(n as u32);
    (1..total)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let d = (k % p as usize) as u32;
                    k /= p as usize;
                    d
                })
                .collect()
        })
        .collect()
}

fn element_key(g: &Group) -> Vec<Vec<u32>> {
    let mut key: Vec<Vec<u32>> = g.elements().iter().map(|m| m.data().to_vec()).collect();
    key.sort();
    key
}

fn commutes(a: &Matrix, b: &Matrix) -> bool {
    a.mul(b).ok() == b.mul(a).ok()
}

/// `⟨gens⟩` when its order is at most `max_order`.
fn close_within(f: PrimeField, n: usize, gens: Vec<Matrix>, max_order: usize) -> Result<Option<Group>> {
    match Group::close(f, n, gens, max_order) {
        Ok(g) => Ok(Some(g)),
        Err(Error::ElementCap(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn enumerate_abelian_reflection_groups(
    n: usize,
    p: u64,
    max_order: usize,
    mode: EnumerationMode,
) -> Result<Enumeration> {
    let f = PrimeField::new(p)?;
    let refl = all_reflections(f, n);
    match mode {
        EnumerationMode::Exhaustive => exhaustive(f, n, max_order, &refl),
        EnumerationMode::Sampled { seed, count } => sampled(f, n, max_order, &refl, seed, count),
    }
}

fn exhaustive(f: PrimeField, n: usize, max_order: usize, refl: &[Matrix]) -> Result<Enumeration> {
    let mut seen = HashSet::new();
    let mut signatures = BTreeSet::new();
    let mut groups = Vec::new();
    let mut stack = vec![Group::trivial(f, n)];
    seen.insert(element_key(&stack[0]));
    while let Some(g) = stack.pop() {
        if signatures.insert(signature(&g)?) {
            groups.push(g.clone());
        }
        for r in refl {
            if g.contains(r) || !g.generators().iter().all(|s| commutes(s, r)) {
                continue;
            }
            let mut gens = g.generators().to_vec();
            gens.push(r.clone());
            if let Some(h) = close_within(f, n, gens, max_order)? {
                if seen.insert(element_key(&h)) {
                    stack.push(h);
                }
            }
        }
    }
    groups.sort_by_key(|g| g.order());
    Ok(Enumeration {
        groups: name_all(groups, "refl", n, f.p()),
        truncated: false,
    })
}

fn sampled(
    f: PrimeField,
    n: usize,
    max_order: usize,
    refl: &[Matrix],
    seed: u64,
    count: usize,
) -> Result<Enumeration> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut groups = Vec::new();
    let mut attempts = 0;
    while groups.len() < count && attempts < 20 * count {
        attempts += 1;
        let target = rng.gen_range(1..=n + 1);
        let mut g = Group::trivial(f, n);
        for _ in 0..target {
            let options: Vec<&Matrix> = refl
                .iter()
                .filter(|r| !g.contains(r) && g.generators().iter().all(|s| commutes(s, r)))
                .collect();
            let Some(r) = options.choose(&mut rng) else { break };
            let mut gens = g.generators().to_vec();
            gens.push((*r).clone());
            match close_within(f, n, gens, max_order)? {
                Some(h) => g = h,
                None => break,
            }
        }
        if seen.insert(element_key(&g)) {
            groups.push(g);
        }
    }
    Ok(Enumeration {
        truncated: groups.len() < count,
        groups: name_all(groups, "sample", n, f.p()),
    })
}

/// Abelian groups that are not generated by reflections: scalar groups and
/// seeded random cyclic groups of order at most `max_order`.
pub fn non_reflection_abelian_groups(
    n: usize,
    p: u64,
    max_order: usize,
    seed: u64,
    count: usize,
) -> Result<Vec<EnumeratedGroup>> {
    let f = PrimeField::new(p)?;
    let mut seen = HashSet::new();
    let mut groups = Vec::new();
    let mut keep = |g: Group, groups: &mut Vec<Group>| -> Result<()> {
        if seen.insert(element_key(&g)) && !crate::matrixgroup::reflection_census(&g)?.is_reflection_group {
            groups.push(g);
        }
        Ok(())
    };
    if n >= 2 {
        for c in 2..f.p() {
            let m = Matrix::identity(f, n).scale(c);
            if let Some(g) = close_within(f, n, vec![m], max_order)? {
                keep(g, &mut groups)?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut found = 0;
    for _ in 0..50 * count.max(1) {
        if found >= count {
            break;
        }
        let data: Vec<u32> = (0..n * n).map(|_| rng.gen_range(0..f.p())).collect();
        let m = Matrix::from_data(f, n, n, data);
        if !m.is_invertible() || classify_element(&m)?.reflection().is_some() || m.is_identity() {
            continue;
        }
        if let Some(g) = close_within(f, n, vec![m], max_order)? {
            let before = groups.len();
            keep(g, &mut groups)?;
            found += groups.len() - before;
        }
    }
    Ok(name_all(groups, "other", n, f.p()))
}

fn name_all(groups: Vec<Group>, prefix: &str, n: usize, p: u32) -> Vec<EnumeratedGroup> {
    groups
        .into_iter()
        .enumerate()
        .map(|(i, group)| EnumeratedGroup {
            name: format!("{prefix}-n{n}-p{p}-{i:03}"),
            group,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_counts() {
        // GL_2(2) has 3 transvections; GL_2(3) has 8 transvections and 12 homologies
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(all_reflections(f2, 2).len(), 3);
        let f3 = PrimeField::new(3).unwrap();
        let r = all_reflections(f3, 2);
        let kinds: Vec<_> = r
            .iter()
            .map(|m| classify_element(m).unwrap().label())
            .collect();
        assert_eq!(kinds.iter().filter(|&&k| k == "transvection").count(), 8);
        assert_eq!(kinds.iter().filter(|&&k| k == "homology").count(), 12);
    }

    #[test]
    fn exhaustive_groups_are_abelian_reflection_groups() {
        // distinct transvections of GF(2)^2 never commute
        for (p, least) in [(2, 2), (3, 3)] {
            let e = enumerate_abelian_reflection_groups(2, p, 100, EnumerationMode::Exhaustive).unwrap();
            assert!(e.groups.len() >= least);
            if p == 2 {
                assert_eq!(e.groups.len(), 2);
            }
            let signatures: BTreeSet<_> = e.groups.iter().map(|g| signature(&g.group).unwrap()).collect();
            assert_eq!(signatures.len(), e.groups.len());
            for g in &e.groups {
                assert!(g.group.all_elements_commute());
                let c = crate::matrixgroup::reflection_census(&g.group).unwrap();
                assert!(c.is_reflection_group);
            }
        }
    }

    #[test]
    fn sampling_is_seeded() {
        let mode = EnumerationMode::Sampled { seed: 7, count: 15 };
        let a = enumerate_abelian_reflection_groups(3, 3, 27, mode).unwrap();
        let b = enumerate_abelian_reflection_groups(3, 3, 27, mode).unwrap();
        assert_eq!(a.groups.len(), 15);
        for (x, y) in a.groups.iter().zip(&b.groups) {
            assert_eq!(x.group.elements(), y.group.elements());
            assert!(x.group.order() <= 27);
        }
    }

    #[test]
    fn extra_groups_are_not_reflection_groups() {
        let extra = non_reflection_abelian_groups(2, 5, 30, 1, 4).unwrap();
        assert!(!extra.is_empty());
        for g in &extra {
            assert!(g.group.is_abelian());
        }
    }
}
