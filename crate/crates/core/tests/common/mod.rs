//! Small, deliberately naive GF(p) algebra used as an oracle against the
//! library. Nothing here calls into the library's linear algebra.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

pub type Mat = Vec<Vec<u64>>;
/// Exponent vector to coefficient.
pub type Poly = BTreeMap<Vec<u32>, u64>;

pub fn inv(p: u64, a: u64) -> u64 {
    let mut r = 1;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    assert!(a % p != 0 && r * a % p == 1);
    r
}

pub fn reduce(p: u64, m: &[Vec<i64>]) -> Mat {
    m.iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect()
}

pub fn mat_mul(p: u64, a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum::<u64>() % p)
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

/// Rank by plain Gaussian elimination.
pub fn rank(p: u64, mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] % p != 0) else { continue };
        rows.swap(r, piv);
        let s = inv(p, rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let t = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + p * p - t * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn mat_inv(p: u64, m: &Mat) -> Mat {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| a[i][c] != 0).expect("invertible");
        a.swap(c, piv);
        let s = inv(p, a[c][c]);
        for x in a[c].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..n {
            if i != c && a[i][c] != 0 {
                let t = a[i][c];
                for j in 0..2 * n {
                    a[i][j] = (a[i][j] + p * p - t * a[c][j] % p) % p;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// All elements of `⟨gens⟩` by breadth-first search.
pub fn closure(p: u64, n: usize, gens: &[Mat]) -> Vec<Mat> {
    let mut seen: HashSet<Mat> = HashSet::from([identity(n)]);
    let mut out = vec![identity(n)];
    let mut queue = VecDeque::from([identity(n)]);
    while let Some(a) = queue.pop_front() {
        for g in gens {
            let b = mat_mul(p, &a, g);
            if seen.insert(b.clone()) {
                out.push(b.clone());
                queue.push_back(b);
            }
        }
    }
    out
}

pub fn is_reflection(p: u64, m: &Mat) -> bool {
    let n = m.len();
    let d: Mat = (0..n)
        .map(|i| (0..n).map(|j| (m[i][j] + p - u64::from(i == j)) % p).collect())
        .collect();
    rank(p, d) == 1
}

/// Whether the reflections in the group generate it.
pub fn is_reflection_group(p: u64, n: usize, elements: &[Mat]) -> bool {
    let refl: Vec<Mat> = elements.iter().filter(|m| is_reflection(p, m)).cloned().collect();
    closure(p, n, &refl).len() == elements.len()
}

pub fn monomials(n: usize, d: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in 0..=d {
        for mut rest in monomials(n - 1, d - a) {
            rest.insert(0, a as u32);
            out.push(rest);
        }
    }
    out
}

pub fn poly_mul(p: u64, a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = out.entry(e).or_insert(0);
            *c = (*c + ca * cb) % p;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn poly_add(p: u64, a: &Poly, b: &Poly, scale_b: u64) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        let t = out.entry(e.clone()).or_insert(0);
        *t = (*t + c * scale_b) % p;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn linear(n: usize, coeffs: &[u64]) -> Poly {
    let mut out = Poly::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            let mut e = vec![0; n];
            e[i] = 1;
            out.insert(e, c);
        }
    }
    out
}

pub fn one(n: usize) -> Poly {
    Poly::from([(vec![0; n], 1)])
}

/// `σ·f`, i.e. `x_i ↦` row `i` of `σ^{-1}`.
pub fn act(p: u64, sigma: &Mat, f: &Poly) -> Poly {
    let n = sigma.len();
    let s_inv = mat_inv(p, sigma);
    let images: Vec<Poly> = s_inv.iter().map(|row| linear(n, row)).collect();
    let mut out = Poly::new();
    for (e, &c) in f {
        let mut term = Poly::from([(vec![0; n], c)]);
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                term = poly_mul(p, &term, &images[i]);
            }
        }
        out = poly_add(p, &out, &term, 1);
    }
    out
}

/// Coefficient vector of a homogeneous polynomial in the given monomial order.
pub fn coords(f: &Poly, monos: &[Vec<u32>]) -> Vec<u64> {
    monos.iter().map(|m| f.get(m).copied().unwrap_or(0)).collect()
}

/// `dim k[V]^G_d` as `dim k[V]_d - rank` of the stacked `σ_i - 1` over generators.
pub fn invariant_dim(p: u64, n: usize, gens: &[Mat], d: usize) -> usize {
    let monos = monomials(n, d);
    let rows: Vec<Vec<u64>> = monos
        .iter()
        .map(|m| {
            let f = Poly::from([(m.clone(), 1)]);
            let mut row = Vec::new();
            for g in gens {
                let diff = poly_add(p, &act(p, g, &f), &f, p - 1);
                row.extend(coords(&diff, &monos));
            }
            row
        })
        .collect();
    if gens.is_empty() {
        return monos.len();
    }
    monos.len() - rank(p, rows)
}

/// Number of fixed polynomials in `k[V]_d`, found by listing all of them.
/// Only for tiny spaces.
pub fn count_fixed_by_listing(p: u64, n: usize, gens: &[Mat], d: usize) -> u64 {
    let monos = monomials(n, d);
    let images: Vec<Vec<Vec<u64>>> = gens
        .iter()
        .map(|g| {
            monos
                .iter()
                .map(|m| coords(&act(p, g, &Poly::from([(m.clone(), 1)])), &monos))
                .collect()
        })
        .collect();
    let dim = monos.len();
    let total = p.pow(dim as u32);
    let mut count = 0;
    let mut c = vec![0u64; dim];
    for k in 0..total {
        let mut t = k;
        for x in c.iter_mut() {
            *x = t % p;
            t /= p;
        }
        let fixed = images.iter().all(|img| {
            (0..dim).all(|j| (0..dim).map(|i| c[i] * img[i][j]).sum::<u64>() % p == c[j])
        });
        if fixed {
            count += 1;
        }
    }
    count
}
