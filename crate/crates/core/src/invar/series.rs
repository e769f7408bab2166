use super::table::InvariantTable;
use crate::error::{Error, Result};
use crate::matrixgroup::{Decomposition, Group};

/// Coefficient-wise comparison of Hilbert series for the split
/// `k[V]^G ≅ k[V^D]^T ⊗ k[V_D]^D`, plus the character-sum formula for the
/// non-modular factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCheck {
    pub degree: usize,
    pub series: Vec<usize>,
    /// `k[V^D]^T`.
    pub t_series: Vec<usize>,
    /// `k[V_D]^D`.
    pub d_series: Vec<usize>,
    pub product: Vec<usize>,
    /// Character-sum series of `k[V_D]^D`.
    pub molien: Vec<usize>,
    pub first_mismatch: Option<usize>,
    pub molien_mismatch: Option<usize>,
}

impl SeriesCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none() && self.molien_mismatch.is_none()
    }
}

pub fn hilbert_series_checks(g: &Group, dec: &Decomposition, degree: usize) -> Result<SeriesCheck> {
    let series = InvariantTable::compute(g, degree).hilbert_series();
    let t_series = if dec.fixed_by_d.is_zero() {
        point_series(degree)
    } else {
        InvariantTable::compute(&dec.t_on_fixed()?, degree).hilbert_series()
    };
    let (d_series, molien) = if dec.moved_by_d.is_zero() {
        (point_series(degree), point_series(degree))
    } else {
        let d = dec.d_on_moved()?;
        (
            InvariantTable::compute(&d, degree).hilbert_series(),
            molien_series(&d, degree)?,
        )
    };
    let product: Vec<usize> = (0..=degree)
        .map(|k| (0..=k).map(|a| t_series[a] * d_series[k - a]).sum())
        .collect();
    let first_mismatch = series.iter().zip(&product).position(|(a, b)| a != b);
    let molien_mismatch = d_series.iter().zip(&molien).position(|(a, b)| a != b);
    Ok(SeriesCheck {
        degree,
        series,
        t_series,
        d_series,
        product,
        molien,
        first_mismatch,
        molien_mismatch,
    })
}

/// Series of the polynomial ring in zero variables.
fn point_series(degree: usize) -> Vec<usize> {
    let mut s = vec![0; degree + 1];
    s[0] = 1;
    s
}

/// `dim k[V]^G_d = |G|^{-1} Σ_σ [t^d] 1/det(1 - t σ̃)` for a non-modular
/// group whose eigenvalues lie in GF(p), with eigenvalues lifted to
/// `(p-1)`-th roots of unity and the sum evaluated exactly in `Z[ζ]`.
pub fn molien_series(g: &Group, degree: usize) -> Result<Vec<usize>> {
    if !g.is_nonmodular() {
        return Err(Error::Unsupported(format!(
            "character-sum series needs p ∤ |G| (|G| = {}, p = {})",
            g.order(),
            g.p()
        )));
    }
    let f = g.field();
    let m = (f.p() - 1) as usize;
    let root = f.primitive_root();
    let mut log = vec![0usize; f.p() as usize];
    let mut x = 1u32;
    for k in 0..m {
        log[x as usize] = k;
        x = f.mul(x, root);
    }
    // totals[d][j]: number of (σ, monomial of degree d) with weight ζ^j
    let mut totals = vec![vec![0i64; m]; degree + 1];
    for s in g.elements() {
        let eig = eigenvalues(s)?;
        let mut acc = vec![vec![0i64; m]; degree + 1];
        acc[0][0] = 1;
        for &c in &eig {
            let e = log[c as usize];
            // multiply by Σ_k ζ^{ek} t^k
            for d in 1..=degree {
                for j in 0..m {
                    let prev = acc[d - 1][(j + m - e % m) % m];
                    acc[d][j] += prev;
                }
            }
        }
        for (t, a) in totals.iter_mut().zip(&acc) {
            for (x, y) in t.iter_mut().zip(a) {
                *x += y;
            }
        }
    }
    let phi = cyclotomic(m);
    let order = g.order() as i64;
    totals
        .iter()
        .enumerate()
        .map(|(d, v)| {
            let r = poly_rem(v, &phi);
            if r.iter().skip(1).any(|&c| c != 0) || r[0] % order != 0 {
                return Err(crate::error::fault!(
                    "character sum at degree {d} is not an integer multiple of |G|: {r:?}"
                ));
            }
            Ok((r[0] / order) as usize)
        })
        .collect()
}

/// Eigenvalues with multiplicity; all must lie in GF(p).
fn eigenvalues(s: &crate::gfcore::Matrix) -> Result<Vec<u32>> {
    let f = s.field();
    let mut cp = s.charpoly();
    let mut out = Vec::new();
    for c in 1..f.p() {
        loop {
            // synthetic division by (t - c), coefficients low to high
            let k = cp.len() - 1;
            if k == 0 {
                break;
            }
            let mut q = vec![0u32; k];
            let mut carry = 0u32;
            for i in (0..=k).rev() {
                let v = f.add(cp[i], f.mul(carry, c));
                if i == 0 {
                    carry = v;
                } else {
                    q[i - 1] = v;
                    carry = v;
                }
            }
            if carry != 0 {
                break;
            }
            out.push(c);
            cp = q;
        }
    }
    if out.len() != s.rows() {
        return Err(Error::Unsupported(
            "eigenvalues outside the base field".into(),
        ));
    }
    Ok(out)
}

/// `Φ_m` with integer coefficients, low degree first.
fn cyclotomic(m: usize) -> Vec<i64> {
    let mut p = vec![0i64; m + 1];
    p[0] = -1;
    p[m] = 1;
    for d in 1..m {
        if m % d == 0 {
            p = poly_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// Remainder modulo a monic polynomial; always returns at least one coefficient.
fn poly_rem(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let c = r.pop().unwrap();
        let top = r.len();
        for (j, &bj) in b.iter().take(db).enumerate() {
            r[top - db + j] -= c * bj;
        }
    }
    if r.is_empty() {
        r.push(0);
    }
    r
}
