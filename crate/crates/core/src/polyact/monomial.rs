use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial in `x1..xn`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x1`, then `x2`, and so on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 4]>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, n),
        }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Self {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Self {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        self.divides(other).then(|| Self {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Index of the first variable with a positive exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.as_slice().cmp(other.exps.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `x1^2*x3`; the empty product prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `n` variables, largest first.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fill(&mut exps, 0, d, &mut out);
    out
}

fn fill(exps: &mut [u16], i: usize, left: usize, out: &mut Vec<Monomial>) {
    let n = exps.len();
    if n == 0 {
        if left == 0 {
            out.push(Monomial::one(0));
        }
        return;
    }
    if i == n - 1 {
        exps[i] = left as u16;
        out.push(Monomial::from_exponents(exps));
        exps[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e as u16;
        fill(exps, i + 1, left - e, out);
    }
    exps[i] = 0;
}

/// `C(n + d - 1, d)`.
pub fn count_of_degree(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    let mut c: u128 = 1;
    for k in 1..=d as u128 {
        c = c * (n as u128 - 1 + k) / k;
    }
    c as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let a = Monomial::from_exponents(&[2, 0]);
        let b = Monomial::from_exponents(&[1, 1]);
        let c = Monomial::from_exponents(&[0, 2]);
        let d = Monomial::from_exponents(&[0, 3]);
        assert!(a > b && b > c && d > a);
    }

    #[test]
    fn enumeration_is_descending_and_complete() {
        for n in 1..5 {
            for d in 0..7 {
                let ms = monomials_of_degree(n, d);
                assert_eq!(ms.len(), count_of_degree(n, d));
                assert!(ms.windows(2).all(|w| w[0] > w[1]));
                assert!(ms.iter().all(|m| m.degree() == d));
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::from_exponents(&[2, 1, 0]).to_string(), "x1^2*x2");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }

    #[test]
    fn division() {
        let a = Monomial::from_exponents(&[1, 2]);
        let b = Monomial::from_exponents(&[2, 3]);
        assert_eq!(a.quotient_of(&b), Some(Monomial::from_exponents(&[1, 1])));
        assert_eq!(b.quotient_of(&a), None);
    }
}
