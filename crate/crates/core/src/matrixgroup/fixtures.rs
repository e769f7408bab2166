//! Small groups reused across tests, examples and the CLI.

use super::group::{Group, DEFAULT_ELEMENT_CAP};
use crate::gfcore::{Matrix, PrimeField};

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).expect("fixture prime")
}

fn close(f: PrimeField, n: usize, gens: Vec<Matrix>) -> Group {
    Group::close(f, n, gens, DEFAULT_ELEMENT_CAP).expect("fixture closes")
}

/// The three generators of the order-8 group over GF(2)^4 with reflecting
/// forms `x1`, `x2`, `x1 + x2`.
pub fn paper_example_generators() -> Vec<Matrix> {
    let f = field(2);
    let rows: [[[i64; 4]; 4]; 3] = [
        [[1, 0, 0, 0], [0, 1, 0, 0], [1, 0, 1, 0], [0, 0, 0, 1]],
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]],
        [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 0], [1, 1, 0, 1]],
    ];
    rows.iter()
        .map(|r| Matrix::from_rows(f, r).expect("4x4"))
        .collect()
}

pub fn paper_example() -> Group {
    close(field(2), 4, paper_example_generators())
}

/// `⟨[[1,0],[1,1]]⟩` over GF(p), of order p.
pub fn single_transvection(p: u64) -> Group {
    let f = field(p);
    close(f, 2, vec![Matrix::from_rows(f, &[[1, 0], [1, 1]]).unwrap()])
}

/// Cyclic group generated by one diagonal matrix.
pub fn diagonal(p: u64, diag: &[i64]) -> Group {
    let f = field(p);
    let n = diag.len();
    let mut m = Matrix::identity(f, n);
    for (i, &d) in diag.iter().enumerate() {
        m.set(i, i, f.reduce(d));
    }
    close(f, n, vec![m])
}

/// A transvection on coordinates 1 and 3 together with a homology on
/// coordinate 2, over GF(3); order 6.
pub fn mixed_gf3() -> Group {
    let f = field(3);
    let t = Matrix::from_rows(f, &[[1, 0, 0], [0, 1, 0], [1, 0, 1]]).unwrap();
    let d = Matrix::from_rows(f, &[[1, 0, 0], [0, 2, 0], [0, 0, 1]]).unwrap();
    close(f, 3, vec![t, d])
}
