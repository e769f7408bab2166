use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfcore::{is_prime, Matrix, PrimeField};
use crate::matrixgroup::Group;

/// A group given by generators, as read from or written to JSON:
///
/// ```json
/// {"name": "...", "p": 2, "n": 2, "generators": [[[1, 0], [1, 1]]]}
/// ```
///
/// Matrices act on column vectors. Entries may be any integers; they are
/// reduced mod `p` on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub name: String,
    pub p: u64,
    pub n: usize,
    pub generators: Vec<Vec<Vec<i64>>>,
}

impl GroupSpec {
    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.p)
    }

    pub fn matrices(&self) -> Result<Vec<Matrix>> {
        let f = self.field()?;
        self.generators
            .iter()
            .map(|g| Matrix::from_rows(f, g))
            .collect()
    }

    pub fn to_group(&self, element_cap: usize) -> Result<Group> {
        Group::close(self.field()?, self.n, self.matrices()?, element_cap)
    }

    pub fn from_group(name: impl Into<String>, g: &Group) -> Self {
        Self {
            name: name.into(),
            p: g.p() as u64,
            n: g.dim(),
            generators: g.generators().iter().map(Matrix::to_int_rows).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}

pub fn parse_spec(bytes: &[u8]) -> Result<GroupSpec> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::Spec(format!("input is not UTF-8: {e}")))?;
    let mut spec: GroupSpec = serde_json::from_str(text).map_err(|e| {
        Error::Spec(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    if !is_prime(spec.p) || spec.p > u32::MAX as u64 {
        return Err(Error::NotPrime(spec.p));
    }
    if spec.n == 0 {
        return Err(Error::Spec("n must be at least 1".into()));
    }
    let p = spec.p as i64;
    for (i, g) in spec.generators.iter_mut().enumerate() {
        if g.len() != spec.n {
            return Err(Error::Spec(format!(
                "generators[{i}] has {} rows, expected {}",
                g.len(),
                spec.n
            )));
        }
        for (r, row) in g.iter_mut().enumerate() {
            if row.len() != spec.n {
                return Err(Error::Spec(format!(
                    "generators[{i}][{r}] has {} entries, expected {}",
                    row.len(),
                    spec.n
                )));
            }
            for x in row.iter_mut() {
                *x = x.rem_euclid(p);
            }
        }
    }
    for (i, m) in spec.matrices()?.iter().enumerate() {
        if !m.is_invertible() {
            return Err(Error::SingularGenerator(i));
        }
    }
    Ok(spec)
}

/// The group of the worked example, as shipped in `fixtures/paper_example.json`.
pub fn paper_example_spec() -> GroupSpec {
    parse_spec(include_bytes!("../../fixtures/paper_example.json")).expect("shipped fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixgroup::fixtures;

    #[test]
    fn shipped_fixture() {
        let s = paper_example_spec();
        assert_eq!((s.p, s.n, s.generators.len()), (2, 4, 3));
        assert_eq!(s.matrices().unwrap(), fixtures::paper_example_generators());
    }

    #[test]
    fn empty_generators_are_the_trivial_group() {
        let s = parse_spec(br#"{"name":"t","p":3,"n":2,"generators":[]}"#).unwrap();
        assert_eq!(s.to_group(10).unwrap().order(), 1);
    }

    #[test]
    fn rejections() {
        let zero_row = br#"{"name":"z","p":3,"n":2,"generators":[[[0,0],[1,1]]]}"#;
        assert_eq!(parse_spec(zero_row).unwrap_err(), Error::SingularGenerator(0));
        let composite = br#"{"name":"c","p":4,"n":1,"generators":[]}"#;
        assert_eq!(parse_spec(composite).unwrap_err(), Error::NotPrime(4));
        let ragged = br#"{"name":"r","p":3,"n":2,"generators":[[[1,0]]]}"#;
        assert!(matches!(parse_spec(ragged).unwrap_err(), Error::Spec(m) if m.contains("generators[0]")));
        let junk = br#"{"name":"j","p":3,"#;
        assert!(matches!(parse_spec(junk).unwrap_err(), Error::Spec(m) if m.contains("line 1")));
    }

    #[test]
    fn entries_are_reduced() {
        let s = parse_spec(br#"{"name":"m","p":3,"n":1,"generators":[[[-1]]]}"#).unwrap();
        assert_eq!(s.generators, vec![vec![vec![2]]]);
    }

    #[test]
    fn round_trip() {
        let g = fixtures::mixed_gf3();
        let s = GroupSpec::from_group("mixed", &g);
        assert_eq!(parse_spec(s.to_json().as_bytes()).unwrap(), s);
    }
}
