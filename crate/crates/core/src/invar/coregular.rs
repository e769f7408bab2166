use serde::Serialize;

use super::generators::AlgebraGenerators;
use super::ideal::{is_hsop, IdealProfile};
use super::table::InvariantTable;
use crate::diffr::DspResult;
use crate::error::{fault, Result};
use crate::matrixgroup::Group;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Coregular,
    NotCoregular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailedConjunct {
    HilbertIdealNotCi,
    DspFails,
}

/// Coregularity decided by "Hilb is a complete intersection and DSP holds",
/// cross-checked against a degree certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoregularityVerdict {
    pub verdict: Verdict,
    /// Degrees of the `n` algebra generators when coregular. They form a
    /// system of parameters with degree product `|G|`, which is sufficient
    /// on its own.
    pub certificate: Option<Vec<usize>>,
    pub failure_witness: Vec<FailedConjunct>,
    pub bound: usize,
}

impl CoregularityVerdict {
    pub fn is_coregular(&self) -> bool {
        self.verdict == Verdict::Coregular
    }
}

pub fn decide_coregular(
    g: &Group,
    table: &InvariantTable,
    hilb: &IdealProfile,
    algebra: &AlgebraGenerators,
    dsp: &DspResult,
) -> Result<CoregularityVerdict> {
    let mut failure_witness = Vec::new();
    if !hilb.is_complete_intersection {
        failure_witness.push(FailedConjunct::HilbertIdealNotCi);
    }
    if !dsp.holds {
        failure_witness.push(FailedConjunct::DspFails);
    }
    let primary = failure_witness.is_empty();

    let n = g.dim();
    let degrees = algebra.degrees();
    // many generators of a non-coregular ring can overflow the product
    let product = degrees.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
    let certified = algebra.count() == n
        && product == Some(g.order())
        && is_hsop(table.ring(), &algebra.polynomials());
    if primary != certified {
        return Err(fault!(
            "coregularity routes disagree at bound {}: CI(Hilb) = {} (μ = {}, degrees {:?}), DSP = {}, \
             algebra generator degrees {:?} with product {:?} against |G| = {}",
            algebra.bound,
            hilb.is_complete_intersection,
            hilb.mu,
            hilb.generator_degrees,
            dsp.holds,
            degrees,
            product,
            g.order()
        ));
    }
    Ok(CoregularityVerdict {
        verdict: if primary {
            Verdict::Coregular
        } else {
            Verdict::NotCoregular
        },
        certificate: certified.then_some(degrees),
        failure_witness,
        bound: algebra.bound,
    })
}
