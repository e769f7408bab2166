use super::different::DifferentResult;
use crate::error::{fault, Error, Result};
use crate::gfcore::Matrix;
use crate::matrixgroup::Group;
use crate::polyact::{twist_weights, twisted_transfer, weighted_sum_matrix, GradedRing, Polynomial};

/// Whether a graded `k[V]^G`-linear projection `k[V] → k[V]^G` exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DspResult {
    pub holds: bool,
    /// `θ̃` with `Σ_σ χ_θ(σ)^{-1} σ(θ̃) = θ`, i.e. `Tr(θ̃/θ) = 1`.
    pub witness: Option<Polynomial>,
    pub degree: usize,
    /// Rank of the twisted transfer on `k[V]_{deg θ}`.
    pub rank: usize,
    /// Rank after adjoining `θ`; larger than `rank` exactly when infeasible.
    pub augmented_rank: usize,
}

pub fn dsp_check(g: &Group, diff: &DifferentResult) -> Result<DspResult> {
    let f = g.field();
    let d = diff.degree;
    let ring = GradedRing::new(f, g.dim(), d);
    let m = weighted_sum_matrix(&ring, g, &twist_weights(&diff.character), d);
    // coordinates transform as c ↦ c·M, so solve Mᵀ c = θ
    let mt = m.transpose();
    let target = ring.coords(d, &diff.theta)?;
    let rank = mt.rank();
    let mut augmented: Vec<Vec<u32>> = mt.to_rows();
    for (row, &t) in augmented.iter_mut().zip(&target) {
        row.push(t);
    }
    let augmented_rank = Matrix::from_row_vectors(f, mt.cols() + 1, &augmented).rank();
    let witness = mt.solve(&target).map(|c| ring.poly(d, &c));
    if let Some(w) = &witness {
        let back = twisted_transfer(g, &diff.character, w)?;
        if back != diff.theta {
            return Err(fault!("witness {w} transfers to {back}, not θ = {}", diff.theta));
        }
    }
    if witness.is_some() != (rank == augmented_rank) {
        return Err(fault!("solver and rank test disagree on the DSP system"));
    }
    Ok(DspResult {
        holds: witness.is_some(),
        witness,
        degree: d,
        rank,
        augmented_rank,
    })
}

/// `π(f) = Tr(θ̃ f / θ)`, computed as the twisted transfer of `θ̃ f` divided
/// by `θ`.
pub fn projection_apply(
    g: &Group,
    diff: &DifferentResult,
    dsp: &DspResult,
    f: &Polynomial,
) -> Result<Polynomial> {
    let w = dsp.witness.as_ref().ok_or(Error::NoProjection)?;
    let num = twisted_transfer(g, &diff.character, &w.mul(f))?;
    num.exact_divide(&diff.theta)?.ok_or_else(|| {
        fault!("θ = {} does not divide the twisted transfer {num}", diff.theta)
    })
}
