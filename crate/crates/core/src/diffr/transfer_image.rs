use crate::gfcore::Matrix;
use crate::invar::{AlgebraGenerators, IdealProfile, InvariantTable, SubringIdealBuilder};
use crate::matrixgroup::Group;
use crate::polyact::{weighted_sum, SymPowers};

/// The image of `Tr^G` as an ideal of `k[V]^G`, up to a degree bound.
#[derive(Clone, Debug)]
pub struct TransferImage {
    pub profile: IdealProfile,
    /// `μ = 1`.
    pub principal: bool,
    /// `Tr(1) = |G|` is a unit: the image is the whole ring.
    pub unit_ideal: bool,
}

impl TransferImage {
    pub fn generator(&self) -> Option<&crate::polyact::Polynomial> {
        self.principal.then(|| &self.profile.generators[0])
    }
}

pub fn transfer_image_profile(
    g: &Group,
    table: &InvariantTable,
    algebra: &AlgebraGenerators,
    bound: usize,
) -> TransferImage {
    assert!(bound <= table.max_degree());
    let ring = table.ring();
    let weights = vec![1u32; g.order()];
    let mut stream = SymPowers::for_group(ring, g);
    let mut b = SubringIdealBuilder::new(ring, &algebra.generators);
    let mut gens = Vec::new();
    for d in 0..=bound {
        stream.advance_to(d);
        let t: Matrix = weighted_sum(ring, stream.matrices(), &weights, d);
        let image = t.row_space();
        let cands = image.basis().to_vec();
        for i in b.step(&cands) {
            gens.push((d, ring.poly(d, &cands[i])));
        }
    }
    let unit_ideal = b.dims()[0] == 1;
    let profile = IdealProfile::new(gens, b.dims(), 1, bound, unit_ideal.then_some(0));
    TransferImage {
        principal: profile.mu == 1,
        unit_ideal,
        profile,
    }
}
