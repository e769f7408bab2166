use super::table::InvariantTable;
use crate::gfcore::Echelon;
use crate::polyact::Polynomial;

/// Minimal homogeneous algebra generators of `k[V]^G` up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraGenerators {
    /// `(degree, generator)` ascending by degree, pivot order within a degree.
    pub generators: Vec<(usize, Polynomial)>,
    /// Complete up to this degree.
    pub bound: usize,
    /// `dim` of the span of products of lower-degree invariants, per degree.
    pub decomposable_dims: Vec<usize>,
}

impl AlgebraGenerators {
    pub fn degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|(d, _)| *d).collect()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn count(&self) -> usize {
        self.generators.len()
    }
}

/// Graded Nakayama: at each degree, the invariants not spanned by products
/// of lower-degree invariants, taken in the echelon order of `k[V]^G_d`.
pub fn algebra_generators(table: &InvariantTable, bound: usize) -> AlgebraGenerators {
    assert!(bound <= table.max_degree(), "bound exceeds the invariant table");
    let ring = table.ring();
    let mut generators: Vec<(usize, Polynomial)> = Vec::new();
    let mut decomposable_dims = vec![0];
    for d in 1..=bound {
        let mut ech = Echelon::new(ring.field(), ring.dim(d));
        for (e, g) in &generators {
            if *e >= d {
                continue;
            }
            for v in table.basis(d - e).vectors() {
                if ech.rank() == table.dim(d) {
                    break;
                }
                ech.insert(&ring.mul_poly(d - e, v, g));
            }
        }
        decomposable_dims.push(ech.rank());
        for v in table.basis(d).vectors() {
            if ech.insert(v) {
                generators.push((d, ring.poly(d, v)));
            }
        }
    }
    AlgebraGenerators {
        generators,
        bound,
        decomposable_dims,
    }
}

/// Dimensions of the subalgebra generated by `gens` in degrees `0..=bound`.
pub fn subalgebra_dims(table: &InvariantTable, gens: &[(usize, Polynomial)], bound: usize) -> Vec<usize> {
    let ring = table.ring();
    let mut slices: Vec<Echelon> = Vec::with_capacity(bound + 1);
    let mut one = Echelon::new(ring.field(), 1);
    one.insert(&[1]);
    slices.push(one);
    for d in 1..=bound {
        let mut ech = Echelon::new(ring.field(), ring.dim(d));
        for (e, g) in gens {
            if *e == 0 || *e > d {
                continue;
            }
            for v in slices[d - e].rows_dense() {
                ech.insert(&ring.mul_poly(d - e, &v, g));
            }
        }
        slices.push(ech);
    }
    slices.iter().map(Echelon::rank).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixgroup::{fixtures, Group};

    fn generators_of(g: &Group, d: usize) -> AlgebraGenerators {
        algebra_generators(&InvariantTable::compute(g, d), d)
    }

    #[test]
    fn trivial_group() {
        let f = crate::gfcore::PrimeField::new(2).unwrap();
        let a = generators_of(&Group::trivial(f, 2), 3);
        assert_eq!(a.degrees(), vec![1, 1]);
    }

    #[test]
    fn one_transvection() {
        let g = fixtures::single_transvection(2);
        let a = generators_of(&g, 4);
        assert_eq!(a.degrees(), vec![1, 2]);
        assert_eq!(a.generators[1].1.to_string(), "x1*x2 + x2^2");
    }

    #[test]
    fn paper_degrees() {
        let a = generators_of(&fixtures::paper_example(), 6);
        assert_eq!(a.degrees(), vec![1, 1, 3, 4, 4]);
    }

    #[test]
    fn dropping_a_generator_loses_something() {
        let g = fixtures::paper_example();
        let t = InvariantTable::compute(&g, 6);
        let a = algebra_generators(&t, 6);
        let full = subalgebra_dims(&t, &a.generators, 6);
        assert_eq!(full, t.hilbert_series());
        for skip in 0..a.count() {
            let mut rest = a.generators.clone();
            rest.remove(skip);
            assert_ne!(subalgebra_dims(&t, &rest, 6), full, "generator {skip} is redundant");
        }
    }
}
