//! Invariant spaces, generators, Hilbert ideals and the coregularity decision.

mod bound;
mod coregular;
mod generators;
mod hilbert;
mod ideal;
mod series;
mod table;

pub use bound::{default_degree_bound, stable_flag, BoundSource, DegreeBound};
pub use coregular::{decide_coregular, CoregularityVerdict, FailedConjunct, Verdict};
pub use generators::{algebra_generators, subalgebra_dims, AlgebraGenerators};
pub use hilbert::{
    contract_extend, hilbert_ideal, relative_hilbert_ideal, vanishing_invariants, ContractExtend,
};
pub use ideal::{is_hsop, IdealProfile};
pub(crate) use ideal::SubringIdealBuilder;
pub use series::{hilbert_series_checks, molien_series, SeriesCheck};
pub use table::{invariant_basis, InvariantTable};
