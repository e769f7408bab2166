//! Finite matrix groups, pseudo-reflections and the transvection/homology split.

mod decompose;
pub mod fixtures;
mod group;
mod hyperplane;
mod reflection;

pub use decompose::{decompose, Decomposition};
pub use group::{Group, DEFAULT_ELEMENT_CAP};
pub use hyperplane::{form_eigenvalue, hyperplanes, Character, Hyperplane};
pub use reflection::{
    classify_all, classify_element, normalize, reflection_census, ElementClass, ReflectionCensus,
    ReflectionInfo, ReflectionKind,
};
