pub mod error;
pub mod gfcore;
pub mod matrixgroup;
pub mod polyact;
pub mod invar;
pub mod diffr;
pub mod harness;

pub use error::{Error, Result};
