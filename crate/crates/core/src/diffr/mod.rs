//! The different, the direct summand property and the transfer image.

mod different;
mod dsp;
mod exponent;
mod transfer_image;

pub use different::{different, DifferentResult, HyperplaneFactor};
pub use dsp::{dsp_check, projection_apply, DspResult};
pub use exponent::{default_test_bound, hyperplane_exponent, HyperplaneExponent};
pub use transfer_image::{transfer_image_profile, TransferImage};
