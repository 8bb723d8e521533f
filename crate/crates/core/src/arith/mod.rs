//! Exact scalars, quaternions, matrices and subspaces.

pub mod mat;
pub mod quat;
pub mod scalar;
pub mod subspace;

pub use mat::Mat;
pub use quat::Quat;
pub use scalar::{format_rat, int, parse_rat, rat, Field, GaussInt, GaussRat, Rat};
pub use subspace::Subspace;
