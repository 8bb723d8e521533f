//! Exact decision and classification procedures for linear CR quaternionic,
//! co-CR quaternionic and f-quaternionic structures on subspaces of `H^k`.
//!
//! All arithmetic is over `Q` or `Q(i)`; nothing in a decision path touches
//! floating point.

pub mod arith;
pub mod crq;
pub mod error;
pub mod maps;
pub mod model;
pub mod poly;

pub use error::{CrqError, Result};
