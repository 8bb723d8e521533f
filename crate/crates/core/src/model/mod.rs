//! The model `H^k` with left multiplication, the twistor sphere and the
//! eigenspace family over it.

pub mod frame;
pub mod sigma;
pub mod twistor;

pub use frame::{eigenframe, eigenframe_span, eigenspace, eigenspace_at};
pub use sigma::{
    dual_left_mult_matrix, dual_structure, left_mult_matrix, quaternionic_matrix,
    right_mult_matrix, DualStructure,
};
pub use twistor::{j_from_zeta, AdmissibleJ, TwistorPoint};
