//! Decisions, invariants and classification for subspaces of `H^k`.

pub mod decide;
pub mod decompose;
pub mod examples;
pub mod filtration;
pub mod fstructure;
pub mod input;
pub mod splitting;
pub mod witness;

pub use decide::{cocr_pencil, cr_pencil, is_cocr_quaternionic, is_cr_quaternionic};
pub use decompose::{decompose_cr, CrDecomposition, Tag};
pub use examples::{
    ex351, ex352, f_model, named_example, quat_vector, u_k, uprime_k, EXAMPLE_NAMES,
};
pub use filtration::{
    e_lower, e_upper, filtration_w1, filtration_w2, quat_image, triple_intersection,
    triple_intersection_with, triple_sum,
};
pub use fstructure::{cocr_images_triple_test, f_detect, induced_f_structure, FCert, InducedF};
pub use input::{CocrInput, CrInput, CrqInput, Role};
pub use splitting::{
    alternate_points, default_points, enumerate_splitting_types, section_dimensions,
    splitting_type_cocr, splitting_type_cocr_at, splitting_type_cr, splitting_type_cr_at,
    SplittingType,
};
pub use witness::{full_witness, grid, FullWitness, DEFAULT_BUDGET};
