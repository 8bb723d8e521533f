//! Polynomial matrices over `Q(i)[ζ]` and rank decisions over `CP¹`.

pub mod matrix;
pub mod pencil;
pub mod univariate;

pub use matrix::PolyMat;
pub use pencil::{
    full_rank_everywhere, gaussian_rational_root, HomogeneousMat, LinearPencil, RankDecision,
};
pub use univariate::Poly;
