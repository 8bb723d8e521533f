//! Maps between (co-)CR and f-quaternionic spaces, direct sums and
//! semidirect products.

pub mod lift;
pub mod product;

pub use lift::{
    lift_cocr_map, lift_cr_map, lift_f_map, push_down_map, restrict_map, Lift, LinMap, Twist,
};
pub use product::{direct_sum_cocr, is_direct, semidirect, Directness, SemidirectData};
