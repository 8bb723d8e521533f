//! Quaternionic hulls and cores of a real subspace `U ⊆ H^k`.
//!
//! Intersections and sums over the whole sphere of admissible structures
//! reduce to the triple `{i, j, k}`. `J(u)` is linear in `J`, so
//! `Σ_J J(U) = iU + jU + kU`. If `x ∈ iU ∩ jU ∩ kU` then `ix, jx, kx ∈ U`,
//! hence `−Jx ∈ U` and `x = J(−Jx) ∈ J(U)` for every `J`; the intersection
//! over the sphere is therefore `iU ∩ jU ∩ kU`.

use crate::arith::{Quat, Rat, Subspace};
use crate::model::left_mult_matrix;

use super::input::CrInput;

pub fn quat_image(s: &Subspace<Rat>, q: &Quat, k: usize) -> Subspace<Rat> {
    s.image(&left_mult_matrix(q, k))
}

fn units() -> [Quat; 3] {
    [Quat::i(), Quat::j(), Quat::k()]
}

/// `I(U) ∩ J(U) ∩ K(U)` for an arbitrary triple of quaternions.
pub fn triple_intersection_with(s: &Subspace<Rat>, triple: &[Quat; 3], k: usize) -> Subspace<Rat> {
    triple
        .iter()
        .map(|q| quat_image(s, q, k))
        .reduce(|a, b| a.intersect(&b).expect("same ambient"))
        .expect("three images")
}

/// `iU ∩ jU ∩ kU`.
pub fn triple_intersection(s: &Subspace<Rat>, k: usize) -> Subspace<Rat> {
    triple_intersection_with(s, &units(), k)
}

/// `iU + jU + kU`.
pub fn triple_sum(s: &Subspace<Rat>, k: usize) -> Subspace<Rat> {
    units()
        .iter()
        .map(|q| quat_image(s, q, k))
        .reduce(|a, b| a.sum(&b).expect("same ambient"))
        .expect("three images")
}

/// Smallest quaternionic subspace containing `s`: `s + is + js + ks`.
pub fn quaternionic_span(s: &Subspace<Rat>, k: usize) -> Subspace<Rat> {
    s.sum(&triple_sum(s, k)).expect("same ambient")
}

/// Largest quaternionic subspace inside `s`: `s ∩ is ∩ js ∩ ks`.
pub fn quaternionic_core(s: &Subspace<Rat>, k: usize) -> Subspace<Rat> {
    s.intersect(&triple_intersection(s, k))
        .expect("same ambient")
}

pub fn is_quaternionic(s: &Subspace<Rat>, k: usize) -> bool {
    units()
        .iter()
        .all(|q| s.contains_subspace(&quat_image(s, q, k)))
}

/// `E_U = Σ_{I ∈ {1,i,j,k}} I(iU ∩ jU ∩ kU)`.
pub fn e_lower(s: &Subspace<Rat>, k: usize) -> Subspace<Rat> {
    quaternionic_span(&triple_intersection(s, k), k)
}

/// `E^U = ⋂_{I ∈ {1,i,j,k}} I(iU + jU + kU)`.
pub fn e_upper(s: &Subspace<Rat>, k: usize) -> Subspace<Rat> {
    quaternionic_core(&triple_sum(s, k), k)
}

/// `W_1 = U ∩ iU ∩ jU ∩ kU`.
pub fn filtration_w1(inp: &CrInput) -> Subspace<Rat> {
    quaternionic_core(inp.u(), inp.k())
}

/// `W_2 = U ∩ E_U`.
pub fn filtration_w2(inp: &CrInput) -> Subspace<Rat> {
    inp.u()
        .intersect(&e_lower(inp.u(), inp.k()))
        .expect("same ambient")
}
