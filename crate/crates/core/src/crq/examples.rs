//! The standard examples, built exactly.

use crate::arith::{Quat, Rat, Subspace};
use crate::error::{CrqError, Result};
use crate::model::{j_from_zeta, TwistorPoint};

use super::input::CrInput;

/// Flattens quaternions into real coordinates `(1, i, j, k)` per factor.
pub fn quat_vector(qs: &[Quat]) -> Vec<Rat> {
    qs.iter().flat_map(|q| q.coords()).collect()
}

fn unit_vector(k: usize, pos: usize, q: Quat) -> Vec<Quat> {
    let mut v = vec![Quat::zero(); k];
    v[pos] = q;
    v
}

/// `R^k`: the real parts of the first `n` factors of `H^k`.
fn real_parts(k: usize, n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|p| quat_vector(&unit_vector(k, p, Quat::one())))
        .collect()
}

fn complement(k: usize, v: Vec<Vec<Rat>>) -> Result<CrInput> {
    CrInput::new(k, Subspace::from_vectors(4 * k, v).annihilator())
}

/// `U_m = V_m^⊥ ⊆ H^{m+1}` with `V_m = R^{m+1} + Σ_j R·(…, q_j, q_{j+1}, …)`
/// and `q_t = J(ζ = t − 1)`.
pub fn u_k(m: usize) -> Result<CrInput> {
    let k = m + 1;
    let q = |t: usize| {
        j_from_zeta(&TwistorPoint::from_ints(t as i64 - 1, 0))
            .quat()
            .clone()
    };
    let mut v = real_parts(k, k);
    for j in 1..=m {
        let mut e = vec![Quat::zero(); k];
        e[j - 1] = q(j);
        e[j] = q(j + 1);
        v.push(quat_vector(&e));
    }
    complement(k, v)
}

/// `U'_m = V'^⊥ ⊆ H^{2m+1}`, where `V'` consists of
/// `(z_1, z̄_1 + z_2 j, z_3 − z̄_2 j, …, z̄_{2m−1} + z_{2m} j, −z̄_{2m} j)`.
pub fn uprime_k(m: usize) -> Result<CrInput> {
    let k = 2 * m + 1;
    let mut v = Vec::new();
    for t in 1..=2 * m {
        for unit in [Quat::one(), Quat::i()] {
            let mut e = vec![Quat::zero(); k];
            if t % 2 == 1 {
                e[t - 1] = unit.clone();
                e[t] = unit.conj();
            } else {
                e[t - 1] = &unit * &Quat::j();
                e[t] = -&(&unit.conj() * &Quat::j());
            }
            v.push(quat_vector(&e));
        }
    }
    complement(k, v)
}

/// `(Im H)^l × H^{k−l}`.
pub fn f_model(l: usize, k: usize) -> Result<CrInput> {
    if l > k {
        return Err(CrqError::Contract(format!(
            "f_model needs l <= k, got l = {l}, k = {k}"
        )));
    }
    complement(k, real_parts(k, l))
}

/// `(R² + R(i, j))^⊥ ⊆ H²`.
pub fn ex351() -> Result<CrInput> {
    let mut v = real_parts(2, 2);
    v.push(quat_vector(&[Quat::i(), Quat::j()]));
    complement(2, v)
}

/// `(R³ + R(i, j, k))^⊥ ⊆ H³`.
pub fn ex352() -> Result<CrInput> {
    let mut v = real_parts(3, 3);
    v.push(quat_vector(&[Quat::i(), Quat::j(), Quat::k()]));
    complement(3, v)
}

pub const EXAMPLE_NAMES: [&str; 5] = ["u_k", "uprime_k", "f_model", "ex351", "ex352"];

/// Builds an example by name; `k` is the index of `u_k`/`uprime_k` and the
/// quaternionic dimension of `f_model`.
pub fn named_example(name: &str, k: Option<usize>, l: Option<usize>) -> Result<CrInput> {
    let need = |v: Option<usize>, what: &str| {
        v.ok_or_else(|| CrqError::Contract(format!("example {name} needs --{what}")))
    };
    match name {
        "u_k" => u_k(need(k, "k")?),
        "uprime_k" => uprime_k(need(k, "k")?),
        "f_model" => f_model(need(l, "l")?, need(k, "k")?),
        "ex351" => ex351(),
        "ex352" => ex352(),
        _ => Err(CrqError::UnknownExample(name.to_string())),
    }
}
