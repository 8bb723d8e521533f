//! The standard left `H`-module structure on `H^k = R^{4k}` and its dual.

use crate::arith::{Mat, Quat, Rat};

/// `σ(q)`: block-diagonal left multiplication by `q`, one 4×4 block per
/// quaternionic factor, coordinates `(1, i, j, k)`.
pub fn left_mult_matrix(q: &Quat, k: usize) -> Mat<Rat> {
    let basis = Quat::basis();
    let block = Mat::from_fn(4, 4, |r, c| (q * &basis[c]).coords()[r].clone());
    block_repeat(&block, k)
}

/// Right multiplication by `q`, which commutes with every `σ(p)`.
pub fn right_mult_matrix(q: &Quat, k: usize) -> Mat<Rat> {
    let basis = Quat::basis();
    let block = Mat::from_fn(4, 4, |r, c| (&basis[c] * q).coords()[r].clone());
    block_repeat(&block, k)
}

/// The quaternionic map `H^k → H^{k'}`, `y_r = Σ_c x_c · a[r][c]`, for a
/// `k' × k` quaternion matrix `a`. Every map commuting with all `σ(q)` has
/// this form.
pub fn quaternionic_matrix(a: &[Vec<Quat>], k: usize) -> Mat<Rat> {
    let mut out = Mat::zeros(4 * a.len(), 4 * k);
    for (r, row) in a.iter().enumerate() {
        assert_eq!(row.len(), k, "quaternion matrix row has wrong length");
        for (c, q) in row.iter().enumerate() {
            let block = right_mult_matrix(q, 1);
            for i in 0..4 {
                for j in 0..4 {
                    out.set(4 * r + i, 4 * c + j, block.get(i, j).clone());
                }
            }
        }
    }
    out
}

fn block_repeat(block: &Mat<Rat>, k: usize) -> Mat<Rat> {
    let mut out = Mat::zeros(4 * k, 4 * k);
    for m in 0..k {
        for r in 0..4 {
            for c in 0..4 {
                out.set(4 * m + r, 4 * m + c, block.get(r, c).clone());
            }
        }
    }
    out
}

/// `σ*(q) = σ(q̄)ᵀ`, the induced structure on the dual coordinate space.
pub fn dual_left_mult_matrix(q: &Quat, k: usize) -> Mat<Rat> {
    left_mult_matrix(&q.conj(), k).transpose()
}

/// The structure `σ*` on `(H^k)*` through its imaginary units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualStructure {
    pub k: usize,
    pub i: Mat<Rat>,
    pub j: Mat<Rat>,
    pub kk: Mat<Rat>,
}

pub fn dual_structure(k: usize) -> DualStructure {
    DualStructure {
        k,
        i: dual_left_mult_matrix(&Quat::i(), k),
        j: dual_left_mult_matrix(&Quat::j(), k),
        kk: dual_left_mult_matrix(&Quat::k(), k),
    }
}

impl DualStructure {
    pub fn sigma(&self, q: &Quat) -> Mat<Rat> {
        dual_left_mult_matrix(q, self.k)
    }
}
