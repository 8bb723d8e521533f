//! Holomorphic frames of the eigenspace family `J ↦ E^J` over `CP¹`.

use crate::arith::{GaussRat, Mat, Quat, Subspace};
use crate::poly::LinearPencil;

use super::sigma::left_mult_matrix;
use super::twistor::{j_from_zeta, TwistorPoint};

/// `E^J = {v ∈ C^{4k} : σ(q)v = −i·v}`, computed directly.
pub fn eigenspace(q: &Quat, k: usize) -> Subspace<GaussRat> {
    let s = left_mult_matrix(q, k).complexify();
    let shift = Mat::<GaussRat>::identity(4 * k).scale(&GaussRat::i());
    s.add(&shift).kernel()
}

pub fn eigenspace_at(p: &TwistorPoint, k: usize) -> Subspace<GaussRat> {
    eigenspace(j_from_zeta(p).quat(), k)
}

/// A `4k × 2k` pencil whose columns span `E^{J(p)}` at every point `p`.
///
/// Per factor the two columns are
/// `(ζ1, iζ1, iζ0, ζ0)` and `(iζ0, ζ0, −ζ1, −iζ1)`.
pub fn eigenframe(k: usize) -> LinearPencil {
    let g = GaussRat::from_ints;
    let mut a = Mat::zeros(4 * k, 2 * k);
    let mut b = Mat::zeros(4 * k, 2 * k);
    for m in 0..k {
        let (r, c) = (4 * m, 2 * m);
        a.set(r + 2, c, g(0, 1));
        a.set(r + 3, c, g(1, 0));
        a.set(r, c + 1, g(0, 1));
        a.set(r + 1, c + 1, g(1, 0));
        b.set(r, c, g(1, 0));
        b.set(r + 1, c, g(0, 1));
        b.set(r + 2, c + 1, g(-1, 0));
        b.set(r + 3, c + 1, g(0, -1));
    }
    LinearPencil::new(a, b)
}

pub fn eigenframe_span(k: usize, p: &TwistorPoint) -> Subspace<GaussRat> {
    eigenframe(k).at(p).column_space()
}
