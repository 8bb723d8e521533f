//! f-quaternionic structures: detection, certificates and the induced
//! f-structures `F^J`.

use crate::arith::{GaussRat, Mat, Quat, Rat, Subspace};
use crate::error::{CrqError, Result};
use crate::model::{eigenframe, eigenspace_at, j_from_zeta, left_mult_matrix, TwistorPoint};

use super::filtration::{e_lower, quat_image, quaternionic_core, triple_intersection};
use super::input::{CocrInput, CrInput};

/// `E = U ⊕ V` with `J(V) ⊆ U` for all admissible `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCert {
    pub k: usize,
    pub u: Subspace<Rat>,
    pub v: Subspace<Rat>,
    /// Largest quaternionic subspace of `E` inside `U`.
    pub w: Subspace<Rat>,
    /// `iV + jV + kV`.
    pub qv: Subspace<Rat>,
    /// `⋂_J J(U) = iU ∩ jU ∩ kU`.
    pub core: Subspace<Rat>,
}

impl FCert {
    pub fn l(&self) -> usize {
        self.v.dim()
    }

    /// `[basis U | basis V]` as a square matrix of columns.
    fn frame(&self) -> Mat<Rat> {
        self.u.basis_columns().hstack(&self.v.basis_columns())
    }

    /// The projection `ρ: E → U` along `V`, in canonical `U`-coordinates.
    pub fn projection(&self) -> Mat<Rat> {
        let inv = self.frame().inverse().expect("E = U + V");
        let n = 4 * self.k;
        Mat::from_fn(self.u.dim(), n, |r, c| inv.get(r, c).clone())
    }

    /// Canonical `U`-coordinates of the `U`-component of `y ∈ E`.
    pub fn project_u(&self, y: &[Rat]) -> Vec<Rat> {
        let x = self.frame().solve(y).expect("E = U + V");
        x[..self.u.dim()].to_vec()
    }

    fn project_u_complex(&self, y: &[GaussRat]) -> Vec<GaussRat> {
        let x = self.frame().complexify().solve(y).expect("E = U + V");
        x[..self.u.dim()].to_vec()
    }

    /// Re-checks every identity of the certificate.
    pub fn verify(&self) -> Result<()> {
        let (k, l) = (self.k, self.l());
        let n = 4 * k;
        let breach = |what: &str| Err(CrqError::InvariantBreach(format!("f-certificate: {what}")));
        if self.u.dim() + l != n || !self.u.intersect(&self.v)?.is_zero() {
            return breach("E is not U + V");
        }
        for q in [Quat::i(), Quat::j(), Quat::k()] {
            if !self.u.contains_subspace(&quat_image(&self.v, &q, k)) {
                return breach("J(V) is not inside U");
            }
        }
        if l > k || self.w.dim() != 4 * (k - l) || self.core.dim() != 4 * k - 3 * l {
            return breach("dimensions of W or of the core are wrong");
        }
        let images: Vec<Subspace<Rat>> = [Quat::i(), Quat::j(), Quat::k()]
            .iter()
            .map(|q| quat_image(&self.v, q, k))
            .collect();
        if self.qv.dim() != 3 * l || images.iter().map(Subspace::dim).sum::<usize>() != 3 * l {
            return breach("Q(V) is not iV + jV + kV directly");
        }
        if self.qv.dim() + self.w.dim() != self.u.dim() || self.qv.sum(&self.w)? != self.u {
            return breach("U is not Q(V) + W directly");
        }
        Ok(())
    }
}

/// Certificate when `E_U = E`, with `V` the complement of `W_1` in the core.
/// Otherwise `None`, after checking `l > k − k'` for `4k' = dim W_1`.
pub fn f_detect(inp: &CrInput) -> Result<Option<FCert>> {
    let (k, u) = (inp.k(), inp.u());
    let l = inp.codim();
    let w = quaternionic_core(u, k);
    let kp = w.dim() / 4;
    if !e_lower(u, k).is_full() {
        if l <= k - kp {
            return Err(CrqError::InvariantBreach(format!(
                "E_U is not E although l = {l} <= k - k' = {}",
                k - kp
            )));
        }
        return Ok(None);
    }
    let core = triple_intersection(u, k);
    let v = w.complement_in(&core)?;
    let qv = [Quat::i(), Quat::j(), Quat::k()]
        .iter()
        .map(|q| quat_image(&v, q, k))
        .reduce(|a, b| a.sum(&b).expect("same ambient"))
        .expect("three images");
    let cert = FCert {
        k,
        u: u.clone(),
        v,
        w,
        qv,
        core,
    };
    cert.verify()?;
    Ok(Some(cert))
}

/// `F^J` on `U` together with its `(C, D)` description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedF {
    /// Matrix in the canonical coordinates of `U`.
    pub f: Mat<Rat>,
    /// `(−i)`-eigenspace of `F` on `U^C`.
    pub c: Subspace<GaussRat>,
    /// `ρ(E^J)`.
    pub d: Subspace<GaussRat>,
}

/// `F = ρ ∘ J ∘ ι` where `ρ` projects along `V`; checks `F³ + F = 0`,
/// `ker F = J(V)`, `D ∩ D̄ = ker F`, `D = C ⊕ (D ∩ D̄)` and
/// `U^C = (D ∩ D̄) ⊕ C ⊕ C̄`.
pub fn induced_f_structure(cert: &FCert, p: &TwistorPoint) -> Result<InducedF> {
    let (k, d) = (cert.k, cert.u.dim());
    let j = left_mult_matrix(j_from_zeta(p).quat(), k);
    let cols = cert
        .u
        .basis_vectors()
        .iter()
        .map(|b| cert.project_u(&j.mul_vec(b)))
        .collect();
    let f = Mat::from_cols(d, cols);
    let breach = |what: &str| {
        Err(CrqError::InvariantBreach(format!(
            "induced f-structure: {what}"
        )))
    };
    if !f.mul(&f).mul(&f).add(&f).is_zero() {
        return breach("F^3 + F != 0");
    }
    let jv = cert.v.image(&j);
    let jv_coords: Vec<Vec<Rat>> = jv
        .basis_vectors()
        .iter()
        .map(|x| cert.u.coordinates(x).expect("J(V) inside U"))
        .collect();
    let ker = f.kernel();
    if ker != Subspace::from_vectors(d, jv_coords) || ker.dim() != cert.l() {
        return breach("ker F != J(V)");
    }
    let fc = f.complexify();
    let c = fc.add(&Mat::identity(d).scale(&GaussRat::i())).kernel();
    let ej = eigenspace_at(p, k);
    let d_space = Subspace::from_vectors(
        d,
        ej.basis_vectors()
            .iter()
            .map(|e| cert.project_u_complex(e))
            .collect(),
    );
    let real = d_space.intersect(&d_space.conj())?;
    if real != ker.complexify() {
        return breach("D and its conjugate do not meet in ker F");
    }
    if !c.intersect(&real)?.is_zero() || c.sum(&real)? != d_space {
        return breach("D != C + (D cap conj D)");
    }
    let whole = real.sum(&c)?.sum(&c.conj())?;
    if real.dim() + 2 * c.dim() != d || !whole.is_full() {
        return breach("U^C != (D cap conj D) + C + conj C");
    }
    Ok(InducedF { f, c, d: d_space })
}

/// Whether `ρ(E^I) ∩ ρ(E^J) ∩ ρ(E^K) = 0` for `(I, J, K) = (i, j, k)`,
/// i.e. `ζ ∈ {0, 1, i}`.
pub fn cocr_images_triple_test(inp: &CocrInput) -> Result<bool> {
    let rho = inp.rho().complexify();
    let frame = eigenframe(inp.k());
    let mut acc = Subspace::<GaussRat>::full(inp.target_dim());
    for p in [
        TwistorPoint::from_ints(0, 0),
        TwistorPoint::from_ints(1, 0),
        TwistorPoint::from_ints(0, 1),
    ] {
        acc = acc.intersect(&rho.mul(&frame.at(&p)).column_space())?;
    }
    Ok(acc.is_zero())
}
