//! Direct sums and semidirect products of co-CR quaternionic spaces.

use crate::arith::{Mat, Quat, Rat};
use crate::crq::{is_cocr_quaternionic, CocrInput};
use crate::error::{CrqError, Result};
use crate::model::left_mult_matrix;

/// `E₁ × E₂ → U₁ × U₂`, `ρ = ρ₁ ⊕ ρ₂`, twistor spheres identified by the
/// identity.
pub fn direct_sum_cocr(a: &CocrInput, b: &CocrInput) -> Result<CocrInput> {
    CocrInput::from_rho(a.k() + b.k(), a.rho().block_diag(b.rho()))
}

/// `ρ(e′, e″) = (ρ′(e′), α(e′) + ρ″(e″))` on `E′ × E″`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectData {
    pub first: CocrInput,
    pub second: CocrInput,
    /// `α: E′ → U″`, a `dim U″ × 4k′` matrix.
    pub alpha: Mat<Rat>,
}

impl SemidirectData {
    pub fn new(first: CocrInput, second: CocrInput, alpha: Mat<Rat>) -> Result<Self> {
        if (alpha.rows(), alpha.cols()) != (second.target_dim(), 4 * first.k()) {
            return Err(CrqError::Contract(format!(
                "alpha must be {}x{}, got {}x{}",
                second.target_dim(),
                4 * first.k(),
                alpha.rows(),
                alpha.cols()
            )));
        }
        Ok(SemidirectData {
            first,
            second,
            alpha,
        })
    }

    /// The assembled `ρ`.
    pub fn rho(&self) -> Mat<Rat> {
        let (n1, n2) = (4 * self.first.k(), 4 * self.second.k());
        let top = self
            .first
            .rho()
            .hstack(&Mat::zeros(self.first.target_dim(), n2));
        let bottom = self.alpha.hstack(self.second.rho());
        debug_assert_eq!(top.cols(), n1 + n2);
        top.vstack(&bottom)
    }

    /// `E′ → E′ × E″`, `e′ ↦ (e′, 0)`.
    pub fn section(&self) -> Mat<Rat> {
        let (n1, n2) = (4 * self.first.k(), 4 * self.second.k());
        Mat::identity(n1).vstack(&Mat::zeros(n2, n1))
    }

    /// `U′ × U″ → U″`, `(u′, u″) ↦ u″`.
    pub fn retraction(&self) -> Mat<Rat> {
        let (d1, d2) = (self.first.target_dim(), self.second.target_dim());
        Mat::zeros(d2, d1).hstack(&Mat::identity(d2))
    }
}

/// Assembles the semidirect product and checks that it is co-CR.
pub fn semidirect(data: &SemidirectData) -> Result<CocrInput> {
    let out = CocrInput::from_rho(data.first.k() + data.second.k(), data.rho())?;
    let d = is_cocr_quaternionic(&out)?;
    if !d.holds {
        return Err(CrqError::InvariantBreach(
            "semidirect product of co-CR spaces is not co-CR".into(),
        ));
    }
    Ok(out)
}

/// Outcome of [`is_direct`]: when direct, `φ` and `ψ` with
/// `α + φ ∘ ρ′ = ρ″ ∘ ψ` and `ψ` quaternionic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Directness {
    pub direct: bool,
    pub phi: Option<Mat<Rat>>,
    pub psi: Option<Mat<Rat>>,
}

/// Whether some `φ: U′ → U″` makes `α + φ ∘ ρ′` co-CR quaternionic linear,
/// i.e. equal to `ρ″ ∘ ψ` for a quaternionic `ψ: E′ → E″`.
pub fn is_direct(data: &SemidirectData) -> Result<Directness> {
    let (k1, k2) = (data.first.k(), data.second.k());
    let (n1, n2) = (4 * k1, 4 * k2);
    let (d1, d2) = (data.first.target_dim(), data.second.target_dim());
    let rho1 = data.first.rho();
    let rho2 = data.second.rho();
    // unknowns: vec(ψ) (n2·n1 entries) then vec(φ) (d2·d1 entries)
    let (npsi, nphi) = (n2 * n1, d2 * d1);
    let zero_rat = || Rat::from_integer(0.into());
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for q in [Quat::i(), Quat::j(), Quat::k()] {
        let s1 = left_mult_matrix(&q, k1);
        let s2 = left_mult_matrix(&q, k2);
        let m = Mat::identity(n2)
            .kron(&s1.transpose())
            .sub(&s2.kron(&Mat::identity(n1)));
        for r in m.row_vecs() {
            let mut row = r;
            row.extend((0..nphi).map(|_| zero_rat()));
            rows.push(row);
            rhs.push(zero_rat());
        }
    }
    // ρ″ψ − φρ′ = α
    let a = rho2.kron(&Mat::identity(n1));
    let b = Mat::identity(d2)
        .kron(&rho1.transpose())
        .scale(&Rat::from_integer((-1).into()));
    for (ra, rb) in a.row_vecs().into_iter().zip(b.row_vecs()) {
        let mut row = ra;
        row.extend(rb);
        rows.push(row);
    }
    rhs.extend(data.alpha.vectorize());
    let m = Mat::from_rows(npsi + nphi, rows);
    Ok(match m.solve(&rhs) {
        None => Directness {
            direct: false,
            phi: None,
            psi: None,
        },
        Some(x) => Directness {
            direct: true,
            psi: Some(Mat::new(n2, n1, x[..npsi].to_vec())),
            phi: Some(Mat::new(d2, d1, x[npsi..].to_vec())),
        },
    })
}
