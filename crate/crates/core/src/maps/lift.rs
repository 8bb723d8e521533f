//! Lifting linear maps between the spaces `U` to quaternionic maps between
//! the ambient spaces `E`.

use crate::arith::{Mat, Quat, Rat, Subspace};
use crate::crq::{induced_f_structure, CocrInput, CrInput, FCert};
use crate::error::{CrqError, Result};
use crate::model::{j_from_zeta, left_mult_matrix, AdmissibleJ, TwistorPoint};

/// How the twistor spheres are identified: `T(q) = q` or `T(q) = r q r⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    Identity,
    Conjugation(Quat),
}

impl Twist {
    pub fn conjugation(r: Quat) -> Result<Self> {
        if r.is_zero() {
            return Err(CrqError::Contract(
                "conjugation by the zero quaternion".into(),
            ));
        }
        Ok(Twist::Conjugation(r))
    }

    pub fn apply(&self, q: &Quat) -> Quat {
        match self {
            Twist::Identity => q.clone(),
            Twist::Conjugation(r) => &(r * q) * &r.inverse().expect("nonzero"),
        }
    }

    pub fn compose(&self, inner: &Twist) -> Twist {
        match (self, inner) {
            (Twist::Identity, t) | (t, Twist::Identity) => t.clone(),
            (Twist::Conjugation(a), Twist::Conjugation(b)) => Twist::Conjugation(a * b),
        }
    }
}

/// A linear map between coordinate spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    pub matrix: Mat<Rat>,
}

impl LinMap {
    pub fn new(matrix: Mat<Rat>) -> Self {
        LinMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinMap::new(Mat::identity(n))
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinMap::new(Mat::zeros(rows, cols))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinMap) -> LinMap {
        LinMap::new(self.matrix.mul(&inner.matrix))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// `t̃: E → E'` and whether the constraints determine it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub map: Mat<Rat>,
    pub unique: bool,
}

/// Stacked linear constraints on `vec(X)` for an unknown `rows × cols`
/// matrix `X` (row-major).
struct System {
    unknowns: usize,
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
}

impl System {
    fn new(unknowns: usize) -> Self {
        System {
            unknowns,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    fn push(&mut self, m: Mat<Rat>, rhs: Vec<Rat>) {
        assert_eq!(m.cols(), self.unknowns);
        assert_eq!(m.rows(), rhs.len());
        self.rows.extend(m.row_vecs());
        self.rhs.extend(rhs);
    }

    fn push_homogeneous(&mut self, m: Mat<Rat>) {
        let n = m.rows();
        self.push(m, vec![Rat::from_integer(0.into()); n]);
    }

    /// One solution and the dimension of the homogeneous solution space.
    fn solve(self) -> Option<(Vec<Rat>, usize)> {
        let m = Mat::from_rows(self.unknowns, self.rows);
        let x = m.solve(&self.rhs)?;
        Some((x, m.kernel().dim()))
    }
}

/// `X σ(q) = σ'(T q) X` for `q ∈ {i, j, k}`, with `X: H^k → H^{k'}`.
fn push_quaternionic(sys: &mut System, k: usize, kp: usize, twist: &Twist) {
    let (n, np) = (4 * k, 4 * kp);
    for q in [Quat::i(), Quat::j(), Quat::k()] {
        let right = Mat::identity(np).kron(&left_mult_matrix(&q, k).transpose());
        let left = left_mult_matrix(&twist.apply(&q), kp).kron(&Mat::identity(n));
        sys.push_homogeneous(right.sub(&left));
    }
}

/// `X · ι = ι' · t`.
fn push_cr(sys: &mut System, iota: &Mat<Rat>, iota_p: &Mat<Rat>, t: &Mat<Rat>) {
    let np = iota_p.rows();
    let m = Mat::identity(np).kron(&iota.transpose());
    sys.push(m, iota_p.mul(t).vectorize());
}

/// `ρ' · X = t · ρ`.
fn push_cocr(sys: &mut System, rho: &Mat<Rat>, rho_p: &Mat<Rat>, t: &Mat<Rat>) {
    let m = rho_p.kron(&Mat::identity(rho.cols()));
    sys.push(m, t.mul(rho).vectorize());
}

fn finish(sys: System, np: usize, n: usize) -> Option<Lift> {
    let (x, kernel) = sys.solve()?;
    Some(Lift {
        map: Mat::new(np, n, x),
        unique: kernel == 0,
    })
}

fn check_shape(t: &LinMap, rows: usize, cols: usize) -> Result<()> {
    if (t.matrix.rows(), t.matrix.cols()) != (rows, cols) {
        return Err(CrqError::Contract(format!(
            "map is {}x{}, expected {rows}x{cols}",
            t.matrix.rows(),
            t.matrix.cols()
        )));
    }
    Ok(())
}

/// Quaternionic `t̃` (with respect to `T`) with `t̃ ∘ ι = ι' ∘ t`, where `t`
/// is written in the canonical coordinates of `U` and `U'`.
pub fn lift_cr_map(
    t: &LinMap,
    src: &CrInput,
    dst: &CrInput,
    twist: &Twist,
) -> Result<Option<Lift>> {
    let (k, kp) = (src.k(), dst.k());
    check_shape(t, dst.u().dim(), src.u().dim())?;
    let mut sys = System::new(16 * k * kp);
    push_quaternionic(&mut sys, k, kp, twist);
    push_cr(
        &mut sys,
        &src.u().basis_columns(),
        &dst.u().basis_columns(),
        &t.matrix,
    );
    Ok(finish(sys, 4 * kp, 4 * k))
}

/// Quaternionic `t̃` with `ρ' ∘ t̃ = t ∘ ρ`.
pub fn lift_cocr_map(
    t: &LinMap,
    src: &CocrInput,
    dst: &CocrInput,
    twist: &Twist,
) -> Result<Option<Lift>> {
    let (k, kp) = (src.k(), dst.k());
    check_shape(t, dst.target_dim(), src.target_dim())?;
    let mut sys = System::new(16 * k * kp);
    push_quaternionic(&mut sys, k, kp, twist);
    push_cocr(&mut sys, src.rho(), dst.rho(), &t.matrix);
    Ok(finish(sys, 4 * kp, 4 * k))
}

/// Both families of constraints at once; a solution is then checked against
/// `t ∘ F^J = F'^{T(J)} ∘ t` for `J ∈ {i, j, k}`.
pub fn lift_f_map(t: &LinMap, src: &FCert, dst: &FCert, twist: &Twist) -> Result<Option<Lift>> {
    let (k, kp) = (src.k, dst.k);
    check_shape(t, dst.u.dim(), src.u.dim())?;
    let mut sys = System::new(16 * k * kp);
    push_quaternionic(&mut sys, k, kp, twist);
    push_cr(
        &mut sys,
        &src.u.basis_columns(),
        &dst.u.basis_columns(),
        &t.matrix,
    );
    push_cocr(&mut sys, &src.projection(), &dst.projection(), &t.matrix);
    let Some(lift) = finish(sys, 4 * kp, 4 * k) else {
        return Ok(None);
    };
    for p in [
        TwistorPoint::from_ints(0, 0),
        TwistorPoint::from_ints(1, 0),
        TwistorPoint::from_ints(0, 1),
    ] {
        let image = AdmissibleJ::new(twist.apply(j_from_zeta(&p).quat()))?.to_point();
        let f = induced_f_structure(src, &p)?.f;
        let fp = induced_f_structure(dst, &image)?.f;
        if t.matrix.mul(&f) != fp.mul(&t.matrix) {
            return Err(CrqError::InvariantBreach(format!(
                "lifted f-map does not intertwine the f-structures at {p}"
            )));
        }
    }
    Ok(Some(lift))
}

/// The map `t` induced on `U`-coordinates by `g: E → E'` with `g(U) ⊆ U'`.
pub fn restrict_map(g: &Mat<Rat>, src: &Subspace<Rat>, dst: &Subspace<Rat>) -> Option<LinMap> {
    let cols = src
        .basis_vectors()
        .iter()
        .map(|b| dst.coordinates(&g.mul_vec(b)))
        .collect::<Option<Vec<_>>>()?;
    Some(LinMap::new(Mat::from_cols(dst.dim(), cols)))
}

/// The map `t` with `t ∘ ρ = ρ' ∘ g`, when `g(ker ρ) ⊆ ker ρ'`.
pub fn push_down_map(g: &Mat<Rat>, src: &CocrInput, dst: &CocrInput) -> Option<LinMap> {
    if !dst.kernel().contains_subspace(&src.kernel().image(g)) {
        return None;
    }
    let rho = src.rho();
    let section = rho.transpose().mul(&rho.mul(&rho.transpose()).inverse()?);
    Some(LinMap::new(dst.rho().mul(g).mul(&section)))
}
