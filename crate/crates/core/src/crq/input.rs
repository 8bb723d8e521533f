//! Subspaces of `H^k` presented as CR (inclusion) or co-CR (quotient) data.

use crate::arith::{Mat, Rat, Subspace};
use crate::error::{CrqError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Cr,
    Cocr,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::Cr => "cr",
            Role::Cocr => "cocr",
        }
    }
}

impl std::str::FromStr for Role {
    type Err = CrqError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cr" => Ok(Role::Cr),
            "cocr" => Ok(Role::Cocr),
            _ => Err(CrqError::Parse(format!(
                "role must be \"cr\" or \"cocr\", got {s:?}"
            ))),
        }
    }
}

/// `U ⊆ E = H^k` with `ι` the inclusion. `k = 0` (the zero space) is
/// allowed; every structure condition is then vacuous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrInput {
    k: usize,
    u: Subspace<Rat>,
}

impl CrInput {
    pub fn new(k: usize, u: Subspace<Rat>) -> Result<Self> {
        if u.ambient() != 4 * k {
            return Err(CrqError::AmbientMismatch {
                left: u.ambient(),
                right: 4 * k,
            });
        }
        Ok(CrInput { k, u })
    }

    pub fn from_basis(k: usize, basis: Vec<Vec<Rat>>) -> Result<Self> {
        CrInput::new(k, Subspace::from_independent(4 * k, basis)?)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> &Subspace<Rat> {
        &self.u
    }

    /// Codimension `l` of `U` in `E`.
    pub fn codim(&self) -> usize {
        4 * self.k - self.u.dim()
    }

    /// The dual co-CR datum `(U*, E*, ι*)`. In the standard coordinates
    /// `σ*(q) = σ(q̄)ᵀ = σ(q)`, so the dual lives on the same model; `ι*` is
    /// restriction to the canonical basis of `U` and its kernel is `U⁰`.
    pub fn dual(&self) -> CocrInput {
        CocrInput {
            k: self.k,
            kernel: self.u.annihilator(),
            rho: self.u.basis().clone(),
        }
    }
}

/// `ρ: E = H^k → U = R^{4k−l}` surjective, with kernel of dimension `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocrInput {
    k: usize,
    kernel: Subspace<Rat>,
    rho: Mat<Rat>,
}

impl CocrInput {
    /// `ρ` is taken to be the map whose rows are the canonical basis of
    /// `(ker ρ)⁰`.
    pub fn from_kernel(k: usize, kernel: Subspace<Rat>) -> Result<Self> {
        if kernel.ambient() != 4 * k {
            return Err(CrqError::AmbientMismatch {
                left: kernel.ambient(),
                right: 4 * k,
            });
        }
        let rho = kernel.annihilator().basis().clone();
        Ok(CocrInput { k, kernel, rho })
    }

    pub fn from_kernel_basis(k: usize, basis: Vec<Vec<Rat>>) -> Result<Self> {
        CocrInput::from_kernel(k, Subspace::from_independent(4 * k, basis)?)
    }

    pub fn from_rho(k: usize, rho: Mat<Rat>) -> Result<Self> {
        if rho.cols() != 4 * k {
            return Err(CrqError::AmbientMismatch {
                left: rho.cols(),
                right: 4 * k,
            });
        }
        if rho.rank() != rho.rows() {
            return Err(CrqError::Contract("rho is not surjective".into()));
        }
        Ok(CocrInput {
            k,
            kernel: rho.kernel(),
            rho,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kernel(&self) -> &Subspace<Rat> {
        &self.kernel
    }

    pub fn rho(&self) -> &Mat<Rat> {
        &self.rho
    }

    /// `l = dim ker ρ`.
    pub fn l(&self) -> usize {
        self.kernel.dim()
    }

    /// `dim U`.
    pub fn target_dim(&self) -> usize {
        self.rho.rows()
    }

    /// The dual CR datum: `ρ*` embeds `U*` onto the row space of `ρ`.
    pub fn dual(&self) -> CrInput {
        CrInput {
            k: self.k,
            u: self.rho.row_space(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrqInput {
    Cr(CrInput),
    Cocr(CocrInput),
}

impl CrqInput {
    pub fn k(&self) -> usize {
        match self {
            CrqInput::Cr(c) => c.k(),
            CrqInput::Cocr(c) => c.k(),
        }
    }

    pub fn role(&self) -> Role {
        match self {
            CrqInput::Cr(_) => Role::Cr,
            CrqInput::Cocr(_) => Role::Cocr,
        }
    }

    /// The subspace a document lists: `U` for CR, `ker ρ` for co-CR.
    pub fn subspace(&self) -> &Subspace<Rat> {
        match self {
            CrqInput::Cr(c) => c.u(),
            CrqInput::Cocr(c) => c.kernel(),
        }
    }

    pub fn dual(&self) -> CrqInput {
        match self {
            CrqInput::Cr(c) => CrqInput::Cocr(c.dual()),
            CrqInput::Cocr(c) => CrqInput::Cr(c.dual()),
        }
    }
}
