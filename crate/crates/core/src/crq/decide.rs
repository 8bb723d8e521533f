//! The two structure tests. Both reduce to a rank condition on a matrix
//! whose columns are a constant basis next to the eigenframe, required at
//! every point of `CP¹`.

use crate::error::{CrqError, Result};
use crate::model::eigenframe;
use crate::poly::{full_rank_everywhere, HomogeneousMat, RankDecision};

use super::input::{CocrInput, CrInput};

/// `[basis(U^C) | F(ζ)]`, of size `4k × (dim U + 2k)`.
pub fn cr_pencil(inp: &CrInput) -> HomogeneousMat {
    let basis = inp.u().basis_columns().complexify();
    HomogeneousMat::constant(&basis).hstack(&HomogeneousMat::from(&eigenframe(inp.k())))
}

/// `[basis((ker ρ)^C) | F(ζ)]`, of size `4k × (l + 2k)`.
pub fn cocr_pencil(inp: &CocrInput) -> HomogeneousMat {
    let basis = inp.kernel().basis_columns().complexify();
    HomogeneousMat::constant(&basis).hstack(&HomogeneousMat::from(&eigenframe(inp.k())))
}

/// `U^C + E^J = E^C` for every `J`, i.e. full row rank `4k` everywhere.
pub fn is_cr_quaternionic(inp: &CrInput) -> Result<RankDecision> {
    let (k, d) = (inp.k(), inp.u().dim());
    if k > 0 && d <= 2 * k {
        return Err(CrqError::StructurallyImpossible(format!(
            "dim U = {d} must exceed 2k = {}",
            2 * k
        )));
    }
    Ok(full_rank_everywhere(&cr_pencil(inp), 4 * k))
}

/// `(ker ρ)^C ∩ E^J = 0` for every `J`, i.e. full column rank `l + 2k`.
pub fn is_cocr_quaternionic(inp: &CocrInput) -> Result<RankDecision> {
    let (k, l) = (inp.k(), inp.l());
    if k > 0 && l >= 2 * k {
        return Err(CrqError::StructurallyImpossible(format!(
            "dim ker rho = {l} must be below 2k = {}",
            2 * k
        )));
    }
    Ok(full_rank_everywhere(&cocr_pencil(inp), l + 2 * k))
}
