//! Search for `J` and `u, v ∈ U ∩ J(U)` with `α(u)·α(v) < 0`.

use num_traits::Signed;

use crate::arith::mat::dot;
use crate::arith::{rat, GaussRat, Rat};
use crate::error::{CrqError, Result};
use crate::model::{j_from_zeta, TwistorPoint};

use super::filtration::quat_image;
use super::input::CrInput;

pub const DEFAULT_BUDGET: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullWitness {
    pub point: TwistorPoint,
    /// Ambient coordinates, `α(u) > 0`.
    pub u: Vec<Rat>,
    /// Ambient coordinates, `α(v) < 0`.
    pub v: Vec<Rat>,
    /// Number of points examined.
    pub attempts: usize,
}

/// Twistor points in a fixed order: `∞`, then level by level the points
/// `a + bi` whose coordinates have denominator at most `n` and absolute
/// value at most `n`, new points only, each coordinate ordered by
/// denominator, then absolute value, positive first.
pub fn grid() -> impl Iterator<Item = TwistorPoint> {
    let levels = (1i64..).flat_map(|n| {
        let mut vals: Vec<Rat> = Vec::new();
        for q in 1..=n {
            for p in -n * q..=n * q {
                let r = rat(p, q);
                if !vals.contains(&r) {
                    vals.push(r);
                }
            }
        }
        let height = |r: &Rat| (r.denom().clone(), r.numer().abs(), r.is_negative());
        vals.sort_by_key(height);
        let mut pts: Vec<(Rat, Rat)> = Vec::new();
        for a in &vals {
            for b in &vals {
                let fresh = a.denom() > &(n - 1).into()
                    || b.denom() > &(n - 1).into()
                    || a.abs() > rat(n - 1, 1)
                    || b.abs() > rat(n - 1, 1);
                if fresh {
                    pts.push((a.clone(), b.clone()));
                }
            }
        }
        pts.into_iter()
            .map(|(a, b)| TwistorPoint::affine(GaussRat::new(a, b)))
    });
    std::iter::once(TwistorPoint::infinity()).chain(levels)
}

/// `alpha` is a functional on `U` in the coordinates dual to the canonical
/// basis of `U` (so `α(u) = Σ_r alpha_r · u_{pivot_r}`).
pub fn full_witness(inp: &CrInput, alpha: &[Rat], budget: usize) -> Result<FullWitness> {
    let (k, u) = (inp.k(), inp.u());
    if alpha.len() != u.dim() {
        return Err(CrqError::Contract(format!(
            "alpha has {} coordinates, U has dimension {}",
            alpha.len(),
            u.dim()
        )));
    }
    if alpha.iter().all(|a| a == &rat(0, 1)) {
        return Err(CrqError::Contract("alpha must be nonzero".into()));
    }
    let eval = |x: &[Rat]| -> Rat {
        let c = u.coordinates(x).expect("vector lies in U");
        dot(alpha, &c)
    };
    for (attempts, p) in grid().take(budget).enumerate() {
        let ju = quat_image(u, j_from_zeta(&p).quat(), k);
        let meet = u.intersect(&ju)?;
        for s in meet.basis_vectors() {
            let a = eval(&s);
            if a == rat(0, 1) {
                continue;
            }
            let up: Vec<Rat> = if a.is_positive() {
                s
            } else {
                s.iter().map(|x| -x).collect()
            };
            let vn: Vec<Rat> = up.iter().map(|x| -x).collect();
            debug_assert!((eval(&up) * eval(&vn)).is_negative());
            return Ok(FullWitness {
                point: p,
                u: up,
                v: vn,
                attempts: attempts + 1,
            });
        }
    }
    Err(CrqError::BudgetExhausted { budget })
}
