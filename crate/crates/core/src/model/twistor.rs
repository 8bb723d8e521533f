//! Points of the twistor sphere `CP¹` and the admissible complex structures
//! they parametrize.
//!
//! Convention, fixed once for the whole crate: the affine point `ζ = a + bi`
//! goes to the unit imaginary quaternion
//! `((1 − |ζ|²)·i + 2a·j + 2b·k) / (1 + |ζ|²)`, so that `0 ↦ i`, `1 ↦ j`,
//! `i ↦ k` and `∞ ↦ −i`.

use std::fmt;

use crate::arith::{int, Field, GaussRat, Quat, Rat};
use crate::error::{CrqError, Result};

/// `[ζ0 : ζ1]`, stored canonically as `(ζ, 1)` or `(1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistorPoint {
    z0: GaussRat,
    z1: GaussRat,
}

impl TwistorPoint {
    pub fn new(z0: GaussRat, z1: GaussRat) -> Result<Self> {
        if z1.is_zero() {
            if z0.is_zero() {
                return Err(CrqError::Contract("[0:0] is not a point of CP1".into()));
            }
            return Ok(TwistorPoint::infinity());
        }
        Ok(TwistorPoint::affine(z0 / z1))
    }

    /// The point `[ζ : 1]`.
    pub fn affine(z: GaussRat) -> Self {
        TwistorPoint {
            z0: z,
            z1: GaussRat::one(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        TwistorPoint::affine(GaussRat::from_ints(re, im))
    }

    /// `[1 : 0]`.
    pub fn infinity() -> Self {
        TwistorPoint {
            z0: GaussRat::one(),
            z1: GaussRat::zero(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.z1.is_zero()
    }

    /// Affine coordinate, `None` at infinity.
    pub fn zeta(&self) -> Option<&GaussRat> {
        (!self.is_infinity()).then_some(&self.z0)
    }

    pub fn homogeneous(&self) -> (&GaussRat, &GaussRat) {
        (&self.z0, &self.z1)
    }

    /// `ζ ↦ −1/ζ̄`.
    pub fn antipode(&self) -> Self {
        match self.zeta() {
            None => TwistorPoint::affine(GaussRat::zero()),
            Some(z) if z.is_zero() => TwistorPoint::infinity(),
            Some(z) => TwistorPoint::affine(-(GaussRat::one() / z.conj())),
        }
    }

    /// The quaternion `q(ζ)`; see the module docs.
    pub fn quaternion(&self) -> Quat {
        let Some(z) = self.zeta() else {
            return Quat::from_ints(0, -1, 0, 0);
        };
        let n = z.norm();
        let den = int(1) + n.clone();
        let two = int(2);
        Quat::new(
            int(0),
            (int(1) - n) / den.clone(),
            &two * &z.re / den.clone(),
            &two * &z.im / den,
        )
    }
}

impl fmt::Display for TwistorPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.z0, self.z1)
    }
}

/// A rational unit imaginary quaternion, acting as a complex structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleJ {
    q: Quat,
}

impl AdmissibleJ {
    pub fn new(q: Quat) -> Result<Self> {
        if !q.is_imaginary() || !q.is_unit() {
            return Err(CrqError::Contract(format!(
                "{q} is not a unit imaginary quaternion"
            )));
        }
        Ok(AdmissibleJ { q })
    }

    pub fn quat(&self) -> &Quat {
        &self.q
    }

    pub fn neg(&self) -> Self {
        AdmissibleJ { q: -&self.q }
    }

    /// Inverse of the stereographic parametrization.
    pub fn to_point(&self) -> TwistorPoint {
        let (x, y, z) = (&self.q.x, &self.q.y, &self.q.z);
        let one = int(1);
        if *x == -one.clone() {
            return TwistorPoint::infinity();
        }
        let den: Rat = one + x;
        TwistorPoint::affine(GaussRat::new(y / &den, z / &den))
    }
}

pub fn j_from_zeta(p: &TwistorPoint) -> AdmissibleJ {
    AdmissibleJ { q: p.quaternion() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn stereographic_fixed_points() {
        assert_eq!(
            j_from_zeta(&TwistorPoint::from_ints(0, 0)).quat(),
            &Quat::i()
        );
        assert_eq!(
            j_from_zeta(&TwistorPoint::from_ints(1, 0)).quat(),
            &Quat::j()
        );
        assert_eq!(
            j_from_zeta(&TwistorPoint::from_ints(0, 1)).quat(),
            &Quat::k()
        );
        assert_eq!(j_from_zeta(&TwistorPoint::infinity()).quat(), &-&Quat::i());
    }

    #[test]
    fn canonical_form() {
        let p = TwistorPoint::new(GaussRat::from_ints(2, 0), GaussRat::from_ints(0, 2)).unwrap();
        assert_eq!(p, TwistorPoint::from_ints(0, -1));
        let inf = TwistorPoint::new(GaussRat::from_ints(3, 1), GaussRat::zero()).unwrap();
        assert!(inf.is_infinity());
        assert!(TwistorPoint::new(GaussRat::zero(), GaussRat::zero()).is_err());
    }

    #[test]
    fn antipodes() {
        assert!(TwistorPoint::from_ints(0, 0).antipode().is_infinity());
        assert_eq!(
            TwistorPoint::from_ints(1, 0).antipode(),
            TwistorPoint::from_ints(-1, 0)
        );
        let a = TwistorPoint::from_ints(0, 1).antipode();
        assert_eq!(j_from_zeta(&a).quat(), &-&Quat::k());
    }

    #[test]
    fn point_roundtrip() {
        let p = TwistorPoint::affine(GaussRat::new(rat(3, 7), rat(-2, 5)));
        let j = j_from_zeta(&p);
        assert!(j.quat().is_unit());
        assert_eq!(j.to_point(), p);
    }
}
