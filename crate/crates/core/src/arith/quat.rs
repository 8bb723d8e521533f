//! Rational quaternions `w + x·i + y·j + z·k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_rat, int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quat {
    pub w: Rat,
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Quat {
    pub fn new(w: Rat, x: Rat, y: Rat, z: Rat) -> Self {
        Quat { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quat::new(int(w), int(x), int(y), int(z))
    }

    pub fn zero() -> Self {
        Quat::default()
    }

    pub fn one() -> Self {
        Quat::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    /// The basis `(1, i, j, k)` in coordinate order.
    pub fn basis() -> [Quat; 4] {
        [Quat::one(), Quat::i(), Quat::j(), Quat::k()]
    }

    pub fn coords(&self) -> [Rat; 4] {
        [
            self.w.clone(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        ]
    }

    pub fn from_coords(c: &[Rat]) -> Self {
        Quat::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    pub fn conj(&self) -> Self {
        Quat::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `|q|²`, so that `q·q̄ = |q|²·1`.
    pub fn norm2(&self) -> Rat {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.w.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm2().is_one()
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Quat::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }

    /// Inverse `q̄ / |q|²`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm2();
        if n.is_zero() {
            None
        } else {
            Some(self.conj().scale(&(Rat::one() / n)))
        }
    }
}

impl Add for &Quat {
    type Output = Quat;
    fn add(self, o: &Quat) -> Quat {
        Quat::new(
            &self.w + &o.w,
            &self.x + &o.x,
            &self.y + &o.y,
            &self.z + &o.z,
        )
    }
}

impl Sub for &Quat {
    type Output = Quat;
    fn sub(self, o: &Quat) -> Quat {
        Quat::new(
            &self.w - &o.w,
            &self.x - &o.x,
            &self.y - &o.y,
            &self.z - &o.z,
        )
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Mul for &Quat {
    type Output = Quat;
    fn mul(self, o: &Quat) -> Quat {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quat::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, o: Quat) -> Quat {
        &self * &o
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            format_rat(&self.w),
            format_rat(&self.x),
            format_rat(&self.y),
            format_rat(&self.z)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::rat;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, -&Quat::one());
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn conjugate_product_is_norm() {
        let q = Quat::new(rat(1, 2), int(-3), rat(2, 5), int(7));
        let p = &q * &q.conj();
        assert_eq!(p, Quat::one().scale(&q.norm2()));
        let inv = q.inverse().unwrap();
        assert_eq!(&q * &inv, Quat::one());
        assert!(Quat::zero().inverse().is_none());
    }
}
