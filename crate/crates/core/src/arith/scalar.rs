//! Exact scalar fields: the rationals and the Gaussian rationals.
//!
//! Every field carries an integral domain companion (`BigInt`, Gaussian
//! integers) so that elimination can run fraction-free.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::CrqError;

/// Arbitrary-precision rational. `BigRational` keeps the reduced form with a
/// positive denominator after every operation.
pub type Rat = BigRational;

/// Builds a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Builds an integral rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p/q"` or `"p/q"` exactly.
pub fn parse_rat(s: &str) -> Result<Rat, CrqError> {
    let t = s.trim();
    let bad = || CrqError::Parse(format!("invalid rational {s:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if Zero::is_zero(&d) {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An integral domain with exact division, used by fraction-free
/// elimination.
pub trait Domain: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Exact quotient, `None` when `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
}

/// Element of `Z[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -&self.im)
    }
}

impl Domain for GaussInt {
    fn zero() -> Self {
        GaussInt::new(<BigInt as Zero>::zero(), <BigInt as Zero>::zero())
    }
    fn one() -> Self {
        GaussInt::new(<BigInt as One>::one(), <BigInt as Zero>::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        GaussInt::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        GaussInt::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        GaussInt::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        let n = o.norm();
        let p = Domain::mul(self, &o.conj());
        let (qr, rr) = p.re.div_rem(&n);
        let (qi, ri) = p.im.div_rem(&n);
        (Zero::is_zero(&rr) && Zero::is_zero(&ri)).then(|| GaussInt::new(qr, qi))
    }
}

/// An exact field with a conjugation (trivial over the rationals).
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    type Integral: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(r: Rat) -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
    /// Scales a row by a common denominator so every entry is integral.
    fn clear_denominators(row: &[Self]) -> Vec<Self::Integral>;
    fn from_integral(x: &Self::Integral) -> Self;
}

impl Field for Rat {
    type Integral = BigInt;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn clear_denominators(row: &[Self]) -> Vec<BigInt> {
        let l = row
            .iter()
            .fold(<BigInt as One>::one(), |acc, x| acc.lcm(x.denom()));
        row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
    }
    fn from_integral(x: &BigInt) -> Self {
        Rat::from_integer(x.clone())
    }
}

/// Element `re + im·i` of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat::new(re, <Rat as Zero>::zero())
    }

    pub fn i() -> Self {
        GaussRat::new(<Rat as Zero>::zero(), <Rat as One>::one())
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat::new(int(re), int(im))
    }

    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.re), Zero::is_zero(&self.im)) {
            (_, true) => write!(f, "{}", format_rat(&self.re)),
            (true, false) => write!(f, "{}i", format_rat(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{}{}{}i",
                    format_rat(&self.re),
                    sign,
                    format_rat(&self.im.abs())
                )
            }
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, o: GaussRat) -> GaussRat {
        let n = o.norm();
        assert!(!Zero::is_zero(&n), "division by zero in Q(i)");
        let c = o.conj();
        let p = self * c;
        GaussRat::new(p.re / &n, p.im / &n)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Field for GaussRat {
    type Integral = GaussInt;

    fn zero() -> Self {
        GaussRat::default()
    }
    fn one() -> Self {
        GaussRat::real(<Rat as One>::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn from_rat(r: Rat) -> Self {
        GaussRat::real(r)
    }
    fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }
    fn clear_denominators(row: &[Self]) -> Vec<GaussInt> {
        let l = row.iter().fold(<BigInt as One>::one(), |acc, x| {
            acc.lcm(x.re.denom()).lcm(x.im.denom())
        });
        row.iter()
            .map(|x| {
                GaussInt::new(
                    x.re.numer() * (&l / x.re.denom()),
                    x.im.numer() * (&l / x.im.denom()),
                )
            })
            .collect()
    }
    fn from_integral(x: &GaussInt) -> Self {
        GaussRat::new(
            Rat::from_integer(x.re.clone()),
            Rat::from_integer(x.im.clone()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["0", "3", "-7/2", "12/8"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(format_rat(&parse_rat("12/8").unwrap()), "3/2");
        assert_eq!(format_rat(&parse_rat("4/-6").unwrap()), "-2/3");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn gauss_field_ops() {
        let a = GaussRat::from_ints(1, 2);
        let b = GaussRat::from_ints(3, -1);
        let q = a.clone() / b.clone();
        assert_eq!(q * b, a.clone());
        assert_eq!(a.conj().conj(), a);
        assert_eq!(GaussRat::i() * GaussRat::i(), -GaussRat::one());
    }

    #[test]
    fn gauss_int_exact_division() {
        let a = GaussInt::new(BigInt::from(3), BigInt::from(4));
        let b = GaussInt::new(BigInt::from(1), BigInt::from(2));
        let p = Domain::mul(&a, &b);
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(
            a.div_exact(&GaussInt::new(BigInt::from(2), BigInt::from(0))),
            None
        );
    }

    #[test]
    fn clearing_denominators_scales_uniformly() {
        let row = vec![rat(1, 2), rat(-2, 3), int(0)];
        assert_eq!(
            Rat::clear_denominators(&row),
            vec![BigInt::from(3), BigInt::from(-4), BigInt::from(0)]
        );
    }
}
