//! Dense univariate polynomials over `Q(i)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{Field, GaussRat};

/// Coefficients lowest degree first, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<GaussRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: GaussRat) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    /// The indeterminate `ζ`.
    pub fn x() -> Self {
        Poly::new(vec![GaussRat::zero(), GaussRat::one()])
    }

    /// `a·ζ + b`.
    pub fn linear(a: GaussRat, b: GaussRat) -> Self {
        Poly::new(vec![b, a])
    }

    /// Monic `ζ − r`.
    pub fn root_factor(r: &GaussRat) -> Self {
        Poly::new(vec![-r.clone(), GaussRat::one()])
    }

    pub fn from_ints(c: &[(i64, i64)]) -> Self {
        Poly::new(
            c.iter()
                .map(|&(re, im)| GaussRat::from_ints(re, im))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    /// Coefficient of `ζ^n`, zero past the degree.
    pub fn coeff(&self, n: usize) -> GaussRat {
        self.coeffs.get(n).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&GaussRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &GaussRat) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn eval(&self, z: &GaussRat) -> GaussRat {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussRat::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv = d.coeffs[dd].inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![GaussRat::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = r[top].clone() * inv.clone();
            if !c.is_zero() {
                let shift = top - dd;
                for (i, dc) in d.coeffs.iter().enumerate() {
                    if !dc.is_zero() {
                        r[shift + i] = r[shift + i].clone() - c.clone() * dc.clone();
                    }
                }
                q[shift] = c;
            }
            r.pop();
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn combine(&self, o: &Poly, f: impl Fn(GaussRat, GaussRat) -> GaussRat) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| f(self.coeff(i), o.coeff(i))).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.combine(o, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.combine(o, |a, b| a - b)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| match n {
                0 => format!("({c})"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{n}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        let p = Poly::from_ints(&[(-1, 0), (0, 0), (1, 0)]);
        let q = Poly::from_ints(&[(-1, 0), (1, 0)]);
        assert_eq!(p.gcd(&q), q);
        let p2 = Poly::from_ints(&[(3, 0), (0, 2)]);
        assert_eq!(p2.gcd(&Poly::zero()), p2.monic());
        assert_eq!(
            Poly::x().gcd(&Poly::from_ints(&[(1, 0), (1, 0)])),
            Poly::one()
        );
    }

    #[test]
    fn division_identity() {
        let a = Poly::from_ints(&[(1, 2), (0, -1), (3, 0), (5, 1)]);
        let d = Poly::from_ints(&[(2, 0), (0, 1)]);
        let (q, r) = a.divrem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap_or(0) < d.degree().unwrap());
    }

    #[test]
    fn eval_is_horner() {
        let p = Poly::from_ints(&[(1, 0), (0, 1), (2, 0)]);
        let z = GaussRat::from_ints(1, 1);
        // 1 + i(1+i) + 2(1+i)^2 = 1 + i - 1 + 4i
        assert_eq!(p.eval(&z), GaussRat::from_ints(0, 5));
        assert_eq!(Poly::root_factor(&z).eval(&z), GaussRat::zero());
    }
}
