//! Matrices whose columns are homogeneous in `[ζ0 : ζ1]`, and the decision
//! "rank equals `target` at every point of `CP¹`".

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{Field, GaussRat, Mat};
use crate::model::TwistorPoint;

use super::matrix::PolyMat;
use super::univariate::Poly;

/// `M(ζ0, ζ1) = ζ0·A + ζ1·B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPencil {
    pub a: Mat<GaussRat>,
    pub b: Mat<GaussRat>,
}

impl LinearPencil {
    pub fn new(a: Mat<GaussRat>, b: Mat<GaussRat>) -> Self {
        assert_eq!(
            (a.rows(), a.cols()),
            (b.rows(), b.cols()),
            "pencil shape mismatch"
        );
        LinearPencil { a, b }
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    pub fn cols(&self) -> usize {
        self.a.cols()
    }

    pub fn at(&self, p: &TwistorPoint) -> Mat<GaussRat> {
        let (z0, z1) = p.homogeneous();
        self.a.scale(z0).add(&self.b.scale(z1))
    }

    /// Left multiplication by a constant matrix.
    pub fn premul(&self, m: &Mat<GaussRat>) -> Self {
        LinearPencil::new(m.mul(&self.a), m.mul(&self.b))
    }

    pub fn block_diag(&self, o: &Self) -> Self {
        LinearPencil::new(self.a.block_diag(&o.a), self.b.block_diag(&o.b))
    }

    pub fn full_rank_everywhere(&self, target: usize) -> RankDecision {
        full_rank_everywhere(&HomogeneousMat::from(self), target)
    }
}

/// A matrix over `Q(i)[ζ]` read projectively column by column: column `c`
/// is homogenized to its own degree `d_c` (the largest degree among its
/// entries), so its value at `[1:0]` is the coefficient of `ζ^{d_c}`. Powers
/// of `ζ1` common to a whole column are thereby divided out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousMat {
    affine: PolyMat,
}

impl HomogeneousMat {
    pub fn new(affine: PolyMat) -> Self {
        HomogeneousMat { affine }
    }

    pub fn constant(m: &Mat<GaussRat>) -> Self {
        HomogeneousMat::new(PolyMat::constant(m))
    }

    pub fn rows(&self) -> usize {
        self.affine.rows()
    }

    pub fn cols(&self) -> usize {
        self.affine.cols()
    }

    pub fn affine(&self) -> &PolyMat {
        &self.affine
    }

    pub fn column_degree(&self, c: usize) -> usize {
        (0..self.rows())
            .filter_map(|r| self.affine.get(r, c).degree())
            .max()
            .unwrap_or(0)
    }

    pub fn hstack(&self, o: &Self) -> Self {
        HomogeneousMat::new(self.affine.hstack(&o.affine))
    }

    /// Value at `[1:0]`: the top-degree coefficient of each column.
    pub fn at_infinity(&self) -> Mat<GaussRat> {
        let degrees: Vec<usize> = (0..self.cols()).map(|c| self.column_degree(c)).collect();
        Mat::from_fn(self.rows(), self.cols(), |r, c| {
            self.affine.get(r, c).coeff(degrees[c])
        })
    }

    /// Value at a point, up to the nonzero column scalings that homogeneity
    /// allows (so the rank is well defined).
    pub fn at(&self, p: &TwistorPoint) -> Mat<GaussRat> {
        match p.zeta() {
            Some(z) => self.affine.eval(z),
            None => self.at_infinity(),
        }
    }

    pub fn rank_at(&self, p: &TwistorPoint) -> usize {
        self.at(p).rank()
    }
}

impl From<&LinearPencil> for HomogeneousMat {
    fn from(p: &LinearPencil) -> Self {
        HomogeneousMat::new(PolyMat::affine(&p.a, &p.b))
    }
}

/// Outcome of [`full_rank_everywhere`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDecision {
    pub holds: bool,
    /// Rank over the rational function field.
    pub generic_rank: usize,
    /// A point where the rank differs from the target. Always present when
    /// the decision fails, except when the only failures lie at roots of
    /// `locus` outside `Q(i)`.
    pub witness: Option<TwistorPoint>,
    /// Monic polynomial in the chart `ζ1 = 1` whose roots are the finite
    /// points of rank drop, when the generic rank is the target.
    pub locus: Option<Poly>,
}

/// Decides whether `m` has rank exactly `target` at every point of `CP¹`.
///
/// The generic rank and the finite part of the rank-drop locus come from the
/// Smith form over `Q(i)[ζ]`; the point `[1:0]` is examined separately.
pub fn full_rank_everywhere(m: &HomogeneousMat, target: usize) -> RankDecision {
    let factors = m.affine.smith_form();
    let r = factors.len();
    if r != target {
        let witness = if r < target {
            TwistorPoint::from_ints(0, 0)
        } else {
            (0i64..)
                .map(|n| TwistorPoint::from_ints(n, 0))
                .find(|p| m.rank_at(p) != target)
                .expect("generic rank is attained off a finite set")
        };
        return RankDecision {
            holds: false,
            generic_rank: r,
            witness: Some(witness),
            locus: None,
        };
    }
    let locus = factors.last().filter(|d| !d.is_constant()).cloned();
    let infinity_ok = m.at_infinity().rank() == target;
    let witness = if !infinity_ok {
        Some(TwistorPoint::infinity())
    } else {
        locus
            .as_ref()
            .and_then(gaussian_rational_root)
            .map(TwistorPoint::affine)
    };
    if let Some(w) = &witness {
        debug_assert!(m.rank_at(w) < target);
    }
    RankDecision {
        holds: infinity_ok && locus.is_none(),
        generic_rank: r,
        witness,
        locus,
    }
}

/// Largest norm whose divisors are enumerated when searching for roots.
const ROOT_SEARCH_NORM_LIMIT: u64 = 1 << 32;

/// A root of `p` in `Q(i)`, by the rational root theorem over `Z[i]`.
/// Gives up (returns `None`) when the constant or leading coefficient is too
/// large to factor by trial division.
pub fn gaussian_rational_root(p: &Poly) -> Option<GaussRat> {
    let deg = p.degree()?;
    if deg == 0 {
        return None;
    }
    if p.coeff(0).is_zero() {
        return Some(GaussRat::zero());
    }
    if deg == 1 {
        return Some(-(p.coeff(0) / p.coeff(1)));
    }
    let ints = GaussRat::clear_denominators(p.coeffs());
    let (c0, cn) = (&ints[0], &ints[deg]);
    let nums = gaussian_divisors(&c0.re, &c0.im)?;
    let dens: Vec<(BigInt, BigInt)> = gaussian_divisors(&cn.re, &cn.im)?
        .into_iter()
        .filter(|(x, y)| x.is_positive() && !y.is_negative())
        .collect();
    for (dr, di) in &dens {
        let den = GaussRat::new(dr.clone().into(), di.clone().into());
        for (nr, ni) in &nums {
            let z = GaussRat::new(nr.clone().into(), ni.clone().into()) / den.clone();
            if p.eval(&z).is_zero() {
                return Some(z);
            }
        }
    }
    None
}

/// All `g ∈ Z[i]` dividing `re + im·i` (every associate included).
fn gaussian_divisors(re: &BigInt, im: &BigInt) -> Option<Vec<(BigInt, BigInt)>> {
    let norm = (re * re + im * im).to_u64()?;
    if norm > ROOT_SEARCH_NORM_LIMIT {
        return None;
    }
    let mut norms = std::collections::BTreeSet::new();
    for d in (1..=norm.isqrt()).filter(|d| norm % d == 0) {
        norms.insert(d);
        norms.insert(norm / d);
    }
    let mut out = Vec::new();
    for n in norms {
        for x in 0..=n.isqrt() {
            let y2 = n - x * x;
            let y = y2.isqrt();
            if y * y == y2 {
                let (x, y) = (x as i64, y as i64);
                out.extend([(x, y), (-x, y), (x, -y), (-x, -y)]);
            }
        }
    }
    let target = (re.clone(), im.clone());
    let divides = |(x, y): &(i64, i64)| {
        // (re + im i)(x − y i) must be divisible by x² + y²
        let (x, y) = (BigInt::from(*x), BigInt::from(*y));
        let n = &x * &x + &y * &y;
        let pr = &target.0 * &x + &target.1 * &y;
        let pi = &target.1 * &x - &target.0 * &y;
        pr.is_multiple_of(&n) && pi.is_multiple_of(&n)
    };
    let mut divs: Vec<(BigInt, BigInt)> = out
        .into_iter()
        .filter(divides)
        .map(|(x, y)| (BigInt::from(x), BigInt::from(y)))
        .collect();
    divs.sort();
    divs.dedup();
    debug_assert!(divs.contains(&(BigInt::one(), BigInt::zero())));
    Some(divs)
}
