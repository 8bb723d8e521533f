//! Splitting types `⊕ O(j)^{a_j}` of the holomorphic bundle over `CP¹`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::Subspace;
use crate::error::{CrqError, Result};
use crate::model::{eigenframe, TwistorPoint};

use super::decide::is_cocr_quaternionic;
use super::input::{CocrInput, CrInput};

/// Multiset of line bundle degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    parts: BTreeMap<i64, usize>,
}

impl SplittingType {
    pub fn new(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut parts = BTreeMap::new();
        for (d, m) in pairs {
            if m > 0 {
                *parts.entry(d).or_insert(0) += m;
            }
        }
        SplittingType { parts }
    }

    pub fn from_degrees(degrees: impl IntoIterator<Item = i64>) -> Self {
        SplittingType::new(degrees.into_iter().map(|d| (d, 1)))
    }

    /// `(degree, multiplicity)` in increasing degree.
    pub fn parts(&self) -> Vec<(i64, usize)> {
        self.parts.iter().map(|(&d, &m)| (d, m)).collect()
    }

    pub fn multiplicity(&self, degree: i64) -> usize {
        self.parts.get(&degree).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.parts.values().sum()
    }

    pub fn degree(&self) -> i64 {
        self.parts.iter().map(|(&d, &m)| d * m as i64).sum()
    }

    pub fn negate(&self) -> Self {
        SplittingType::new(self.parts.iter().map(|(&d, &m)| (-d, m)))
    }

    pub fn union(&self, o: &Self) -> Self {
        SplittingType::new(self.parts().into_iter().chain(o.parts()))
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .parts
            .iter()
            .map(|(&d, &m)| {
                if m == 1 {
                    format!("O({d})")
                } else {
                    format!("{m}O({d})")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `ζ = 0, 1, …, l+1`.
pub fn default_points(l: usize) -> Vec<TwistorPoint> {
    (0..l as i64 + 2)
        .map(|n| TwistorPoint::from_ints(n, 0))
        .collect()
}

/// Odd `ζ = 3, 5, 7, …`, starting past `l + 1` so the set is disjoint
/// from [`default_points`].
pub fn alternate_points(l: usize) -> Vec<TwistorPoint> {
    let first = (l as i64 + 2).max(3) | 1;
    (0..l as i64 + 2)
        .map(|n| TwistorPoint::from_ints(first + 2 * n, 0))
        .collect()
}

pub fn splitting_type_cocr(inp: &CocrInput) -> Result<SplittingType> {
    splitting_type_cocr_at(inp, &default_points(inp.l()))
}

/// `d_p` for `p = 0..=l+2`: the dimension of the sections of the bundle
/// vanishing at the first `p` points, i.e. of `⋂_{j≤p} ρ(E^{J(ζ_j)})`.
pub fn section_dimensions(inp: &CocrInput, points: &[TwistorPoint]) -> Result<Vec<usize>> {
    let l = inp.l();
    if points.len() < l + 2 {
        return Err(CrqError::Contract(format!(
            "need {} evaluation points, got {}",
            l + 2,
            points.len()
        )));
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(CrqError::Contract(format!("evaluation point {p} repeated")));
        }
    }
    let rho = inp.rho().complexify();
    let frame = eigenframe(inp.k());
    let mut acc = Subspace::full(inp.target_dim());
    let mut d = vec![acc.dim()];
    for p in &points[..l + 2] {
        let image = rho.mul(&frame.at(p)).column_space();
        acc = acc.intersect(&image)?;
        d.push(acc.dim());
    }
    Ok(d)
}

/// Splitting type from `d_p` at the given distinct points.
pub fn splitting_type_cocr_at(inp: &CocrInput, points: &[TwistorPoint]) -> Result<SplittingType> {
    let decision = is_cocr_quaternionic(inp)?;
    if !decision.holds {
        return Err(CrqError::Contract(match decision.witness {
            Some(w) => format!("not co-CR quaternionic: fails at {w}"),
            None => "not co-CR quaternionic".into(),
        }));
    }
    let (k, l) = (inp.k() as i64, inp.l());
    let d = section_dimensions(inp, points)?;
    let breach = |what: String| Err(CrqError::InvariantBreach(what));
    if d[1] != 2 * k as usize || d[l + 2] != 0 {
        return breach(format!(
            "section dimensions {d:?} do not start at 2k and end at 0"
        ));
    }
    let at = |p: usize| d.get(p).copied().unwrap_or(0) as i64;
    if (1..=l + 1).any(|p| at(p) - at(p + 1) < at(p + 1) - at(p + 2)) {
        return breach(format!("section dimensions {d:?} are not convex"));
    }
    let a: Vec<i64> = (1..=l + 1)
        .map(|p| (at(p) - at(p + 1)) - (at(p + 1) - at(p + 2)))
        .collect();
    let total: i64 = a.iter().sum();
    let weighted: i64 = a.iter().zip(1..).map(|(a, j)| a * j).sum();
    if total != 2 * k - l as i64 || weighted != 2 * k {
        return breach(format!(
            "multiplicities {a:?} violate the rank/degree identities"
        ));
    }
    if a.iter()
        .zip(1..)
        .any(|(a, j): (&i64, i64)| j % 2 == 1 && a % 2 != 0)
    {
        return breach(format!(
            "multiplicities {a:?} have an odd count at an odd degree"
        ));
    }
    Ok(SplittingType::new(
        a.iter().zip(1..).map(|(&a, j)| (j, a as usize)),
    ))
}

/// Negation of the splitting type of the dual co-CR space.
pub fn splitting_type_cr(inp: &CrInput) -> Result<SplittingType> {
    Ok(splitting_type_cocr(&inp.dual())?.negate())
}

pub fn splitting_type_cr_at(inp: &CrInput, points: &[TwistorPoint]) -> Result<SplittingType> {
    Ok(splitting_type_cocr_at(&inp.dual(), points)?.negate())
}

/// Every co-CR splitting type allowed for `(k, l)`: nonnegative `a_1..a_{l+1}`
/// with `Σ a_j = 2k − l`, `Σ j·a_j = 2k` and `a_j` even for odd `j`.
pub fn enumerate_splitting_types(k: usize, l: usize) -> Result<Vec<SplittingType>> {
    if k == 0 || l >= 2 * k {
        return Err(CrqError::Contract(format!(
            "need 0 <= l <= 2k-1, got k = {k}, l = {l}"
        )));
    }
    let mut out = Vec::new();
    let mut a = vec![0usize; l + 2];
    fill(1, l + 1, 2 * k - l, 2 * k, &mut a, &mut out);
    Ok(out)
}

fn fill(
    j: usize,
    top: usize,
    count: usize,
    weight: usize,
    a: &mut [usize],
    out: &mut Vec<SplittingType>,
) {
    if j == top {
        if weight == j * count && (j % 2 == 0 || count % 2 == 0) {
            a[j] = count;
            out.push(SplittingType::new((1..=top).map(|t| (t as i64, a[t]))));
            a[j] = 0;
        }
        return;
    }
    let step = if j % 2 == 1 { 2 } else { 1 };
    let mut m = 0;
    while m <= count && m * j <= weight {
        a[j] = m;
        fill(j + 1, top, count - m, weight - m * j, a, out);
        m += step;
    }
    a[j] = 0;
}
