//! Decomposition of a CR quaternionic space into the atoms `U_m`, `U'_m`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{CrqError, Result};

use super::filtration::{filtration_w1, filtration_w2};
use super::input::CrInput;
use super::splitting::{splitting_type_cr, SplittingType};

/// `U_m ⊆ H^{m+1}` (dimension `2m+3`, bundle `O(−2m−2)`) or
/// `U'_m ⊆ H^{2m+1}` (dimension `4m+4`, bundle `2O(−2m−1)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    U(usize),
    UPrime(usize),
}

impl Tag {
    pub fn dim(&self) -> usize {
        match *self {
            Tag::U(m) => 2 * m + 3,
            Tag::UPrime(m) => 4 * m + 4,
        }
    }

    /// Quaternionic dimension of the ambient space of the atom.
    pub fn k(&self) -> usize {
        match *self {
            Tag::U(m) => m + 1,
            Tag::UPrime(m) => 2 * m + 1,
        }
    }

    /// The `n` with the atom first appearing in `W_n`.
    pub fn index(&self) -> usize {
        match *self {
            Tag::U(m) => 2 * m + 2,
            Tag::UPrime(m) => 2 * m + 1,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Tag::U(m) => format!("U_{m}"),
            Tag::UPrime(m) => format!("U'_{m}"),
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrDecomposition {
    pub tags: BTreeMap<Tag, usize>,
    /// `dim W_n` for `n = 1, …, N`, with `W_N = U`.
    pub filtration: Vec<usize>,
}

impl CrDecomposition {
    pub fn from_splitting(s: &SplittingType) -> Result<Self> {
        let mut tags = BTreeMap::new();
        for (d, m) in s.parts() {
            let n = usize::try_from(-d)
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| {
                    CrqError::InvariantBreach(format!("CR splitting type has degree {d} >= 0"))
                })?;
            let (tag, count) = if n % 2 == 0 {
                (Tag::U(n / 2 - 1), m)
            } else if m % 2 == 0 {
                (Tag::UPrime((n - 1) / 2), m / 2)
            } else {
                return Err(CrqError::InvariantBreach(format!(
                    "odd multiplicity {m} at degree {d}"
                )));
            };
            *tags.entry(tag).or_insert(0) += count;
        }
        let top = tags.keys().map(Tag::index).max().unwrap_or(0);
        let filtration = (1..=top)
            .map(|n| {
                tags.iter()
                    .filter(|(t, _)| t.index() <= n)
                    .map(|(t, c)| t.dim() * c)
                    .sum()
            })
            .collect();
        Ok(CrDecomposition { tags, filtration })
    }

    pub fn dim(&self) -> usize {
        self.tags.iter().map(|(t, c)| t.dim() * c).sum()
    }

    pub fn k(&self) -> usize {
        self.tags.iter().map(|(t, c)| t.k() * c).sum()
    }

    pub fn w(&self, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        self.filtration
            .get(n - 1)
            .copied()
            .unwrap_or_else(|| self.dim())
    }

    pub fn tag_list(&self) -> Vec<(Tag, usize)> {
        self.tags.iter().map(|(&t, &c)| (t, c)).collect()
    }
}

/// Tags from the splitting type, with the bookkeeping and the first two
/// filtration terms checked against the subspaces themselves.
pub fn decompose_cr(inp: &CrInput) -> Result<CrDecomposition> {
    let dec = CrDecomposition::from_splitting(&splitting_type_cr(inp)?)?;
    let breach = |what: String| Err(CrqError::InvariantBreach(what));
    if dec.dim() != inp.u().dim() || dec.k() != inp.k() {
        return breach(format!(
            "tags account for dim {} in H^{}, input is dim {} in H^{}",
            dec.dim(),
            dec.k(),
            inp.u().dim(),
            inp.k()
        ));
    }
    let (w1, w2) = (filtration_w1(inp).dim(), filtration_w2(inp).dim());
    if dec.w(1) != w1 || dec.w(2) != w2 {
        return breach(format!(
            "filtration from tags (W1 = {}, W2 = {}) differs from subspaces ({w1}, {w2})",
            dec.w(1),
            dec.w(2)
        ));
    }
    Ok(dec)
}
