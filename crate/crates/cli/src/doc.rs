//! JSON input documents and their conversion to core types.

use serde::{Deserialize, Serialize};

use crq_core::arith::{format_rat, parse_rat, Mat, Quat, Rat};
use crq_core::crq::{CocrInput, CrInput, CrqInput, Role};
use crq_core::maps::Twist;
use crq_core::{CrqError, Result};

/// A subspace of `H^k`: `U` itself for role `cr`, `ker ρ` for role `cocr`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<String>,
    pub basis: Vec<Vec<String>>,
    /// A functional on `U`, in the coordinates dual to its canonical basis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Cr,
    Cocr,
    F,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwistDoc {
    Identity,
    Conjugation(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub kind: MapKind,
    pub src: InputDocument,
    pub dst: InputDocument,
    /// Rows of `t` in canonical coordinates (`U → U′`).
    pub t: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<TwistDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemidirectDocument {
    pub first: InputDocument,
    pub second: InputDocument,
    /// Rows of `α: E′ → U″`.
    pub alpha: Vec<Vec<String>>,
}

/// Deserializes with the failing field path and source position in the
/// message.
pub fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        CrqError::Parse(format!("at {path}: {}", e.into_inner()))
    })?;
    de.end().map_err(|e| CrqError::Parse(e.to_string()))?;
    Ok(value)
}

pub fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

pub fn matrix_strings(m: &Mat<Rat>) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| rat_strings(r)).collect()
}

fn parse_vector(v: &[String], len: usize, field: &str) -> Result<Vec<Rat>> {
    if v.len() != len {
        return Err(CrqError::Parse(format!(
            "{field}: expected {len} entries, got {}",
            v.len()
        )));
    }
    v.iter()
        .enumerate()
        .map(|(i, s)| {
            parse_rat(s)
                .map_err(|_| CrqError::Parse(format!("{field}[{i}]: invalid rational {s:?}")))
        })
        .collect()
}

pub fn parse_matrix(
    rows: &[Vec<String>],
    nrows: usize,
    ncols: usize,
    field: &str,
) -> Result<Mat<Rat>> {
    if rows.len() != nrows {
        return Err(CrqError::Parse(format!(
            "{field}: expected {nrows} rows, got {}",
            rows.len()
        )));
    }
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(r, row)| parse_vector(row, ncols, &format!("{field}[{r}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_rows(ncols, parsed))
}

impl InputDocument {
    pub fn from_cr(inp: &CrInput) -> Self {
        InputDocument {
            k: inp.k(),
            role: Some(Role::Cr.as_str().into()),
            basis: matrix_strings(inp.u().basis()),
            alpha: None,
        }
    }

    pub fn from_cocr(inp: &CocrInput) -> Self {
        InputDocument {
            k: inp.k(),
            role: Some(Role::Cocr.as_str().into()),
            basis: matrix_strings(inp.kernel().basis()),
            alpha: None,
        }
    }

    /// The document's role, reconciled with a command-line override.
    pub fn role(&self, flag: Option<Role>) -> Result<Role> {
        let own = self.role.as_deref().map(str::parse::<Role>).transpose()?;
        match (own, flag) {
            (Some(a), Some(b)) if a != b => Err(CrqError::Contract(format!(
                "document has role {} but {} was requested",
                a.as_str(),
                b.as_str()
            ))),
            (Some(r), _) | (None, Some(r)) => Ok(r),
            (None, None) => Err(CrqError::Contract(
                "no role in the document and no --role given".into(),
            )),
        }
    }

    fn vectors(&self) -> Result<Vec<Vec<Rat>>> {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, v)| parse_vector(v, 4 * self.k, &format!("basis[{i}]")))
            .collect()
    }

    pub fn to_input(&self, flag: Option<Role>) -> Result<CrqInput> {
        Ok(match self.role(flag)? {
            Role::Cr => CrqInput::Cr(self.to_cr()?),
            Role::Cocr => CrqInput::Cocr(self.to_cocr()?),
        })
    }

    pub fn to_cr(&self) -> Result<CrInput> {
        CrInput::from_basis(self.k, self.vectors()?)
    }

    pub fn to_cocr(&self) -> Result<CocrInput> {
        CocrInput::from_kernel_basis(self.k, self.vectors()?)
    }

    /// Components of maps and products: the role, if present, must agree.
    pub fn expect_role(&self, want: Role, field: &str) -> Result<()> {
        match self.role(Some(want)) {
            Ok(_) => Ok(()),
            Err(_) => Err(CrqError::Contract(format!(
                "{field} must have role {}",
                want.as_str()
            ))),
        }
    }

    pub fn parsed_alpha(&self, dim: usize) -> Result<Option<Vec<Rat>>> {
        self.alpha
            .as_ref()
            .map(|a| parse_vector(a, dim, "alpha"))
            .transpose()
    }
}

impl TwistDoc {
    pub fn to_twist(&self) -> Result<Twist> {
        match self {
            TwistDoc::Identity => Ok(Twist::Identity),
            TwistDoc::Conjugation(c) => {
                let v = parse_vector(c, 4, "twist.conjugation")?;
                Twist::conjugation(Quat::from_coords(&v))
            }
        }
    }
}
