//! Machine reports and their text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crq_core::crq::SplittingType;
use crq_core::poly::RankDecision;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub holds: bool,
    pub generic_rank: usize,
    pub witness: Option<String>,
    /// Finite rank-drop locus in the chart `ζ1 = 1`.
    pub locus: Option<String>,
}

impl From<&RankDecision> for DecisionReport {
    fn from(d: &RankDecision) -> Self {
        DecisionReport {
            holds: d.holds,
            generic_rank: d.generic_rank,
            witness: d.witness.as_ref().map(ToString::to_string),
            locus: d.locus.as_ref().map(ToString::to_string),
        }
    }
}

/// `[[degree, multiplicity], …]` with its usual rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub parts: Vec<(i64, usize)>,
    pub text: String,
}

impl From<&SplittingType> for SplittingReport {
    fn from(s: &SplittingType) -> Self {
        SplittingReport {
            parts: s.parts(),
            text: s.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub tags: Vec<(String, usize)>,
    /// `dim W_n` for `n = 1, 2, …`.
    pub w: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationReport {
    pub w1: usize,
    pub w2: usize,
    pub e_lower: usize,
    pub e_upper: usize,
    pub triple_intersection: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub l: usize,
    pub v_basis: Vec<Vec<String>>,
    pub w_dim: usize,
    pub core_dim: usize,
    /// Only for co-CR inputs.
    pub images_triple_test: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub point: String,
    pub u: Vec<String>,
    pub v: Vec<String>,
    pub attempts: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub source: String,
    pub k: usize,
    pub role: String,
    pub dim_u: usize,
    pub codim: usize,
    pub decision: DecisionReport,
    pub splitting_type: Option<SplittingReport>,
    pub decomposition: Option<DecompositionReport>,
    pub filtration: FiltrationReport,
    pub f_certificate: Option<CertificateReport>,
    pub full_witness: Option<WitnessReport>,
    pub timing_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub splitting_type: SplittingReport,
    /// Splitting type and tags of the dual CR space.
    pub cr_splitting_type: SplittingReport,
    pub cr_tags: Vec<(String, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub k: usize,
    pub l: usize,
    pub dim_u: usize,
    pub count: usize,
    pub classes: Vec<ClassReport>,
    pub timing_us: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapReport {
    pub kind: String,
    pub lift_found: bool,
    pub unique: Option<bool>,
    pub lift: Option<Vec<Vec<String>>>,
    pub timing_us: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SemidirectReport {
    pub k: usize,
    pub dim_u: usize,
    pub splitting_type: SplittingReport,
    pub direct_sum_splitting_type: SplittingReport,
    pub direct: bool,
    pub phi: Option<Vec<Vec<String>>>,
    pub psi: Option<Vec<Vec<String>>>,
    pub timing_us: u64,
}

fn matrix_text(out: &mut String, name: &str, m: &[Vec<String>]) {
    let _ = writeln!(out, "{name}:");
    for row in m {
        let _ = writeln!(out, "  [{}]", row.join(", "));
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "-".to_string(), ToString::to_string)
}

fn tags_text(tags: &[(String, usize)]) -> String {
    if tags.is_empty() {
        return "none".into();
    }
    tags.iter()
        .map(|(t, c)| {
            if *c == 1 {
                t.clone()
            } else {
                format!("{c}×{t}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Human-readable rendering; timings are left out.
pub trait Render {
    fn render(&self) -> String;
}

impl Render for AnalyzeReport {
    fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} ({}, k = {}, dim U = {}, codim = {})",
            self.source, self.role, self.k, self.dim_u, self.codim
        );
        let d = &self.decision;
        let _ = writeln!(
            s,
            "quaternionic: {} (generic rank {})",
            d.holds, d.generic_rank
        );
        if !d.holds {
            let _ = writeln!(s, "  fails at {}", opt(&d.witness));
        }
        if let Some(locus) = &d.locus {
            let _ = writeln!(s, "  rank-drop locus: {locus}");
        }
        if let Some(st) = &self.splitting_type {
            let _ = writeln!(s, "splitting type: {}", st.text);
        }
        if let Some(dec) = &self.decomposition {
            let w: Vec<String> = dec.w.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "decomposition: {}", tags_text(&dec.tags));
            let _ = writeln!(s, "  dim W_n: {}", w.join(", "));
        }
        let f = &self.filtration;
        let _ = writeln!(
            s,
            "dim W1 = {}, dim W2 = {}, dim E_U = {}, dim E^U = {}, dim iU∩jU∩kU = {}",
            f.w1, f.w2, f.e_lower, f.e_upper, f.triple_intersection
        );
        match &self.f_certificate {
            None => {
                let _ = writeln!(s, "f-quaternionic: no");
            }
            Some(c) => {
                let _ = writeln!(
                    s,
                    "f-quaternionic: yes (l = {}, dim W = {}, dim core = {})",
                    c.l, c.w_dim, c.core_dim
                );
                if let Some(t) = c.images_triple_test {
                    let _ = writeln!(s, "  images of E^i, E^j, E^k meet trivially: {t}");
                }
                matrix_text(&mut s, "  V", &c.v_basis);
            }
        }
        if let Some(w) = &self.full_witness {
            let _ = writeln!(s, "full witness at {} after {} points", w.point, w.attempts);
            let _ = writeln!(s, "  u = [{}]", w.u.join(", "));
            let _ = writeln!(s, "  v = [{}]", w.v.join(", "));
        }
        s
    }
}

impl Render for ClassifyReport {
    fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "k = {}, l = {}, dim U = {}: {} classes",
            self.k, self.l, self.dim_u, self.count
        );
        for c in &self.classes {
            let _ = writeln!(
                s,
                "  {}  (CR: {}; {})",
                c.splitting_type.text,
                c.cr_splitting_type.text,
                tags_text(&c.cr_tags)
            );
        }
        s
    }
}

impl Render for MapReport {
    fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} map: lift found: {}", self.kind, self.lift_found);
        if let Some(u) = self.unique {
            let _ = writeln!(s, "unique: {u}");
        }
        if let Some(m) = &self.lift {
            matrix_text(&mut s, "lift", m);
        }
        s
    }
}

impl Render for SemidirectReport {
    fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "semidirect product in H^{} onto dim {}",
            self.k, self.dim_u
        );
        let _ = writeln!(s, "splitting type: {}", self.splitting_type.text);
        let _ = writeln!(
            s,
            "direct sum would be: {}",
            self.direct_sum_splitting_type.text
        );
        let _ = writeln!(s, "direct: {}", self.direct);
        if let Some(phi) = &self.phi {
            matrix_text(&mut s, "phi", phi);
        }
        s
    }
}
