//! Command implementations behind the `crq` binary. Each command takes
//! parsed documents and returns a serializable report.

pub mod doc;
pub mod report;

use std::time::Instant;

use crq_core::arith::Rat;
use crq_core::crq::*;
use crq_core::maps::{
    direct_sum_cocr, is_direct, lift_cocr_map, lift_cr_map, lift_f_map, semidirect as assemble,
    LinMap, SemidirectData, Twist,
};
use crq_core::{CrqError, Result};

use doc::{
    matrix_strings, parse_matrix, rat_strings, InputDocument, MapDocument, MapKind,
    SemidirectDocument,
};
use report::*;

/// 0 ok, 2 parse, 3 contract, 4 invariant breach.
pub fn exit_code(e: &CrqError) -> i32 {
    match e {
        CrqError::Parse(_) | CrqError::AmbientMismatch { .. } | CrqError::DependentBasis { .. } => {
            2
        }
        CrqError::InvariantBreach(_) => 4,
        CrqError::NotContained
        | CrqError::StructurallyImpossible(_)
        | CrqError::Contract(_)
        | CrqError::BudgetExhausted { .. }
        | CrqError::UnknownExample(_) => 3,
    }
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros().try_into().unwrap_or(u64::MAX)
}

fn filtration(cr: &CrInput) -> FiltrationReport {
    let (u, k) = (cr.u(), cr.k());
    FiltrationReport {
        w1: filtration_w1(cr).dim(),
        w2: filtration_w2(cr).dim(),
        e_lower: e_lower(u, k).dim(),
        e_upper: e_upper(u, k).dim(),
        triple_intersection: triple_intersection(u, k).dim(),
    }
}

fn certificate(cert: &FCert, images: Option<bool>) -> CertificateReport {
    CertificateReport {
        l: cert.l(),
        v_basis: matrix_strings(cert.v.basis()),
        w_dim: cert.w.dim(),
        core_dim: cert.core.dim(),
        images_triple_test: images,
    }
}

pub fn analyze(
    input: &CrqInput,
    alpha: Option<&[Rat]>,
    budget: usize,
    source: &str,
) -> Result<AnalyzeReport> {
    let start = Instant::now();
    let (decision, cr) = match input {
        CrqInput::Cr(u) => (is_cr_quaternionic(u)?, u.clone()),
        CrqInput::Cocr(c) => (is_cocr_quaternionic(c)?, c.dual()),
    };
    let mut report = AnalyzeReport {
        source: source.to_string(),
        k: input.k(),
        role: input.role().as_str().into(),
        dim_u: cr.u().dim(),
        codim: cr.codim(),
        decision: DecisionReport::from(&decision),
        splitting_type: None,
        decomposition: None,
        filtration: filtration(&cr),
        f_certificate: None,
        full_witness: None,
        timing_us: 0,
    };
    if decision.holds {
        let st = match input {
            CrqInput::Cr(u) => splitting_type_cr(u)?,
            CrqInput::Cocr(c) => splitting_type_cocr(c)?,
        };
        report.splitting_type = Some(SplittingReport::from(&st));
        if let CrqInput::Cr(u) = input {
            let dec = decompose_cr(u)?;
            report.decomposition = Some(DecompositionReport {
                tags: dec.tag_list().iter().map(|(t, c)| (t.name(), *c)).collect(),
                w: dec.filtration.clone(),
            });
        }
        if let Some(cert) = f_detect(&cr)? {
            let images = match input {
                CrqInput::Cocr(c) => Some(cocr_images_triple_test(c)?),
                CrqInput::Cr(_) => None,
            };
            report.f_certificate = Some(certificate(&cert, images));
        }
    }
    if let Some(alpha) = alpha {
        let CrqInput::Cr(u) = input else {
            return Err(CrqError::Contract(
                "alpha is only accepted with role cr".into(),
            ));
        };
        if !decision.holds {
            return Err(CrqError::Contract(
                "full witness needs a CR quaternionic input".into(),
            ));
        }
        let w = full_witness(u, alpha, budget)?;
        report.full_witness = Some(WitnessReport {
            point: w.point.to_string(),
            u: rat_strings(&w.u),
            v: rat_strings(&w.v),
            attempts: w.attempts,
        });
    }
    report.timing_us = micros(start);
    Ok(report)
}

/// Parses and analyzes one document.
pub fn analyze_document(
    doc: &InputDocument,
    role: Option<Role>,
    budget: usize,
    source: &str,
) -> Result<AnalyzeReport> {
    let input = doc.to_input(role)?;
    if doc.alpha.is_some() && input.role() != Role::Cr {
        return Err(CrqError::Contract(
            "alpha is only accepted with role cr".into(),
        ));
    }
    let alpha = doc.parsed_alpha(input.subspace().dim())?;
    analyze(&input, alpha.as_deref(), budget, source)
}

pub fn example_document(name: &str, k: Option<usize>, l: Option<usize>) -> Result<InputDocument> {
    Ok(InputDocument::from_cr(&named_example(name, k, l)?))
}

pub fn classify(k: usize, l: usize) -> Result<ClassifyReport> {
    let start = Instant::now();
    let classes = enumerate_splitting_types(k, l)?
        .iter()
        .map(|s| {
            let cr = s.negate();
            let tags = CrDecomposition::from_splitting(&cr)?
                .tag_list()
                .iter()
                .map(|(t, c)| (t.name(), *c))
                .collect();
            Ok(ClassReport {
                splitting_type: SplittingReport::from(s),
                cr_splitting_type: SplittingReport::from(&cr),
                cr_tags: tags,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassifyReport {
        k,
        l,
        dim_u: 4 * k - l,
        count: classes.len(),
        classes,
        timing_us: micros(start),
    })
}

fn require(holds: bool, what: &str) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(CrqError::Contract(format!("{what} is not quaternionic")))
    }
}

fn require_cert(inp: &CrInput, what: &str) -> Result<FCert> {
    f_detect(inp)?.ok_or_else(|| CrqError::Contract(format!("{what} is not f-quaternionic")))
}

pub fn map(doc: &MapDocument) -> Result<MapReport> {
    let start = Instant::now();
    let twist = doc
        .twist
        .as_ref()
        .map(|t| t.to_twist())
        .transpose()?
        .unwrap_or(Twist::Identity);
    let parse_t = |rows: usize, cols: usize| parse_matrix(&doc.t, rows, cols, "t").map(LinMap::new);
    let (kind, lift) = match doc.kind {
        MapKind::Cr | MapKind::F => {
            doc.src.expect_role(Role::Cr, "src")?;
            doc.dst.expect_role(Role::Cr, "dst")?;
            let (src, dst) = (doc.src.to_cr()?, doc.dst.to_cr()?);
            require(is_cr_quaternionic(&src)?.holds, "src")?;
            require(is_cr_quaternionic(&dst)?.holds, "dst")?;
            let t = parse_t(dst.u().dim(), src.u().dim())?;
            if doc.kind == MapKind::Cr {
                ("cr", lift_cr_map(&t, &src, &dst, &twist)?)
            } else {
                let (cs, cd) = (require_cert(&src, "src")?, require_cert(&dst, "dst")?);
                ("f", lift_f_map(&t, &cs, &cd, &twist)?)
            }
        }
        MapKind::Cocr => {
            doc.src.expect_role(Role::Cocr, "src")?;
            doc.dst.expect_role(Role::Cocr, "dst")?;
            let (src, dst) = (doc.src.to_cocr()?, doc.dst.to_cocr()?);
            require(is_cocr_quaternionic(&src)?.holds, "src")?;
            require(is_cocr_quaternionic(&dst)?.holds, "dst")?;
            let t = parse_t(dst.target_dim(), src.target_dim())?;
            ("cocr", lift_cocr_map(&t, &src, &dst, &twist)?)
        }
    };
    Ok(MapReport {
        kind: kind.into(),
        lift_found: lift.is_some(),
        unique: lift.as_ref().map(|l| l.unique),
        lift: lift.as_ref().map(|l| matrix_strings(&l.map)),
        timing_us: micros(start),
    })
}

pub fn semidirect_data(doc: &SemidirectDocument) -> Result<SemidirectData> {
    doc.first.expect_role(Role::Cocr, "first")?;
    doc.second.expect_role(Role::Cocr, "second")?;
    let (first, second) = (doc.first.to_cocr()?, doc.second.to_cocr()?);
    require(is_cocr_quaternionic(&first)?.holds, "first")?;
    require(is_cocr_quaternionic(&second)?.holds, "second")?;
    let alpha = parse_matrix(&doc.alpha, second.target_dim(), 4 * first.k(), "alpha")?;
    SemidirectData::new(first, second, alpha)
}

pub fn semidirect(doc: &SemidirectDocument) -> Result<SemidirectReport> {
    let start = Instant::now();
    let data = semidirect_data(doc)?;
    let prod = assemble(&data)?;
    let st = splitting_type_cocr(&prod)?;
    let sum = splitting_type_cocr(&direct_sum_cocr(&data.first, &data.second)?)?;
    let d = is_direct(&data)?;
    if d.direct && st != sum {
        return Err(CrqError::InvariantBreach(format!(
            "direct semidirect product has splitting type {st}, direct sum has {sum}"
        )));
    }
    Ok(SemidirectReport {
        k: prod.k(),
        dim_u: prod.target_dim(),
        splitting_type: SplittingReport::from(&st),
        direct_sum_splitting_type: SplittingReport::from(&sum),
        direct: d.direct,
        phi: d.phi.as_ref().map(matrix_strings),
        psi: d.psi.as_ref().map(matrix_strings),
        timing_us: micros(start),
    })
}
