//! Python module `crq`.
//!
//! Rationals go in as anything whose `str()` parses (`int`, `Fraction`,
//! `"3/4"`) and come out as strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use crq_cli::doc::{matrix_strings, InputDocument};
use crq_cli::report::AnalyzeReport;
use crq_core::arith::{format_rat, parse_rat, Mat, Rat};
use crq_core::crq as core;
use crq_core::maps::{self, LinMap, SemidirectData, Twist};

pyo3::create_exception!(crq, CrqError, PyValueError);

fn err(e: crq_core::CrqError) -> PyErr {
    CrqError::new_err(e.to_string())
}

fn rat(obj: &Bound<'_, PyAny>) -> PyResult<Rat> {
    let s = obj.str()?.to_string();
    parse_rat(&s).map_err(|_| CrqError::new_err(format!("invalid rational {s:?}")))
}

fn rows(obj: &Bound<'_, PyAny>) -> PyResult<Vec<Vec<Rat>>> {
    obj.try_iter()?
        .map(|row| row?.try_iter()?.map(|x| rat(&x?)).collect())
        .collect()
}

fn matrix(obj: &Bound<'_, PyAny>, ncols: usize) -> PyResult<Mat<Rat>> {
    let r = rows(obj)?;
    if r.iter().any(|row| row.len() != ncols) {
        return Err(CrqError::new_err(format!(
            "every row needs {ncols} entries"
        )));
    }
    Ok(Mat::from_rows(ncols, r))
}

fn json_to_py<'py>(py: Python<'py>, v: &AnalyzeReport) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).expect("reports serialize");
    py.import("json")?.call_method1("loads", (text,))
}

/// A subspace `U ⊂ H^k`, coordinates `(1, i, j, k)` per factor.
#[pyclass(module = "crq", name = "CrSpace", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCr {
    inner: core::CrInput,
}

/// A co-CR space `ρ: H^k → U`, given by `ker ρ`.
#[pyclass(module = "crq", name = "CocrSpace", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCocr {
    inner: core::CocrInput,
}

#[pymethods]
impl PyCr {
    #[new]
    fn new(k: usize, basis: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = core::CrInput::from_basis(k, rows(basis)?).map_err(err)?;
        Ok(PyCr { inner })
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.u().dim()
    }

    #[getter]
    fn codim(&self) -> usize {
        self.inner.codim()
    }

    /// Canonical (reduced row echelon) basis.
    fn basis(&self) -> Vec<Vec<String>> {
        matrix_strings(self.inner.u().basis())
    }

    fn dual(&self) -> PyCocr {
        PyCocr {
            inner: self.inner.dual(),
        }
    }

    fn is_quaternionic(&self) -> PyResult<bool> {
        match core::is_cr_quaternionic(&self.inner) {
            Ok(d) => Ok(d.holds),
            Err(crq_core::CrqError::StructurallyImpossible(_)) => Ok(false),
            Err(e) => Err(err(e)),
        }
    }

    /// `[(degree, multiplicity), …]`.
    fn splitting_type(&self) -> PyResult<Vec<(i64, usize)>> {
        Ok(core::splitting_type_cr(&self.inner).map_err(err)?.parts())
    }

    fn decomposition(&self) -> PyResult<Vec<(String, usize)>> {
        let d = core::decompose_cr(&self.inner).map_err(err)?;
        Ok(d.tag_list().iter().map(|(t, c)| (t.name(), *c)).collect())
    }

    /// Basis of a complement `V` with `U = Q(V) ⊕ W`, or `None`.
    fn f_complement(&self) -> PyResult<Option<Vec<Vec<String>>>> {
        let cert = core::f_detect(&self.inner).map_err(err)?;
        Ok(cert.map(|c| matrix_strings(c.v.basis())))
    }

    /// The full report of `crq analyze`, as a dict.
    #[pyo3(signature = (alpha=None, budget=core::DEFAULT_BUDGET))]
    fn analyze<'py>(
        &self,
        py: Python<'py>,
        alpha: Option<&Bound<'py, PyAny>>,
        budget: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let alpha = alpha
            .map(|a| {
                a.try_iter()?
                    .map(|x| rat(&x?))
                    .collect::<PyResult<Vec<_>>>()
            })
            .transpose()?;
        let input = core::CrqInput::Cr(self.inner.clone());
        let report = crq_cli::analyze(&input, alpha.as_deref(), budget, "python").map_err(err)?;
        json_to_py(py, &report)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&InputDocument::from_cr(&self.inner)).expect("documents serialize")
    }

    fn __repr__(&self) -> String {
        format!(
            "CrSpace(k={}, dim={})",
            self.inner.k(),
            self.inner.u().dim()
        )
    }
}

#[pymethods]
impl PyCocr {
    #[new]
    fn new(k: usize, kernel: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = core::CocrInput::from_kernel_basis(k, rows(kernel)?).map_err(err)?;
        Ok(PyCocr { inner })
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    /// `dim ker ρ`.
    #[getter]
    fn l(&self) -> usize {
        self.inner.l()
    }

    fn kernel(&self) -> Vec<Vec<String>> {
        matrix_strings(self.inner.kernel().basis())
    }

    fn rho(&self) -> Vec<Vec<String>> {
        matrix_strings(self.inner.rho())
    }

    fn dual(&self) -> PyCr {
        PyCr {
            inner: self.inner.dual(),
        }
    }

    fn is_quaternionic(&self) -> PyResult<bool> {
        match core::is_cocr_quaternionic(&self.inner) {
            Ok(d) => Ok(d.holds),
            Err(crq_core::CrqError::StructurallyImpossible(_)) => Ok(false),
            Err(e) => Err(err(e)),
        }
    }

    fn splitting_type(&self) -> PyResult<Vec<(i64, usize)>> {
        Ok(core::splitting_type_cocr(&self.inner).map_err(err)?.parts())
    }

    fn direct_sum(&self, other: &PyCocr) -> PyResult<PyCocr> {
        let inner = maps::direct_sum_cocr(&self.inner, &other.inner).map_err(err)?;
        Ok(PyCocr { inner })
    }

    fn __repr__(&self) -> String {
        format!("CocrSpace(k={}, l={})", self.inner.k(), self.inner.l())
    }
}

#[pyfunction]
#[pyo3(signature = (name, k=None, l=None))]
fn example(name: &str, k: Option<usize>, l: Option<usize>) -> PyResult<PyCr> {
    Ok(PyCr {
        inner: core::named_example(name, k, l).map_err(err)?,
    })
}

/// Splitting types of co-CR spaces with `dim E = 4k`, `dim ker ρ = l`.
#[pyfunction]
fn classify(k: usize, l: usize) -> PyResult<Vec<Vec<(i64, usize)>>> {
    let all = core::enumerate_splitting_types(k, l).map_err(err)?;
    Ok(all.iter().map(|s| s.parts()).collect())
}

/// Lift of `t: U → U′` (rows in canonical coordinates) to `H^k → H^k′`.
#[pyfunction]
#[pyo3(signature = (t, src, dst, conjugation=None))]
fn lift_cr_map(
    t: &Bound<'_, PyAny>,
    src: &PyCr,
    dst: &PyCr,
    conjugation: Option<&Bound<'_, PyAny>>,
) -> PyResult<Option<(Vec<Vec<String>>, bool)>> {
    let t = LinMap::new(matrix(t, src.inner.u().dim())?);
    let twist = match conjugation {
        None => Twist::Identity,
        Some(q) => {
            let c = q
                .try_iter()?
                .map(|x| rat(&x?))
                .collect::<PyResult<Vec<_>>>()?;
            if c.len() != 4 {
                return Err(CrqError::new_err("conjugation needs 4 coordinates"));
            }
            Twist::conjugation(crq_core::arith::Quat::from_coords(&c)).map_err(err)?
        }
    };
    let lift = maps::lift_cr_map(&t, &src.inner, &dst.inner, &twist).map_err(err)?;
    Ok(lift.map(|l| (matrix_strings(&l.map), l.unique)))
}

/// `(splitting type, direct)` of the semidirect product of two co-CR
/// spaces along `α: E′ → U″`.
#[pyfunction]
fn semidirect(
    first: &PyCocr,
    second: &PyCocr,
    alpha: &Bound<'_, PyAny>,
) -> PyResult<(Vec<(i64, usize)>, bool)> {
    let alpha = matrix(alpha, 4 * first.inner.k())?;
    let data =
        SemidirectData::new(first.inner.clone(), second.inner.clone(), alpha).map_err(err)?;
    let prod = maps::semidirect(&data).map_err(err)?;
    let st = core::splitting_type_cocr(&prod).map_err(err)?;
    let direct = maps::is_direct(&data).map_err(err)?.direct;
    Ok((st.parts(), direct))
}

#[pyfunction]
fn normalize_rational(x: &Bound<'_, PyAny>) -> PyResult<String> {
    Ok(format_rat(&rat(x)?))
}

#[pymodule]
fn crq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CrqError", m.py().get_type::<CrqError>())?;
    m.add_class::<PyCr>()?;
    m.add_class::<PyCocr>()?;
    m.add_function(wrap_pyfunction!(example, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(lift_cr_map, m)?)?;
    m.add_function(wrap_pyfunction!(semidirect, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_rational, m)?)?;
    Ok(())
}
