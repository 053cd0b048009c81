//! Python bindings: the bounding functions over Python ints, and a `Module`
//! class that computes the cohomological profile of an input document and
//! runs the verifier on it.
//!
//! Infinite invariants come back as `float("inf")` / `float("-inf")`, every
//! finite one as a Python `int`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ::cmreg::bounds::{self, BoundError, DiagonalVector, HilbertCoefficients};
use ::cmreg::cli::report;
use ::cmreg::cli::{AnyInput, FieldSpec, InputDocument, ModuleSpec};
use ::cmreg::homology::CohomologyProfile;
use ::cmreg::kernel::{Field, PrimeField, Rationals};
use ::cmreg::verify::{self, BoundCheck, CheckGroup, Outcome, VerifyInput, VerifyOptions};
use ::cmreg::{ExtBig, ExtInt, Extended};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bound_err(e: BoundError) -> PyErr {
    value_err(e)
}

fn ext_big_py(py: Python<'_>, v: &ExtBig) -> PyResult<Py<PyAny>> {
    Ok(match v {
        Extended::NegInf => f64::NEG_INFINITY.into_pyobject(py)?.into_any().unbind(),
        Extended::PosInf => f64::INFINITY.into_pyobject(py)?.into_any().unbind(),
        Extended::Finite(b) => b.into_pyobject(py)?.into_any().unbind(),
    })
}

fn ext_py(py: Python<'_>, v: &ExtInt) -> PyResult<Py<PyAny>> {
    ext_big_py(py, &v.to_big())
}

#[pyfunction]
#[pyo3(signature = (i, x, y = BigInt::from(0)))]
fn eval_f(i: i64, x: Vec<BigInt>, y: BigInt) -> PyResult<BigInt> {
    let diag = DiagonalVector::new(x, y).map_err(bound_err)?;
    bounds::eval_f(i, &diag).map_err(bound_err)
}

#[pyfunction]
fn eval_g(i: i64, d: i64, u: BigInt, v: BigInt, w: BigInt) -> PyResult<BigInt> {
    bounds::eval_g(i, d, &u, &v, &w).map_err(bound_err)
}

#[pyfunction]
fn eval_e(i: i64, x: Vec<BigInt>) -> PyResult<BigInt> {
    bounds::eval_e(i, &x).map_err(bound_err)
}

#[pyfunction]
#[pyo3(signature = (m, e, lam = BigInt::from(1)))]
fn eval_h(m: BigInt, e: Vec<BigInt>, lam: BigInt) -> PyResult<BigInt> {
    bounds::eval_h(&m, &lam, &HilbertCoefficients::new(e)).map_err(bound_err)
}

#[pyfunction]
fn lemma33_bound(i: i64, n: i64, x: Vec<BigInt>) -> PyResult<BigInt> {
    bounds::lemma33_bound(i, n, &x).map_err(bound_err)
}

#[pyfunction]
fn diagonal_cohomology_bound(i: i64, n: i64, x: Vec<BigInt>) -> PyResult<BigInt> {
    bounds::diagonal_cohomology_bound(i, n, &x).map_err(bound_err)
}

#[pyfunction]
#[pyo3(signature = (i, d, m, r, lam = BigInt::from(1)))]
fn gamma_ideal_bound(i: i64, d: i64, m: BigInt, r: BigInt, lam: BigInt) -> PyResult<BigInt> {
    bounds::gamma_ideal_bound(i, d, &m, &r, &lam).map_err(bound_err)
}

/// Returns `(rho, pi, delta)`.
#[pyfunction]
#[pyo3(signature = (i, d, m, b, r, lam = BigInt::from(1)))]
fn submodule_gendeg_bound(i: i64, d: i64, m: BigInt, b: BigInt, r: BigInt, lam: BigInt) -> PyResult<(BigInt, BigInt, BigInt)> {
    let res = bounds::submodule_gendeg_bound(i, d, &m, &lam, &b, &r).map_err(bound_err)?;
    Ok((res.rho, res.pi, res.delta))
}

/// Returns `(r, gamma)`.
#[pyfunction]
#[pyo3(signature = (i, d, g, lam = BigInt::from(1)))]
fn ideal_gendeg_bound(i: i64, d: i64, g: BigInt, lam: BigInt) -> PyResult<(BigInt, BigInt)> {
    bounds::ideal_gendeg_bound(i, d, &g, &lam).map_err(bound_err)
}

/// Returns `(t, reg1_offset, reg2_offset)`.
#[pyfunction]
#[pyo3(signature = (m, d, h, e, lam = BigInt::from(1)))]
fn mumford_t(m: BigInt, d: i64, h: i64, e: Vec<BigInt>, lam: BigInt) -> PyResult<(BigInt, BigInt, BigInt)> {
    let res = bounds::mumford_t(&m, d, &lam, h, &HilbertCoefficients::new(e)).map_err(bound_err)?;
    Ok((res.t, res.reg1_offset, res.reg2_offset))
}

#[pyfunction]
fn ideal_mumford_bound(i: i64, d: i64, t: BigInt) -> PyResult<BigInt> {
    bounds::ideal_mumford_bound(i, d, &t).map_err(bound_err)
}

/// One verified inequality.
#[pyclass(name = "Check", module = "cmreg", frozen)]
struct PyCheck {
    #[pyo3(get)]
    id: String,
    #[pyo3(get)]
    statement: String,
    #[pyo3(get)]
    lhs_name: String,
    #[pyo3(get)]
    rhs_name: String,
    #[pyo3(get)]
    direction: String,
    #[pyo3(get)]
    passed: bool,
    /// The reason when the check was skipped.
    #[pyo3(get)]
    skipped: Option<String>,
    lhs_ext: Option<ExtBig>,
    rhs_ext: Option<ExtBig>,
    margin_ext: Option<ExtBig>,
}

fn opt_py(py: Python<'_>, v: &Option<ExtBig>) -> PyResult<Option<Py<PyAny>>> {
    v.as_ref().map(|x| ext_big_py(py, x)).transpose()
}

#[pymethods]
impl PyCheck {
    #[getter]
    fn lhs(&self, py: Python<'_>) -> PyResult<Option<Py<PyAny>>> {
        opt_py(py, &self.lhs_ext)
    }

    #[getter]
    fn rhs(&self, py: Python<'_>) -> PyResult<Option<Py<PyAny>>> {
        opt_py(py, &self.rhs_ext)
    }

    #[getter]
    fn margin(&self, py: Python<'_>) -> PyResult<Option<Py<PyAny>>> {
        opt_py(py, &self.margin_ext)
    }

    #[getter]
    fn failed(&self) -> bool {
        !self.passed && self.skipped.is_none()
    }

    fn __repr__(&self) -> String {
        let show = |v: &Option<ExtBig>| v.as_ref().map_or("-".to_string(), ToString::to_string);
        let status = match (&self.skipped, self.passed) {
            (Some(why), _) => format!("skipped: {why}"),
            (None, true) => "pass".into(),
            (None, false) => "FAIL".into(),
        };
        format!(
            "Check({} : {} {} {}, {status})",
            self.id,
            show(&self.lhs_ext),
            self.direction,
            show(&self.rhs_ext)
        )
    }
}

impl From<&BoundCheck> for PyCheck {
    fn from(c: &BoundCheck) -> Self {
        PyCheck {
            id: c.id.clone(),
            statement: c.statement.clone(),
            lhs_name: c.lhs_name.clone(),
            rhs_name: c.rhs_name.clone(),
            direction: c.direction.symbol().to_string(),
            passed: c.outcome == Outcome::Pass,
            skipped: match &c.outcome {
                Outcome::Skipped(why) => Some(why.clone()),
                _ => None,
            },
            lhs_ext: c.lhs.clone(),
            rhs_ext: c.rhs.clone(),
            margin_ext: c.margin(),
        }
    }
}

#[derive(Clone)]
enum Computed {
    Q(VerifyInput<Rationals>, CohomologyProfile<Rationals>),
    GF(VerifyInput<PrimeField>, CohomologyProfile<PrimeField>),
}

macro_rules! with_profile {
    ($self:expr, |$input:ident, $p:ident| $body:expr) => {
        match &$self.computed {
            Computed::Q($input, $p) => $body,
            Computed::GF($input, $p) => $body,
        }
    };
}

/// A graded module over `k[x_1..x_n]` together with its cohomological
/// profile, computed once at construction.
#[pyclass(name = "Module", module = "cmreg", frozen)]
struct PyModuleData {
    doc: InputDocument,
    opts: VerifyOptions,
    computed: Computed,
}

fn compute<F: Field>(input: VerifyInput<F>) -> PyResult<(VerifyInput<F>, CohomologyProfile<F>)> {
    let p = CohomologyProfile::new(&input.ring, &input.module).map_err(value_err)?;
    Ok((input, p))
}

fn run_verify<F: Field>(
    doc: &InputDocument,
    input: &VerifyInput<F>,
    p: &CohomologyProfile<F>,
    groups: &[CheckGroup],
    opts: &VerifyOptions,
) -> PyResult<PyReport> {
    let r = verify::verify_profile(input, p.clone(), groups, opts).map_err(value_err)?;
    let meta = report::Meta { field: input.ring.field().describe(), wall_time_ms: None };
    let json = serde_json::to_string_pretty(&report::verify_json(doc, &r, &meta)).map_err(value_err)?;
    Ok(PyReport {
        checks: r.checks.iter().map(PyCheck::from).collect(),
        filter_regular: r.filter_regular.clone().and_then(Result::ok),
        json,
    })
}

#[pymethods]
impl PyModuleData {
    /// `document` is an input document in JSON or the one-line ideal
    /// shorthand, e.g. `"Q[x,y] (x^2, x*y)"`.
    #[new]
    fn new(document: &str) -> PyResult<Self> {
        let doc = InputDocument::parse(document).map_err(value_err)?;
        Self::from_doc(doc)
    }

    /// `R/a` for the ideal `a` generated by `gens`; `prime = None` means Q.
    #[staticmethod]
    #[pyo3(signature = (vars, gens, prime = None, as_module = false))]
    fn ideal(vars: Vec<String>, gens: Vec<String>, prime: Option<u64>, as_module: bool) -> PyResult<Self> {
        let doc = InputDocument {
            field: prime.map_or(FieldSpec::Q, FieldSpec::GF),
            vars,
            module: if as_module { ModuleSpec::IdealAsModule(gens) } else { ModuleSpec::Ideal(gens) },
            ambient: None,
            submodule: None,
            caps: None,
        };
        Self::from_doc(doc)
    }

    #[getter]
    fn document(&self) -> String {
        self.doc.to_json()
    }

    #[getter]
    fn field(&self) -> String {
        with_profile!(self, |input, _p| input.ring.field().describe())
    }

    #[getter]
    fn nvars(&self) -> usize {
        with_profile!(self, |_i, p| p.nvars())
    }

    #[getter]
    fn dim(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        with_profile!(self, |_i, p| ext_py(py, &p.dim))
    }

    #[getter]
    fn depth(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        with_profile!(self, |_i, p| ext_py(py, &p.depth))
    }

    #[getter]
    fn beg(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        with_profile!(self, |_i, p| ext_py(py, &p.beg))
    }

    #[getter]
    fn gendeg(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        with_profile!(self, |_i, p| ext_py(py, &p.gendeg))
    }

    #[getter]
    fn reg(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        with_profile!(self, |_i, p| ext_py(py, &p.reg))
    }

    #[getter]
    fn postulation(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        with_profile!(self, |_i, p| ext_py(py, &p.postulation))
    }

    /// `(d^0(0), d^1(-1), ..)`.
    #[getter]
    fn diagonal(&self) -> Vec<BigInt> {
        with_profile!(self, |_i, p| p.diagonal.clone())
    }

    #[getter]
    fn hilbert_poly(&self) -> String {
        with_profile!(self, |_i, p| p.hilbert_poly.to_string())
    }

    /// `[(i, j, beta_ij), ..]`.
    #[getter]
    fn betti(&self) -> Vec<(usize, i64, u64)> {
        with_profile!(self, |_i, p| p.module().betti().entries().collect())
    }

    /// `a_i = end of H^i`, `0 <= i <= n`.
    fn a(&self, py: Python<'_>, i: usize) -> PyResult<Py<PyAny>> {
        with_profile!(self, |_i, p| match p.a.get(i) {
            Some(v) => ext_py(py, v),
            None => Err(value_err(format!("i = {i} outside 0..={}", p.nvars()))),
        })
    }

    /// `reg^k = max{a_i + i : i >= k}`.
    fn reg_from(&self, py: Python<'_>, k: usize) -> PyResult<Py<PyAny>> {
        with_profile!(self, |_i, p| ext_py(py, &p.reg_from(k)))
    }

    /// Regularity of the deficiency module `K^i`.
    fn deficiency_reg(&self, py: Python<'_>, i: usize) -> PyResult<Py<PyAny>> {
        with_profile!(self, |_i, p| match p.deficiency_modules().get(i) {
            Some(k) => ext_py(py, &k.regularity()),
            None => Err(value_err(format!("i = {i} outside 0..={}", p.nvars()))),
        })
    }

    fn hilbert_function(&self, n: i64) -> BigInt {
        with_profile!(self, |_i, p| p.hilbert_function(n))
    }

    fn h(&self, i: usize, n: i64) -> BigInt {
        with_profile!(self, |_i, p| p.h(i, n))
    }

    fn d(&self, i: usize, n: i64) -> BigInt {
        with_profile!(self, |_i, p| p.d(i, n))
    }

    /// The profile as a JSON string.
    fn profile_json(&self) -> PyResult<String> {
        let v = with_profile!(self, |_i, p| report::profile_json(p));
        serde_json::to_string_pretty(&v).map_err(value_err)
    }

    /// Runs the selected check groups (`"all"` or a comma list).
    #[pyo3(signature = (checks = "all", window = None))]
    fn verify(&self, checks: &str, window: Option<(i64, i64)>) -> PyResult<PyReport> {
        let groups = CheckGroup::parse_list(checks).map_err(value_err)?;
        let mut opts = self.opts.clone();
        if window.is_some() {
            opts.window = window;
        }
        with_profile!(self, |input, p| run_verify(&self.doc, input, p, &groups, &opts))
    }

    fn __repr__(&self) -> String {
        let json = serde_json::to_string(&self.doc).unwrap_or_default();
        format!("Module({json})")
    }
}

impl PyModuleData {
    fn from_doc(doc: InputDocument) -> PyResult<Self> {
        let opts = doc.options().map_err(value_err)?;
        let computed = match doc.build().map_err(value_err)? {
            AnyInput::Q(i) => {
                let (i, p) = compute(i)?;
                Computed::Q(i, p)
            }
            AnyInput::GF(i) => {
                let (i, p) = compute(i)?;
                Computed::GF(i, p)
            }
        };
        Ok(PyModuleData { doc, opts, computed })
    }
}

/// The result of `Module.verify`.
#[pyclass(name = "Report", module = "cmreg", frozen)]
struct PyReport {
    checks: Vec<PyCheck>,
    filter_regular: Option<String>,
    json: String,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn all_passed(&self) -> bool {
        !self.checks.iter().any(PyCheck::failed)
    }

    /// Ids of the failed checks.
    #[getter]
    fn failures(&self) -> Vec<String> {
        self.checks.iter().filter(|c| c.failed()).map(|c| c.id.clone()).collect()
    }

    #[getter]
    fn checks(&self, py: Python<'_>) -> PyResult<Vec<Py<PyCheck>>> {
        self.checks
            .iter()
            .map(|c| {
                Py::new(
                    py,
                    PyCheck {
                        id: c.id.clone(),
                        statement: c.statement.clone(),
                        lhs_name: c.lhs_name.clone(),
                        rhs_name: c.rhs_name.clone(),
                        direction: c.direction.clone(),
                        passed: c.passed,
                        skipped: c.skipped.clone(),
                        lhs_ext: c.lhs_ext.clone(),
                        rhs_ext: c.rhs_ext.clone(),
                        margin_ext: c.margin_ext.clone(),
                    },
                )
            })
            .collect()
    }

    #[getter]
    fn filter_regular(&self) -> Option<String> {
        self.filter_regular.clone()
    }

    fn to_json(&self) -> String {
        self.json.clone()
    }

    /// `{id: margin}` for the checks that were evaluated.
    fn margins<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for c in &self.checks {
            if let Some(m) = &c.margin_ext {
                d.set_item(&c.id, ext_big_py(py, m)?)?;
            }
        }
        Ok(d)
    }

    fn __len__(&self) -> usize {
        self.checks.len()
    }
}

/// Every check group id, in canonical order.
#[pyfunction]
fn check_groups() -> Vec<&'static str> {
    CheckGroup::ALL.iter().map(|g| g.id()).collect()
}

#[pymodule]
#[pyo3(name = "cmreg")]
pub fn cmreg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(eval_f, m)?)?;
    m.add_function(wrap_pyfunction!(eval_g, m)?)?;
    m.add_function(wrap_pyfunction!(eval_e, m)?)?;
    m.add_function(wrap_pyfunction!(eval_h, m)?)?;
    m.add_function(wrap_pyfunction!(lemma33_bound, m)?)?;
    m.add_function(wrap_pyfunction!(diagonal_cohomology_bound, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_ideal_bound, m)?)?;
    m.add_function(wrap_pyfunction!(submodule_gendeg_bound, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_gendeg_bound, m)?)?;
    m.add_function(wrap_pyfunction!(mumford_t, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_mumford_bound, m)?)?;
    m.add_function(wrap_pyfunction!(check_groups, m)?)?;
    m.add_class::<PyModuleData>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyCheck>()?;
    Ok(())
}
