//! Python bindings: `import neutro`.

use neutro_core::operators::{self as ops, OperatorSystem, OverflowReading};
use neutro_core::{
    self as core, AdjacencyKind, Components, ConceptMapping, FamilyKind, FamilySpec, LabeledSet, NeutroMatrix, Nn,
    OffsetBounds, Pair, RefinedComponents, RefinedFamilySpec, RefinedKind, ValidationReport,
};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: core::Error) -> PyErr {
    match e {
        core::Error::Undefined(_) | core::Error::Degenerate(_) => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait OrPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> OrPy<T> for core::Result<T> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(err)
    }
}

/// A `(t, i, f)` triple of degrees in `[0, 1]`.
#[pyclass(name = "Triplet", frozen, from_py_object)]
#[derive(Clone, Copy)]
struct PyTriplet(core::Triplet);

#[pymethods]
impl PyTriplet {
    #[new]
    fn new(t: f64, i: f64, f: f64) -> PyResult<Self> {
        core::Triplet::new(t, i, f).py_err().map(PyTriplet)
    }

    #[getter]
    fn t(&self) -> f64 {
        self.0.t()
    }

    #[getter]
    fn i(&self) -> f64 {
        self.0.i()
    }

    #[getter]
    fn f(&self) -> f64 {
        self.0.f()
    }

    fn to_list(&self) -> Vec<f64> {
        self.0.to_array().to_vec()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Triplet({}, {}, {})", self.0.t(), self.0.i(), self.0.f())
    }
}

/// `a + bI` with exact rational coefficients and `I^2 = I`.
#[pyclass(name = "NeutrosophicNumber", frozen, from_py_object)]
#[derive(Clone)]
struct PyNn(Nn);

#[pymethods]
impl PyNn {
    /// Parses forms like `2+I`, `-1/2+3I`, `5I`, `0.25`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse::<Nn>().py_err().map(PyNn)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyNn(core::nn_add(&self.0, &other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyNn(core::nn_mul(&self.0, &other.0))
    }

    fn __pow__(&self, n: i64, _modulo: Option<Py<PyAny>>) -> PyResult<Self> {
        core::nn_pow(&self.0, n).py_err().map(PyNn)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("NeutrosophicNumber('{}')", self.0)
    }
}

fn family(name: &str, exponent: Option<f64>) -> PyResult<FamilySpec> {
    let kind: FamilyKind = name.parse().py_err()?;
    match exponent {
        Some(e) => FamilySpec::with_exponent(kind, e),
        None => FamilySpec::new(kind),
    }
    .py_err()
}

fn system(name: &str, printed_numerator: bool) -> PyResult<OperatorSystem> {
    let sys = match name.to_ascii_lowercase().replace('_', "-").as_str() {
        "ns" => OperatorSystem::ns(),
        "ifs" => OperatorSystem::ifs(),
        "iifs-max-i" => OperatorSystem::iifs_max_i(),
        "iifs-min-i" => OperatorSystem::iifs_min_i(),
        other => return Err(PyValueError::new_err(format!("unknown operator system '{other}'"))),
    };
    Ok(if printed_numerator { sys.with_overflow(OverflowReading::PrintedNumerator) } else { sys })
}

fn report_dict<'py>(py: Python<'py>, r: &ValidationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("valid", r.valid)?;
    d.set_item("constraint_value", r.constraint_value)?;
    d.set_item("bound", r.bound)?;
    d.set_item("diagnostics", &r.diagnostics)?;
    Ok(d)
}

fn labeled(rows: Vec<[f64; 3]>, fam: FamilySpec) -> PyResult<LabeledSet> {
    let named = rows.into_iter().enumerate().map(|(k, r)| (format!("x{}", k + 1), r));
    LabeledSet::from_rows(named, fam).py_err()
}

fn rows(s: &LabeledSet) -> Vec<[f64; 3]> {
    s.components().iter().map(|x| x.to_array()).collect()
}

/// Checks `components` (2 or 3 values) against a family.
#[pyfunction]
#[pyo3(signature = (components, family_name, exponent=None))]
fn validate<'py>(
    py: Python<'py>,
    components: Vec<f64>,
    family_name: &str,
    exponent: Option<f64>,
) -> PyResult<Bound<'py, PyDict>> {
    let fam = family(family_name, exponent)?;
    let c = Components::from_slice(&components).py_err()?;
    report_dict(py, &core::validate(c, &fam).py_err()?)
}

#[pyfunction]
#[pyo3(signature = (t, f, family_name="PyFS", exponent=None))]
fn hesitancy(t: f64, f: f64, family_name: &str, exponent: Option<f64>) -> PyResult<f64> {
    let p = Pair::new(t, f).py_err()?;
    core::hesitancy(&p, &family(family_name, exponent)?).py_err().map(|u| u.get())
}

#[pyfunction]
#[pyo3(signature = (x, family_name="SFS", exponent=None))]
fn refusal(x: PyTriplet, family_name: &str, exponent: Option<f64>) -> PyResult<f64> {
    core::refusal(&x.0, &family(family_name, exponent)?).py_err().map(|u| u.get())
}

#[pyfunction]
#[pyo3(signature = (components, family_name, exponent=None))]
fn embed_into_ns(components: Vec<f64>, family_name: &str, exponent: Option<f64>) -> PyResult<PyTriplet> {
    let c = Components::from_slice(&components).py_err()?;
    core::embed_into_ns(c, &family(family_name, exponent)?).py_err().map(PyTriplet)
}

#[pyfunction]
#[pyo3(signature = (a, system_name="ns"))]
fn negate(a: PyTriplet, system_name: &str) -> PyResult<PyTriplet> {
    ops::negate(&a.0, &system(system_name, false)?).py_err().map(PyTriplet)
}

#[pyfunction]
#[pyo3(signature = (a, b, system_name="ns", printed_numerator=false))]
fn conjunct(a: PyTriplet, b: PyTriplet, system_name: &str, printed_numerator: bool) -> PyResult<PyTriplet> {
    ops::conjunct(&a.0, &b.0, &system(system_name, printed_numerator)?).py_err().map(PyTriplet)
}

#[pyfunction]
#[pyo3(signature = (a, b, system_name="ns", printed_numerator=false))]
fn disjunct(a: PyTriplet, b: PyTriplet, system_name: &str, printed_numerator: bool) -> PyResult<PyTriplet> {
    ops::disjunct(&a.0, &b.0, &system(system_name, printed_numerator)?).py_err().map(PyTriplet)
}

#[pyfunction]
#[pyo3(signature = (a, b, system_name="ns"))]
fn implicate(a: PyTriplet, b: PyTriplet, system_name: &str) -> PyResult<PyTriplet> {
    ops::implicate(&a.0, &b.0, &system(system_name, false)?).py_err().map(PyTriplet)
}

/// Returns `(rows, refusals, denominator)`.
#[pyfunction]
fn sup_transform(components: Vec<[f64; 3]>) -> PyResult<(Vec<[f64; 3]>, Vec<f64>, f64)> {
    let out = core::sup_transform(&labeled(components, FamilySpec::ns())?).py_err()?;
    Ok((rows(&out.set), out.refusals.iter().map(|r| r.get()).collect(), out.denominator))
}

#[pyfunction]
fn normalize(components: Vec<[f64; 3]>) -> PyResult<Vec<[f64; 3]>> {
    core::normalize_elementwise(&labeled(components, FamilySpec::ns())?).py_err().map(|s| rows(&s))
}

#[pyfunction]
fn paradox_check<'py>(py: Python<'py>, x: PyTriplet) -> PyResult<Bound<'py, PyDict>> {
    let r = core::paradox_check(&x.0).py_err()?;
    let d = PyDict::new(py);
    d.set_item("is_paradox", r.is_paradox)?;
    d.set_item("ns_valid", r.ns_valid)?;
    d.set_item("iifs_valid", r.iifs_valid)?;
    d.set_item("normalized", r.normalized.map(PyTriplet))?;
    d.set_item("normalized_is_paradox", r.normalized_is_paradox)?;
    Ok(d)
}

/// Returns `(estimate, std_error, analytic)`.
#[pyfunction]
#[pyo3(signature = (family_name, samples=100_000, seed=42, exponent=None))]
fn estimate_volume(family_name: &str, samples: u64, seed: u64, exponent: Option<f64>) -> PyResult<(f64, f64, Option<f64>)> {
    let e = core::estimate_family_volume(&family(family_name, exponent)?, samples, seed).py_err()?;
    Ok((e.estimate, e.std_error, e.analytic))
}

fn refined_family(name: &str, exponent: Option<f64>) -> PyResult<RefinedFamilySpec> {
    let kind: RefinedKind = name.parse().py_err()?;
    match exponent {
        Some(e) => RefinedFamilySpec::with_exponent(kind, e).py_err(),
        None => Ok(RefinedFamilySpec::new(kind)),
    }
}

#[pyfunction]
#[pyo3(signature = (ts, is_, fs, family_name, exponent=None))]
fn validate_refined<'py>(
    py: Python<'py>,
    ts: Vec<f64>,
    is_: Vec<f64>,
    fs: Vec<f64>,
    family_name: &str,
    exponent: Option<f64>,
) -> PyResult<Bound<'py, PyDict>> {
    let c = RefinedComponents::scalar(&ts, &is_, &fs).py_err()?;
    report_dict(py, &core::validate_refined(&c, &refined_family(family_name, exponent)?).py_err()?)
}

/// Splits a triplet into `(p, r, s)` equal sub-degrees; returns `(ts, is, fs)`.
#[pyfunction]
fn refine(x: PyTriplet, p: usize, r: usize, s: usize) -> PyResult<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let c = core::refine(&x.0, (p, r, s), None).py_err()?;
    let sups = |v: &[core::SubDegree]| v.iter().map(|d| d.sup()).collect();
    Ok((sups(&c.ts), sups(&c.is), sups(&c.fs)))
}

#[pyfunction]
fn coarsen(ts: Vec<f64>, is_: Vec<f64>, fs: Vec<f64>) -> PyResult<PyTriplet> {
    let c = RefinedComponents::scalar(&ts, &is_, &fs).py_err()?;
    core::coarsen(&c).py_err().map(PyTriplet)
}

fn grid(text: &str) -> PyResult<NeutroMatrix> {
    NeutroMatrix::parse_grid(text).py_err()
}

/// Product of two matrices in the whitespace grid format.
#[pyfunction]
fn matrix_mul(a: &str, b: &str) -> PyResult<String> {
    core::nm_mul(&grid(a)?, &grid(b)?).py_err().map(|m| m.to_grid())
}

#[pyfunction]
fn matrix_add(a: &str, b: &str) -> PyResult<String> {
    core::nm_add(&grid(a)?, &grid(b)?).py_err().map(|m| m.to_grid())
}

#[pyfunction]
#[pyo3(signature = (text, kind="graph"))]
fn adjacency_validate<'py>(py: Python<'py>, text: &str, kind: &str) -> PyResult<Bound<'py, PyDict>> {
    let kind: AdjacencyKind = kind.parse().py_err()?;
    let r = core::adjacency_validate(&grid(text)?, kind).py_err()?;
    let d = PyDict::new(py);
    d.set_item("size", r.size)?;
    d.set_item("connections", r.connections)?;
    d.set_item("inverse_connections", r.inverse_connections)?;
    d.set_item("indeterminate", r.indeterminate)?;
    d.set_item("symmetric", r.symmetric)?;
    Ok(d)
}

#[pyfunction]
fn path_influence(edges: Vec<PyTriplet>) -> PyResult<PyTriplet> {
    let e: Vec<core::Triplet> = edges.into_iter().map(|x| x.0).collect();
    core::path_influence(&e).py_err().map(PyTriplet)
}

/// Labels each score `Accept`, `Noncommit` or `Reject`.
#[pyfunction]
fn three_ways(scores: Vec<f64>, alpha: f64, beta: f64) -> PyResult<Vec<String>> {
    let out = core::three_ways(&scores, alpha, beta).py_err()?;
    Ok(out.labels.iter().map(|l| l.to_string()).collect())
}

/// Labels each score with a graded band such as `Accept-1`.
#[pyfunction]
fn n_ways(scores: Vec<f64>, cuts: Vec<f64>, p: usize, r: usize, s: usize) -> PyResult<Vec<String>> {
    let out = core::n_ways(&scores, &cuts, (p, r, s)).py_err()?;
    Ok(out.labels.iter().map(|l| l.to_string()).collect())
}

fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

#[pyfunction]
fn neutrosophify(areas: Vec<(String, f64)>, a: Vec<String>, neut: Vec<String>, anti: Vec<String>) -> PyResult<[f64; 3]> {
    let mapping = ConceptMapping::new(&strs(&a), &strs(&neut), &strs(&anti));
    let areas: Vec<(&str, f64)> = areas.iter().map(|(l, x)| (l.as_str(), *x)).collect();
    core::neutrosophify(&areas, &mapping).py_err().map(|p| p.to_array())
}

#[pyfunction]
fn offset_degree(amount: f64, norm: f64) -> PyResult<f64> {
    core::offset_degree(amount, norm).py_err()
}

/// Class name (`Standard`, `Overset`, `Underset`, `Offset`) of `t`.
#[pyfunction]
#[pyo3(signature = (t, under=-1.0, over=2.0))]
fn offset_class(t: [f64; 3], under: f64, over: f64) -> PyResult<String> {
    let bounds = OffsetBounds::new(under, over).py_err()?;
    Ok(core::validate_offset(t, &bounds).class.to_string())
}

/// Runs a named exhibit (or all of them) and returns `{name: passed}`.
#[pyfunction]
#[pyo3(signature = (name=None))]
fn demo<'py>(py: Python<'py>, name: Option<&str>) -> PyResult<Bound<'py, PyDict>> {
    let reports = match name {
        Some(n) => vec![core::run_exhibit(n).py_err()?],
        None => core::run_all().py_err()?,
    };
    let d = PyDict::new(py);
    for r in reports {
        d.set_item(&r.name, r.passed())?;
    }
    Ok(d)
}

#[pymodule]
fn neutro(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTriplet>()?;
    m.add_class::<PyNn>()?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(hesitancy, m)?)?;
    m.add_function(wrap_pyfunction!(refusal, m)?)?;
    m.add_function(wrap_pyfunction!(embed_into_ns, m)?)?;
    m.add_function(wrap_pyfunction!(negate, m)?)?;
    m.add_function(wrap_pyfunction!(conjunct, m)?)?;
    m.add_function(wrap_pyfunction!(disjunct, m)?)?;
    m.add_function(wrap_pyfunction!(implicate, m)?)?;
    m.add_function(wrap_pyfunction!(sup_transform, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(paradox_check, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_volume, m)?)?;
    m.add_function(wrap_pyfunction!(validate_refined, m)?)?;
    m.add_function(wrap_pyfunction!(refine, m)?)?;
    m.add_function(wrap_pyfunction!(coarsen, m)?)?;
    m.add_function(wrap_pyfunction!(matrix_mul, m)?)?;
    m.add_function(wrap_pyfunction!(matrix_add, m)?)?;
    m.add_function(wrap_pyfunction!(adjacency_validate, m)?)?;
    m.add_function(wrap_pyfunction!(path_influence, m)?)?;
    m.add_function(wrap_pyfunction!(three_ways, m)?)?;
    m.add_function(wrap_pyfunction!(n_ways, m)?)?;
    m.add_function(wrap_pyfunction!(neutrosophify, m)?)?;
    m.add_function(wrap_pyfunction!(offset_degree, m)?)?;
    m.add_function(wrap_pyfunction!(offset_class, m)?)?;
    m.add_function(wrap_pyfunction!(demo, m)?)?;
    Ok(())
}
