//! Python extension module exposing the main bqf types and operations.
//! Exact rationals cross the boundary as `fractions.Fraction`, integers as
//! arbitrary-precision `int`.

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use bqf::automorphism::{from_conic_point, is_automorphism, RationalMatrix};
use bqf::census;
use bqf::conic::{param_point, ConicKind, SlopeParam};
use bqf::form::{Form as CoreForm, Representation};
use bqf::json::{class_name, parse_rational};
use bqf::quadric::{line_through, verify_line, QuadricPoint};
use bqf::transporter::transport;

type FailureRow = (BigInt, (BigInt, BigInt), (BigInt, BigInt), String);

fn err(e: bqf::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn matrix_rows(t: &RationalMatrix) -> Vec<Vec<BigRational>> {
    vec![
        vec![t.t1.clone(), t.t2.clone()],
        vec![t.t3.clone(), t.t4.clone()],
    ]
}

/// An integral binary quadratic form f2*x^2 + f1*x*y + f0*y^2.
#[pyclass(name = "Form")]
struct PyForm {
    inner: CoreForm,
}

#[pymethods]
impl PyForm {
    #[new]
    fn new(f2: BigInt, f1: BigInt, f0: BigInt) -> Self {
        PyForm { inner: CoreForm { f2, f1, f0 } }
    }

    fn eval(&self, x: BigInt, y: BigInt) -> BigInt {
        self.inner.eval(&x, &y)
    }

    fn discriminant(&self) -> BigInt {
        self.inner.discriminant()
    }

    fn four_delta(&self) -> BigInt {
        self.inner.four_delta()
    }

    fn classify(&self) -> &'static str {
        class_name(self.inner.classify())
    }

    fn is_irreducible(&self) -> bool {
        self.inner.is_irreducible()
    }

    fn is_primitive(&self) -> bool {
        self.inner.is_primitive()
    }

    fn __repr__(&self) -> String {
        format!(
            "Form({}, {}, {})",
            self.inner.f2, self.inner.f1, self.inner.f0
        )
    }
}

/// Special automorphism carrying rep1 to rep2; both pairs must represent
/// the same value. Returns a dict with the matrix, the conic point behind
/// it, the literal witness pair, and recomputed certificate checks.
#[pyfunction]
fn transport_reps<'py>(
    py: Python<'py>,
    form: &PyForm,
    rep1: (BigInt, BigInt),
    rep2: (BigInt, BigInt),
) -> PyResult<Bound<'py, PyDict>> {
    let f = &form.inner;
    let r1 = Representation::new(f, rep1.0, rep1.1);
    let r2 = Representation::new(f, rep2.0, rep2.1);
    let t = transport(f, &r1, &r2).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("h", r1.h.clone())?;
    out.set_item("matrix", matrix_rows(&t.matrix))?;
    out.set_item("conic_point", (t.conic_point.c.clone(), t.conic_point.w.clone()))?;
    out.set_item("legacy_mn", (t.legacy_mn.0.clone(), t.legacy_mn.1.clone()))?;
    let maps = {
        let (ax, ay) = t.matrix.apply_int(&r1.x, &r1.y);
        ax == BigRational::from_integer(r2.x.clone()) && ay == BigRational::from_integer(r2.y.clone())
    };
    let checks = PyDict::new(py);
    checks.set_item("maps_r1_to_r2", maps)?;
    checks.set_item("preserves_form", is_automorphism(f, &t.matrix))?;
    checks.set_item("det_one", t.matrix.det() == BigRational::from_integer(1.into()))?;
    out.set_item("checks", checks)?;
    Ok(out)
}

/// All representations of h by a definite form, as (x, y) pairs.
#[pyfunction]
fn enumerate_reps(form: &PyForm, h: BigInt) -> PyResult<Vec<(BigInt, BigInt)>> {
    let reps = census::enumerate_reps(&form.inner, &h).map_err(err)?;
    Ok(reps.into_iter().map(|r| (r.x, r.y)).collect())
}

/// Representations of h with |x|, |y| ≤ box_bound, for any form.
#[pyfunction]
fn enumerate_reps_box(form: &PyForm, h: BigInt, box_bound: u64) -> Vec<(BigInt, BigInt)> {
    census::enumerate_reps_box(&form.inner, &h, box_bound)
        .into_iter()
        .map(|r| (r.x, r.y))
        .collect()
}

/// Census of representable values |h| ≤ z; box_bound is required for
/// indefinite forms.
#[pyfunction]
#[pyo3(signature = (form, z, box_bound=None, include_zero=false))]
fn run_census<'py>(
    py: Python<'py>,
    form: &PyForm,
    z: u64,
    box_bound: Option<u64>,
    include_zero: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let c = census::census(&form.inner, z, box_bound, include_zero).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("z", c.z)?;
    out.set_item("box", c.box_bound)?;
    out.set_item("count", c.count())?;
    out.set_item("values", c.values.iter().copied().collect::<Vec<i64>>())?;
    out.set_item("multiplicities", c.multiplicities.clone())?;
    out.set_item("ratio", census::landau_ratio(&c).ok())?;
    Ok(out)
}

/// Transport-check every ordered pair of equal-value representations with
/// |h| ≤ z; the failures list is expected to be empty.
#[pyfunction]
#[pyo3(signature = (form, z, box_bound=None))]
fn verify_essential<'py>(
    py: Python<'py>,
    form: &PyForm,
    z: u64,
    box_bound: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let report = census::verify_essential(&form.inner, z, box_bound).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("checked_values", report.checked_values)?;
    out.set_item("pairs_checked", report.pairs_checked)?;
    let failures: Vec<FailureRow> = report
        .failures
        .into_iter()
        .map(|f| (f.h, f.from, f.to, f.reason))
        .collect();
    out.set_item("failures", failures)?;
    Ok(out)
}

/// Automorphism matrix from a chord-slope parameter p/q.
#[pyfunction]
fn automorphism(form: &PyForm, p: BigInt, q: BigInt) -> PyResult<Vec<Vec<BigRational>>> {
    let f = &form.inner;
    let slope = SlopeParam::new(p, q).map_err(err)?;
    let kind = ConicKind::for_form(f).map_err(err)?;
    let pt = param_point(&f.four_delta(), kind, &slope).map_err(err)?;
    let t = from_conic_point(f, &pt).map_err(err)?;
    Ok(matrix_rows(&t))
}

/// Rational point of the conic x² + ε·δ·y² = 1 at slope parameter p/q;
/// epsilon is +1 for the ellipse, -1 for the hyperbola.
#[pyfunction]
fn conic_point(four_delta: BigInt, epsilon: i32, p: BigInt, q: BigInt) -> PyResult<(BigRational, BigRational)> {
    let kind = match epsilon {
        1 => ConicKind::Ellipse,
        -1 => ConicKind::Hyperbola,
        _ => return Err(PyValueError::new_err("epsilon must be +1 or -1")),
    };
    let slope = SlopeParam::new(p, q).map_err(err)?;
    let pt = param_point(&four_delta, kind, &slope).map_err(err)?;
    Ok((pt.c, pt.w))
}

/// Rational line on f(x1,x2) = f(x3,x4) through the given point; the
/// coordinates are strings that may be rationals like "1/2".
#[pyfunction]
fn quadric_line<'py>(
    py: Python<'py>,
    form: &PyForm,
    point: (String, String, String, String),
) -> PyResult<Bound<'py, PyDict>> {
    let f = &form.inner;
    let p = QuadricPoint::new(
        parse_rational(&point.0).map_err(err)?,
        parse_rational(&point.1).map_err(err)?,
        parse_rational(&point.2).map_err(err)?,
        parse_rational(&point.3).map_err(err)?,
    );
    let line = line_through(f, &p).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("base", line.base.coords().map(|c| c.clone()))?;
    out.set_item("direction", line.direction.clone())?;
    out.set_item("verified", verify_line(f, &line))?;
    Ok(out)
}

#[pymodule]
fn bqf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyForm>()?;
    m.add_function(wrap_pyfunction!(transport_reps, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_reps, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_reps_box, m)?)?;
    m.add_function(wrap_pyfunction!(run_census, m)?)?;
    m.add_function(wrap_pyfunction!(verify_essential, m)?)?;
    m.add_function(wrap_pyfunction!(automorphism, m)?)?;
    m.add_function(wrap_pyfunction!(conic_point, m)?)?;
    m.add_function(wrap_pyfunction!(quadric_line, m)?)?;
    Ok(())
}
