//! Python bindings: `import psi_py`.

use std::str::FromStr;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use psi_core::bridges;
use psi_core::eightlevels;
use psi_core::exactmath::RingTag;
use psi_core::mersenne::{self, TauVariant};
use psi_core::psi::{self, PsiParams};
use psi_core::report::TestReport;
use psi_core::Error;

create_exception!(psi_py, CapacityError, PyRuntimeError);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Capacity { .. } | Error::SymbolicCap { .. } | Error::DegreeCap { .. } | Error::NoPeriod(_) => {
            CapacityError::new_err(e.to_string())
        }
        Error::NotInvertible { .. } | Error::NonIntegral(_) | Error::NotDivisible => {
            PyArithmeticError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn params(a: &str, b: &str, ring: &str) -> PyResult<PsiParams> {
    let ring = RingTag::from_str(ring).map_err(py_err)?;
    PsiParams::parse(a, b, &ring).map_err(py_err)
}

fn report_dict<'py>(py: Python<'py>, r: &TestReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("method", &r.method)?;
    d.set_item("p", r.p)?;
    d.set_item("verdict", r.verdict.as_str())?;
    d.set_item("residues", &r.residues)?;
    d.set_item("ratios", &r.ratios)?;
    d.set_item("elapsed_ms", r.elapsed_ms)?;
    d.set_item("notes", &r.notes)?;
    Ok(d)
}

/// Psi(a, b, n) as a string. `ring` is int, rat, quad:D or mod:M.
#[pyfunction]
#[pyo3(signature = (a, b, n, ring = "int", method = "ladder"))]
fn psi_eval(a: &str, b: &str, n: BigInt, ring: &str, method: &str) -> PyResult<String> {
    if n.sign() == num_bigint::Sign::Minus {
        return Err(PyValueError::new_err("index must be nonnegative"));
    }
    let p = params(a, b, ring)?;
    let small = || u64::try_from(&n).map_err(|_| PyValueError::new_err("index too large for this method"));
    let v = match method {
        "ladder" => psi::psi_ladder(&p, &n).map_err(py_err)?,
        "recurrence" => psi::psi_recurrence(&p, small()?),
        "explicit" => psi::psi_explicit(&p, small()?).map_err(py_err)?,
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    Ok(v.to_string())
}

/// Psi(a, b, n) mod m by the doubling ladder.
#[pyfunction]
fn psi_mod(a: BigInt, b: BigInt, n: BigInt, m: BigInt) -> PyResult<BigInt> {
    psi::psi_mod_ladder(&a, &b, &n, &m).map_err(py_err)
}

/// Psi(a, b, n) as a polynomial in a, b.
#[pyfunction]
fn psi_poly(n: u64) -> PyResult<String> {
    Ok(psi::psi_symbolic(n).map_err(py_err)?.to_string())
}

/// Expansion coefficients for r = 0..=n/2, optionally at a fixed direction.
#[pyfunction]
#[pyo3(signature = (n, alpha = None, beta = None))]
fn coeff_table(n: u64, alpha: Option<i64>, beta: Option<i64>) -> PyResult<Vec<String>> {
    let t = eightlevels::coeff_table(n).map_err(py_err)?;
    Ok(match (alpha, beta) {
        (Some(al), Some(be)) => t.entries.iter().map(|e| e.at_direction(al, be).to_string()).collect(),
        (None, None) => t.polys().iter().map(|p| p.to_string()).collect(),
        _ => return Err(PyValueError::new_err("alpha and beta go together")),
    })
}

/// One Mersenne test: ll, psi, mu, sum, necessary, composite or ab.
#[pyfunction]
#[pyo3(signature = (p, method = "ll", mu = None))]
fn mersenne_test<'py>(py: Python<'py>, p: u64, method: &str, mu: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let r = match method {
        "ll" => mersenne::ll_classic(p),
        "psi" => mersenne::psi_test(p),
        "mu" => mersenne::mu_pattern_test(p, mu.unwrap_or(12)),
        "sum" => mersenne::enhanced_sum_battery(p, mu.unwrap_or(4), mersenne::DEFAULT_EXACT_LIMIT),
        "necessary" => mersenne::necessary_condition(p),
        "composite" => mersenne::composite_criterion(p),
        "ab" => mersenne::ab_ratio_test(p),
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
    .map_err(py_err)?;
    report_dict(py, &r)
}

/// The tau = 2^l identity: (terms, holds).
#[pyfunction]
fn tau_identity(l: u32, variant: &str) -> PyResult<(Vec<String>, bool)> {
    let v = TauVariant::from_str(variant).map_err(py_err)?;
    let terms = mersenne::tau_identity_terms(l, v).map_err(py_err)?;
    let ok = mersenne::tau_identity_check(l, v).map_err(py_err)?;
    Ok((terms.iter().map(|t| t.to_string()).collect(), ok))
}

/// Names of the registered bridges.
#[pyfunction]
fn bridge_names() -> Vec<String> {
    bridges::registry().into_iter().map(|s| s.name.to_string()).collect()
}

/// Indices where a bridge fails, up to `n_max` (default: its own).
#[pyfunction]
#[pyo3(signature = (name, n_max = None))]
fn bridge_failures(name: &str, n_max: Option<u64>) -> PyResult<Vec<u64>> {
    let spec = bridges::find_bridge(name).ok_or_else(|| PyValueError::new_err(format!("no bridge {name:?}")))?;
    let n = n_max.unwrap_or(spec.n_max);
    Ok(bridges::bridge_failures(&spec, n))
}

/// (period, one period of values) for Psi(a, b, n).
#[pyfunction]
#[pyo3(signature = (a, b, ring = "int", cap = bridges::DEFAULT_PERIOD_CAP))]
fn period(a: &str, b: &str, ring: &str, cap: u64) -> PyResult<(u64, Vec<String>)> {
    let p = params(a, b, ring)?;
    let r = bridges::detect_period(p.a(), p.b(), cap).map_err(py_err)?;
    Ok((r.period, r.table))
}

#[pymodule]
fn psi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CapacityError", m.py().get_type::<CapacityError>())?;
    m.add_function(wrap_pyfunction!(psi_eval, m)?)?;
    m.add_function(wrap_pyfunction!(psi_mod, m)?)?;
    m.add_function(wrap_pyfunction!(psi_poly, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_table, m)?)?;
    m.add_function(wrap_pyfunction!(mersenne_test, m)?)?;
    m.add_function(wrap_pyfunction!(tau_identity, m)?)?;
    m.add_function(wrap_pyfunction!(bridge_names, m)?)?;
    m.add_function(wrap_pyfunction!(bridge_failures, m)?)?;
    m.add_function(wrap_pyfunction!(period, m)?)?;
    Ok(())
}
