//! Python bindings. Exact rationals cross the boundary as strings
//! (`"2/5"` or a terminating decimal) so `fractions.Fraction` can take them.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use youngwit::exact::format_rational;
use youngwit::partitions::{enumerate, Constraint};
use youngwit::states::{GhzProduct, SpinAxis};
use youngwit::witness::{BoundMode, Measurement, Unit, Witness};
use youngwit::{bounds, oracle, squeezing, states, tuples};

fn err(e: youngwit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "YoungDiagram", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyYoungDiagram(youngwit::YoungDiagram);

#[pymethods]
impl PyYoungDiagram {
    /// Rows in any order; they are sorted non-increasing.
    #[new]
    fn new(rows: Vec<u32>) -> PyResult<Self> {
        youngwit::YoungDiagram::from_blocks(rows).map(Self).map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[getter]
    fn rows(&self) -> Vec<u32> {
        self.0.rows().to_vec()
    }
    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }
    #[getter]
    fn width(&self) -> u32 {
        self.0.width()
    }
    #[getter]
    fn height(&self) -> u32 {
        self.0.height()
    }
    #[getter]
    fn rank(&self) -> i32 {
        self.0.rank()
    }

    fn sum_of_squares(&self) -> u64 {
        self.0.sum_of_squares()
    }

    /// Exact QFI of the GHZ product with these block sizes.
    fn qfi(&self) -> u64 {
        states::qfi_analytic(&GhzProduct::real(self.0.clone()))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("YoungDiagram([{}])", self.0)
    }

    fn __len__(&self) -> usize {
        self.0.rows().len()
    }
}

#[pyfunction]
#[pyo3(signature = (n, max_width=None, min_height=None, max_rank=None))]
fn partitions(
    n: u32,
    max_width: Option<u32>,
    min_height: Option<u32>,
    max_rank: Option<i32>,
) -> Vec<PyYoungDiagram> {
    let c = Constraint {
        max_width,
        min_height,
        max_rank,
    };
    enumerate(n, c).map(PyYoungDiagram).collect()
}

#[pyfunction]
fn f_wh(n: u32, w: u32, h: u32) -> PyResult<u64> {
    bounds::f_wh(n, w, h).map_err(err)
}

#[pyfunction]
fn f_wh_upper(n: u32, w: u32, h: u32) -> PyResult<u64> {
    bounds::f_wh_upper(n, w, h).map_err(err)
}

#[pyfunction]
fn f_width(n: u32, w: u32) -> PyResult<u64> {
    bounds::f_width(n, w).map_err(err)
}

#[pyfunction]
fn f_width_upper(n: u32, w: u32) -> PyResult<u64> {
    bounds::f_width_upper(n, w).map_err(err)
}

#[pyfunction]
fn f_height(n: u32, h: u32) -> PyResult<u64> {
    bounds::f_height(n, h).map_err(err)
}

#[pyfunction]
fn f_rank(n: u32, r: i32) -> PyResult<u64> {
    bounds::f_rank(n, r).map_err(err)
}

#[pyfunction]
fn f_rank_upper(n: u32, r: i32) -> PyResult<String> {
    bounds::f_rank_upper(n, r).map(|x| format_rational(&x)).map_err(err)
}

#[pyfunction]
fn valid_ranks(n: u32) -> Vec<i32> {
    bounds::valid_ranks(n)
}

#[pyfunction]
fn is_valid(n: u32, w: u32, h: u32) -> bool {
    tuples::is_valid(n, w, h)
}

/// `(w, h)` pairs realized by some partition of `n`.
#[pyfunction]
fn all_tuples(n: u32) -> Vec<(u32, u32)> {
    tuples::all_tuples(n).into_iter().map(|t| (t.w, t.h)).collect()
}

#[pyfunction]
fn count_width_leq(n: u32, w: u32) -> PyResult<u64> {
    tuples::count_width_leq(n, w).map_err(err)
}

#[pyfunction]
fn count_height_geq(n: u32, h: u32) -> PyResult<u64> {
    tuples::count_height_geq(n, h).map_err(err)
}

#[pyfunction]
fn count_rank_leq(n: u32, r: i32) -> PyResult<u64> {
    tuples::count_rank_leq(n, r).map_err(err)
}

/// Largest sum of squares over the class, with one maximizer.
#[pyfunction]
#[pyo3(signature = (n, max_width=None, min_height=None, max_rank=None))]
fn brute_force_max(
    n: u32,
    max_width: Option<u32>,
    min_height: Option<u32>,
    max_rank: Option<i32>,
) -> PyResult<(u64, PyYoungDiagram)> {
    let c = Constraint {
        max_width,
        min_height,
        max_rank,
    };
    let best = oracle::brute_force_max(n, c).map_err(err)?;
    Ok((best.value, PyYoungDiagram(best.argmax)))
}

/// Mismatches as `(n, class, closed, brute)`; empty means all agree.
#[pyfunction]
fn verify_closed_forms(py: Python<'_>, n_max: u32) -> Vec<(u32, String, Option<u64>, u64)> {
    py.detach(|| oracle::verify_closed_forms(n_max))
        .into_iter()
        .map(|m| (m.n, m.class, m.closed, m.brute))
        .collect()
}

fn ghz(blocks: &PyYoungDiagram, phases: Option<Vec<f64>>) -> PyResult<GhzProduct> {
    match phases {
        Some(p) => GhzProduct::new(blocks.0.clone(), p).map_err(err),
        None => Ok(GhzProduct::real(blocks.0.clone())),
    }
}

#[pyfunction]
#[pyo3(signature = (blocks, phases=None))]
fn qfi_analytic(blocks: &PyYoungDiagram, phases: Option<Vec<f64>>) -> PyResult<u64> {
    Ok(states::qfi_analytic(&ghz(blocks, phases)?))
}

/// Dense statevector QFI along `axis`; limited to small `n`.
#[pyfunction]
#[pyo3(signature = (blocks, axis=(0.0, 0.0, 1.0), phases=None))]
fn qfi_statevector(
    blocks: &PyYoungDiagram,
    axis: (f64, f64, f64),
    phases: Option<Vec<f64>>,
) -> PyResult<f64> {
    let axis = SpinAxis::normalized(axis.0, axis.1, axis.2).map_err(err)?;
    states::qfi_statevector(&ghz(blocks, phases)?, axis).map_err(err)
}

#[pyfunction]
fn optimal_state(n: u32, w: u32, h: u32) -> PyResult<PyYoungDiagram> {
    states::optimal_diagram(n, w, h).map(PyYoungDiagram).map_err(err)
}

#[pyfunction]
fn xi2_floor_wh(n: u32, w: u32, h: u32) -> PyResult<String> {
    squeezing::xi2_floor_wh(n, w, h).map(|x| format_rational(&x)).map_err(err)
}

#[pyfunction]
fn xi2_floor_w(w: u32) -> PyResult<String> {
    squeezing::xi2_floor_w(w).map(|x| format_rational(&x)).map_err(err)
}

#[pyfunction]
fn xi2_floor_h(n: u32, h: u32) -> PyResult<String> {
    squeezing::xi2_floor_h(n, h).map(|x| format_rational(&x)).map_err(err)
}

#[pyfunction]
fn xi2_floor_r(n: u32, r: i32) -> PyResult<String> {
    squeezing::xi2_floor_r(n, r).map(|x| format_rational(&x)).map_err(err)
}

#[pyfunction]
fn db_to_linear(db: f64) -> f64 {
    squeezing::db_to_linear(db)
}

#[pyfunction]
fn linear_to_db(x: f64) -> f64 {
    squeezing::linear_to_db(x)
}

/// Full witness report as a dict, plus the grid under `"grid_csv"`.
/// Exactly one of `fq`, `xi2`, `xi2_db` must be given, as decimal text.
#[pyfunction]
#[pyo3(signature = (n, fq=None, xi2=None, xi2_db=None, label=None, simple=false))]
fn analyze<'py>(
    py: Python<'py>,
    n: u32,
    fq: Option<&str>,
    xi2: Option<&str>,
    xi2_db: Option<&str>,
    label: Option<String>,
    simple: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let label = label.unwrap_or_else(|| "python".to_string());
    let m = match (fq, xi2, xi2_db) {
        (Some(v), None, None) => Measurement::qfi(label, n, v),
        (None, Some(v), None) => Measurement::squeezing(label, n, v, Unit::Linear),
        (None, None, Some(v)) => Measurement::squeezing(label, n, v, Unit::Db),
        _ => return Err(PyValueError::new_err("give exactly one of fq, xi2, xi2_db")),
    }
    .map_err(err)?;
    let mode = if simple { BoundMode::Simple } else { BoundMode::Tight };
    let report = py
        .detach(|| Witness::new(m, mode).and_then(|w| w.report()))
        .map_err(err)?;
    let json = py.import("json")?;
    let dict = json.call_method1("loads", (report.to_json(),))?.cast_into::<PyDict>()?;
    dict.set_item("grid_csv", report.grid.to_csv())?;
    Ok(dict)
}

#[pymodule]
fn youngwit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyYoungDiagram>()?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(f_wh, m)?)?;
    m.add_function(wrap_pyfunction!(f_wh_upper, m)?)?;
    m.add_function(wrap_pyfunction!(f_width, m)?)?;
    m.add_function(wrap_pyfunction!(f_width_upper, m)?)?;
    m.add_function(wrap_pyfunction!(f_height, m)?)?;
    m.add_function(wrap_pyfunction!(f_rank, m)?)?;
    m.add_function(wrap_pyfunction!(f_rank_upper, m)?)?;
    m.add_function(wrap_pyfunction!(valid_ranks, m)?)?;
    m.add_function(wrap_pyfunction!(is_valid, m)?)?;
    m.add_function(wrap_pyfunction!(all_tuples, m)?)?;
    m.add_function(wrap_pyfunction!(count_width_leq, m)?)?;
    m.add_function(wrap_pyfunction!(count_height_geq, m)?)?;
    m.add_function(wrap_pyfunction!(count_rank_leq, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_max, m)?)?;
    m.add_function(wrap_pyfunction!(verify_closed_forms, m)?)?;
    m.add_function(wrap_pyfunction!(qfi_analytic, m)?)?;
    m.add_function(wrap_pyfunction!(qfi_statevector, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_state, m)?)?;
    m.add_function(wrap_pyfunction!(xi2_floor_wh, m)?)?;
    m.add_function(wrap_pyfunction!(xi2_floor_w, m)?)?;
    m.add_function(wrap_pyfunction!(xi2_floor_h, m)?)?;
    m.add_function(wrap_pyfunction!(xi2_floor_r, m)?)?;
    m.add_function(wrap_pyfunction!(db_to_linear, m)?)?;
    m.add_function(wrap_pyfunction!(linear_to_db, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    Ok(())
}
