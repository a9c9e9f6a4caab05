use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use linebcast_core as core;
use linebcast_core::topogen::{GenMode, GenSpec, SourcePolicy};

fn py_err(e: core::Error) -> PyErr {
    if e.is_io() {
        PyIOError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn alpha(a: f64) -> PyResult<core::PathLoss> {
    core::PathLoss::new(a).map_err(py_err)
}

fn ranges(v: Vec<f64>) -> PyResult<core::RangeAssignment> {
    core::RangeAssignment::new(v).map_err(py_err)
}

/// Nodes on a line (strictly increasing coordinates) and a source index.
#[pyclass(name = "LinearNetwork", module = "linebcast", frozen)]
struct PyNetwork {
    inner: core::LinearNetwork,
}

#[pymethods]
impl PyNetwork {
    #[new]
    fn new(positions: Vec<f64>, source: usize) -> PyResult<Self> {
        core::LinearNetwork::new(positions, source)
            .map(|inner| PyNetwork { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core::io::parse_network(text, "json")
            .map(|inner| PyNetwork { inner })
            .map_err(py_err)
    }

    fn to_json(&self) -> String {
        core::format::to_json(&core::io::NetworkFile::from_network(
            &self.inner,
            None,
            None,
        ))
    }

    #[getter]
    fn positions(&self) -> Vec<f64> {
        self.inner.positions().to_vec()
    }

    #[getter]
    fn source(&self) -> usize {
        self.inner.source()
    }

    fn distance(&self, i: usize, j: usize) -> PyResult<f64> {
        self.inner.distance(i, j).map_err(py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "LinearNetwork(positions={:?}, source={})",
            self.inner.positions(),
            self.inner.source()
        )
    }
}

/// Output of the optimal search.
#[pyclass(name = "OptimalResult", module = "linebcast", frozen, get_all)]
struct PyOptimal {
    ranges: Vec<f64>,
    cost: f64,
    bm: Option<usize>,
    /// `(other, same)` last receivers of the long relay.
    bm_receivers: Option<(usize, usize)>,
    suboptimal_cost: Option<f64>,
}

#[pymethods]
impl PyOptimal {
    fn __repr__(&self) -> String {
        format!(
            "OptimalResult(ranges={:?}, cost={}, bm={:?})",
            self.ranges, self.cost, self.bm
        )
    }
}

#[pyfunction]
fn min_positive_ranges<'py>(py: Python<'py>, net: &PyNetwork) -> PyResult<Bound<'py, PyDict>> {
    let m = core::min_positive_ranges(&net.inner);
    let d = PyDict::new(py);
    d.set_item("m", m.m)?;
    d.set_item("source_left", m.source_left)?;
    d.set_item("source_right", m.source_right)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (ranges, alpha=2.0))]
fn assignment_cost(ranges: Vec<f64>, alpha: f64) -> PyResult<f64> {
    Ok(core::assignment_cost(
        &self::ranges(ranges)?,
        self::alpha(alpha)?,
    ))
}

/// Returns `(informed, rounds)`.
#[pyfunction]
fn validate_broadcast(net: &PyNetwork, ranges: Vec<f64>) -> PyResult<(Vec<bool>, usize)> {
    let r = self::ranges(ranges)?;
    if r.len() != net.inner.len() {
        return Err(PyValueError::new_err(
            "ranges length must match network size",
        ));
    }
    let c = core::validate_broadcast(&net.inner, &r);
    Ok((c.informed, c.rounds))
}

#[pyfunction]
fn edge_source_assignment(net: &PyNetwork) -> PyResult<Vec<f64>> {
    core::edge_source_assignment(&net.inner)
        .map(|r| r.into_inner())
        .map_err(py_err)
}

#[pyfunction]
fn distributed_assign(net: &PyNetwork) -> Vec<f64> {
    core::distributed_assign(&net.inner).into_inner()
}

#[pyfunction]
#[pyo3(signature = (net, alpha=2.0))]
fn suboptimal_assign<'py>(
    py: Python<'py>,
    net: &PyNetwork,
    alpha: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = core::suboptimal_assign(&net.inner, self::alpha(alpha)?).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("ranges", r.assignment.ranges().to_vec())?;
    d.set_item("cost", r.cost)?;
    d.set_item("cost_right", r.cost_right)?;
    d.set_item("cost_left", r.cost_left)?;
    d.set_item("cost_star", r.cost_star)?;
    d.set_item("silenced", r.silenced)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (net, alpha=2.0))]
fn optimal_assign(net: &PyNetwork, alpha: f64) -> PyResult<PyOptimal> {
    let r = core::optimal_assign(&net.inner, self::alpha(alpha)?).map_err(py_err)?;
    Ok(PyOptimal {
        ranges: r.assignment.ranges().to_vec(),
        cost: r.cost,
        bm: r.bm,
        bm_receivers: r.bm_receivers.map(|p| (p.other, p.same)),
        suboptimal_cost: r.suboptimal.map(|s| s.cost),
    })
}

/// Returns `(ranges, cost)`.
#[pyfunction]
#[pyo3(signature = (net, alpha=2.0, max_n=8))]
fn brute_force_optimal(net: &PyNetwork, alpha: f64, max_n: usize) -> PyResult<(Vec<f64>, f64)> {
    let cfg = core::OracleConfig::new(max_n, self::alpha(alpha)?).map_err(py_err)?;
    core::brute_force_optimal(&net.inner, &cfg)
        .map(|(r, c)| (r.into_inner(), c))
        .map_err(py_err)
}

/// Returns `(exact, approx)` radii.
#[pyfunction]
fn identical_range(pc: f64, lambda_: f64, length: f64) -> PyResult<(f64, f64)> {
    core::identical_range(pc, lambda_, length)
        .map(|r| (r.exact, r.approx))
        .map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (n, lambda_, alpha=2.0))]
fn expected_distributed_cost(n: usize, lambda_: f64, alpha: f64) -> PyResult<f64> {
    core::expected_distributed_cost(n, lambda_, self::alpha(alpha)?).map_err(py_err)
}

#[pyfunction]
fn normalized_difference(c1: f64, c2: f64) -> PyResult<f64> {
    core::normalized_difference(c1, c2).map_err(py_err)
}

/// Returns `{"rounds": [[(node, range), ...], ...], "assignment": [...]}`.
#[pyfunction]
fn run_protocol<'py>(py: Python<'py>, net: &PyNetwork) -> PyResult<Bound<'py, PyDict>> {
    let t = core::run_protocol(&net.inner);
    let rounds: Vec<Vec<(usize, f64)>> = t
        .rounds
        .iter()
        .map(|r| r.iter().map(|x| (x.node, x.range)).collect())
        .collect();
    let d = PyDict::new(py);
    d.set_item("rounds", rounds)?;
    d.set_item("assignment", t.assignment.into_inner())?;
    Ok(d)
}

/// Generate a network. `mode` is uniform, expgap, adv_a or adv_b; `source`
/// is "random", "center" or an index.
#[pyfunction]
#[pyo3(signature = (mode="uniform", n=150, length=5000.0, lambda_=0.03, seed=0, source="random", r1=102.0, r2=100.0, eps1=1.0, eps2=None, trial=0))]
#[allow(clippy::too_many_arguments)]
fn generate(
    mode: &str,
    n: usize,
    length: f64,
    lambda_: f64,
    seed: u64,
    source: &str,
    r1: f64,
    r2: f64,
    eps1: f64,
    eps2: Option<f64>,
    trial: u64,
) -> PyResult<PyNetwork> {
    let spec = GenSpec {
        mode: mode.parse::<GenMode>().map_err(py_err)?,
        n,
        length,
        lambda: lambda_,
        seed,
        source_policy: source.parse::<SourcePolicy>().map_err(py_err)?,
        r1,
        r2,
        eps1,
        eps2,
    };
    core::topogen::generate(&spec, trial)
        .map(|inner| PyNetwork { inner })
        .map_err(py_err)
}

#[pymodule]
fn linebcast(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyNetwork>()?;
    m.add_class::<PyOptimal>()?;
    m.add_function(wrap_pyfunction!(min_positive_ranges, m)?)?;
    m.add_function(wrap_pyfunction!(assignment_cost, m)?)?;
    m.add_function(wrap_pyfunction!(validate_broadcast, m)?)?;
    m.add_function(wrap_pyfunction!(edge_source_assignment, m)?)?;
    m.add_function(wrap_pyfunction!(distributed_assign, m)?)?;
    m.add_function(wrap_pyfunction!(suboptimal_assign, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_assign, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_optimal, m)?)?;
    m.add_function(wrap_pyfunction!(identical_range, m)?)?;
    m.add_function(wrap_pyfunction!(expected_distributed_cost, m)?)?;
    m.add_function(wrap_pyfunction!(normalized_difference, m)?)?;
    m.add_function(wrap_pyfunction!(run_protocol, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}
