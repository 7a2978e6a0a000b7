//! Python bindings: load models, check properties, and compute causality
//! reports from Python.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use lassocause::causality::compute_causes_for;
use lassocause::oracle::{verify_model, OracleConfig};
use lassocause::report::ExplainReport;
use lassocause::testutil::lassos_over_words;
use lassocause::{
    complete_terminal_states, parse_ltl, parse_model, partition, Verdict,
};

fn value_err(err: lassocause::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// A terminal-state-completed transition system ready for analysis.
#[pyclass]
struct Model {
    ts: lassocause::TransitionSystem,
}

#[pymethods]
impl Model {
    /// Parses the line-based model format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Model> {
        let ts = parse_model(text).map_err(value_err)?;
        Ok(Model {
            ts: complete_terminal_states(&ts),
        })
    }

    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Model> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PyValueError::new_err(format!("{path}: {e}")))?;
        Model::from_text(&text)
    }

    fn state_count(&self) -> usize {
        self.ts.state_count()
    }

    fn action_names(&self) -> Vec<String> {
        self.ts.action_names_sorted()
    }

    /// All elementary lassos as `(stem, loop)` action words.
    #[pyo3(signature = (max_lassos = 100_000))]
    fn lassos(&self, max_lassos: usize) -> PyResult<Vec<(Vec<String>, Vec<String>)>> {
        let lassos = lassocause::enumerate_lassos(&self.ts, max_lassos).map_err(value_err)?;
        Ok(lassos.iter().map(|l| l.word(&self.ts)).collect())
    }

    /// Checks the property; returns `None` when it holds, otherwise the
    /// first violating lasso as `(stem, loop)` action words.
    #[pyo3(signature = (property, max_lassos = 100_000))]
    fn check(
        &self,
        property: &str,
        max_lassos: usize,
    ) -> PyResult<Option<(Vec<String>, Vec<String>)>> {
        let phi = parse_ltl(property).map_err(value_err)?;
        match lassocause::ltl::check_model(&self.ts, &phi, max_lassos).map_err(value_err)? {
            Verdict::Holds => Ok(None),
            Verdict::Violated(w) => Ok(Some(w.word(&self.ts))),
        }
    }

    /// Full causality-class report as JSON.
    #[pyo3(signature = (property, max_lassos = 100_000))]
    fn explain_json(&self, property: &str, max_lassos: usize) -> PyResult<String> {
        let phi = parse_ltl(property).map_err(value_err)?;
        let universe = partition(&self.ts, &phi, max_lassos).map_err(value_err)?;
        let analysis = compute_causes_for(&self.ts, &universe).map_err(value_err)?;
        Ok(ExplainReport::new(&self.ts, &universe, &analysis, property).to_json())
    }

    /// Runs the brute-force differential suite; returns `(passed, details)`.
    #[pyo3(signature = (property, max_lassos = 100_000))]
    fn verify(&self, property: &str, max_lassos: usize) -> PyResult<(bool, Vec<String>)> {
        let phi = parse_ltl(property).map_err(value_err)?;
        let checks = verify_model(&self.ts, &phi, max_lassos, &OracleConfig::default())
            .map_err(value_err)?;
        let passed = checks.iter().all(|c| c.passed);
        let lines = checks
            .into_iter()
            .map(|c| format!("{}: {} ({})", c.name, if c.passed { "ok" } else { "FAILED" }, c.detail))
            .collect();
        Ok((passed, lines))
    }
}

/// Parses a property and returns its normalized text, with sugar expanded.
#[pyfunction]
fn normalize_ltl(text: &str) -> PyResult<String> {
    Ok(parse_ltl(text).map_err(value_err)?.to_string())
}

/// Parses an event-order formula, enforcing stratification, and returns its
/// normalized text.
#[pyfunction]
fn normalize_eol(text: &str) -> PyResult<String> {
    Ok(lassocause::eol::parse_eol(text).map_err(value_err)?.to_string())
}

/// Evaluates an event-order formula on the lasso word `stem (cycle)^w`,
/// over the given event alphabet.
#[pyfunction]
#[pyo3(signature = (formula, stem, cycle, alphabet = vec![]))]
fn eval_eol_on_word(
    formula: &str,
    stem: Vec<String>,
    cycle: Vec<String>,
    alphabet: Vec<String>,
) -> PyResult<bool> {
    if cycle.is_empty() {
        return Err(PyValueError::new_err("cycle must be nonempty"));
    }
    let xi = lassocause::eol::parse_infinite(formula).map_err(value_err)?;
    let letters: Vec<&str> = alphabet.iter().map(|s| s.as_str()).collect();
    let stem_refs: Vec<&str> = stem.iter().map(|s| s.as_str()).collect();
    let cycle_refs: Vec<&str> = cycle.iter().map(|s| s.as_str()).collect();
    let (ts, lassos) = lassos_over_words(&letters, &[(&stem_refs, &cycle_refs)]);
    lassocause::eol::eval_infinite(&ts, &lassos[0], &xi, None).map_err(value_err)
}

/// Evaluates a property on the lasso word `stem (cycle)^w` over action
/// events.
#[pyfunction]
#[pyo3(signature = (property, stem, cycle, alphabet = vec![]))]
fn eval_ltl_on_word(
    property: &str,
    stem: Vec<String>,
    cycle: Vec<String>,
    alphabet: Vec<String>,
) -> PyResult<bool> {
    if cycle.is_empty() {
        return Err(PyValueError::new_err("cycle must be nonempty"));
    }
    let phi = parse_ltl(property).map_err(value_err)?;
    let letters: Vec<&str> = alphabet.iter().map(|s| s.as_str()).collect();
    let stem_refs: Vec<&str> = stem.iter().map(|s| s.as_str()).collect();
    let cycle_refs: Vec<&str> = cycle.iter().map(|s| s.as_str()).collect();
    let (ts, lassos) = lassos_over_words(&letters, &[(&stem_refs, &cycle_refs)]);
    lassocause::eval_ltl(&ts, &phi, &lassos[0]).map_err(value_err)
}

#[pymodule]
fn lassocause_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Model>()?;
    m.add_function(wrap_pyfunction!(normalize_ltl, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_eol, m)?)?;
    m.add_function(wrap_pyfunction!(eval_eol_on_word, m)?)?;
    m.add_function(wrap_pyfunction!(eval_ltl_on_word, m)?)?;
    Ok(())
}
