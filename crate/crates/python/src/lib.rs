//! Python module `hsideals`.
//!
//! ```python
//! import hsideals
//! j = hsideals.parse_ideal("ring: a b c d e f\ngens: a*b, a*c, a*d, d*e, d*f")
//! j.hs(2)   # ['a*b*c*d', 'a*d*e*f']
//! ```

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hsi_core::text::{format_monomial, parse_ideal_file, parse_monomial};
use hsi_core::{
    betti_table, check, check_homological, CheckOptions, Error, FieldChoice,
    LinearQuotientsAlgorithm, Monomial, MonomialIdeal as CoreIdeal, Outcome, PropertyReport,
    SearchBudget, SearchOutcome, ShiftProperty, Witness,
};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn field_of(s: &str) -> PyResult<FieldChoice> {
    if s == "q" {
        return Ok(FieldChoice::Rationals);
    }
    let p = s
        .strip_prefix("p:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| {
            PyValueError::new_err(format!("field must be 'q' or 'p:<prime>', got {s:?}"))
        })?;
    FieldChoice::prime(p).map_err(to_py)
}

fn algorithm_of(s: &str) -> PyResult<LinearQuotientsAlgorithm> {
    match s {
        "direct" => Ok(LinearQuotientsAlgorithm::Direct),
        "dual" => Ok(LinearQuotientsAlgorithm::DualShelling),
        _ => Err(PyValueError::new_err(format!(
            "algorithm must be 'direct' or 'dual', got {s:?}"
        ))),
    }
}

fn property_of(s: &str) -> PyResult<ShiftProperty> {
    match s {
        "linear-resolution" => Ok(ShiftProperty::LinearResolution),
        "linear-quotients" => Ok(ShiftProperty::LinearQuotients),
        "polymatroidal" => Ok(ShiftProperty::Polymatroidal),
        _ => Err(PyValueError::new_err(format!("unknown property {s:?}"))),
    }
}

/// A monomial ideal with named variables.
#[pyclass(name = "MonomialIdeal", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Ideal {
    variables: Vec<String>,
    ideal: CoreIdeal,
}

impl Ideal {
    fn names(&self, ms: &[Monomial]) -> Vec<String> {
        ms.iter()
            .map(|m| format_monomial(m, &self.variables))
            .collect()
    }

    fn with(&self, ideal: CoreIdeal) -> Ideal {
        Ideal {
            variables: self.variables.clone(),
            ideal,
        }
    }

    fn parse_all(&self, monomials: Vec<String>) -> PyResult<Vec<Monomial>> {
        monomials
            .iter()
            .map(|m| parse_monomial(m, &self.variables).map_err(to_py))
            .collect()
    }

    fn report(&self, report: PropertyReport) -> PyResult<bool> {
        match report.outcome {
            Outcome::Holds => Ok(true),
            Outcome::Fails => Ok(false),
            Outcome::BudgetExceeded => Err(PyRuntimeError::new_err("search budget exceeded")),
        }
    }
}

#[pymethods]
impl Ideal {
    /// Builds an ideal from exponent vectors; variables default to x1..xn.
    #[new]
    #[pyo3(signature = (exponents, variables=None))]
    fn new(exponents: Vec<Vec<u32>>, variables: Option<Vec<String>>) -> PyResult<Self> {
        let arity = match (&variables, exponents.first()) {
            (Some(v), _) => v.len(),
            (None, Some(e)) => e.len(),
            (None, None) => return Err(PyValueError::new_err("need exponents or variables")),
        };
        let gens = exponents
            .into_iter()
            .map(Monomial::from_exponents)
            .collect();
        let ideal = CoreIdeal::new(arity, gens).map_err(to_py)?;
        let variables = variables.unwrap_or_else(|| hsi_core::text::default_variables(arity));
        Ok(Ideal { variables, ideal })
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.variables.clone()
    }

    #[getter]
    fn arity(&self) -> usize {
        self.ideal.arity()
    }

    /// Minimal generators in canonical order.
    fn generators(&self) -> Vec<String> {
        self.names(self.ideal.generators())
    }

    fn exponents(&self) -> Vec<Vec<u32>> {
        self.ideal
            .generators()
            .iter()
            .map(Monomial::multidegree)
            .collect()
    }

    fn contains(&self, monomial: &str) -> PyResult<bool> {
        let u = parse_monomial(monomial, &self.variables).map_err(to_py)?;
        self.ideal.contains(&u).map_err(to_py)
    }

    fn support(&self) -> Vec<String> {
        self.ideal
            .support()
            .into_iter()
            .map(|i| self.variables[i].clone())
            .collect()
    }

    fn bounding_multidegree(&self) -> PyResult<Vec<u32>> {
        self.ideal.bounding_multidegree().map_err(to_py)
    }

    /// `(i, multidegree, beta)` for every nonzero Betti number.
    #[pyo3(signature = (field="q"))]
    fn betti(&self, field: &str) -> PyResult<Vec<(usize, Vec<u32>, u64)>> {
        let table = betti_table(&self.ideal, field_of(field)?);
        Ok(table
            .iter()
            .map(|(i, a, b)| (i, a.multidegree(), b))
            .collect())
    }

    #[pyo3(signature = (i, field="q"))]
    fn shifts(&self, i: isize, field: &str) -> PyResult<Vec<String>> {
        Ok(self.names(&betti_table(&self.ideal, field_of(field)?).shifts(i)))
    }

    /// The homological shift ideal `HS_i` as a new ideal.
    #[pyo3(signature = (i, field="q"))]
    fn hs_ideal(&self, i: isize, field: &str) -> PyResult<Ideal> {
        let table = betti_table(&self.ideal, field_of(field)?);
        Ok(self.with(hsi_core::shifts::shift_ideal_from_table(&table, i)))
    }

    /// Minimal generators of `HS_i`.
    #[pyo3(signature = (i, field="q"))]
    fn hs(&self, i: isize, field: &str) -> PyResult<Vec<String>> {
        Ok(self.hs_ideal(i, field)?.generators())
    }

    fn socle(&self) -> PyResult<Vec<String>> {
        Ok(self.names(&hsi_core::socle(&self.ideal).map_err(to_py)?))
    }

    fn projective_dimension(&self) -> PyResult<usize> {
        hsi_core::projective_dimension(&self.ideal).map_err(to_py)
    }

    fn regularity(&self) -> PyResult<i64> {
        hsi_core::regularity(&self.ideal).map_err(to_py)
    }

    /// Decides `property` ("linear-resolution", "linear-quotients" or
    /// "polymatroidal"), for every `HS_i` when `homological` is set. Raises
    /// `RuntimeError` if the search budget runs out.
    #[pyo3(signature = (property, homological=false, field="q", algorithm="direct", budget=None))]
    fn check(
        &self,
        property: &str,
        homological: bool,
        field: &str,
        algorithm: &str,
        budget: Option<u64>,
    ) -> PyResult<bool> {
        let options = CheckOptions {
            field: field_of(field)?,
            budget: budget.map(SearchBudget).unwrap_or_default(),
            algorithm: algorithm_of(algorithm)?,
        };
        let property = property_of(property)?;
        let report = if homological {
            check_homological(&self.ideal, property, &options)
        } else {
            check(&self.ideal, property, &options)
        };
        self.report(report.map_err(to_py)?)
    }

    /// The first `i` at which the homological check fails, or `None`.
    #[pyo3(signature = (property, field="q", algorithm="direct"))]
    fn homological_failure(
        &self,
        property: &str,
        field: &str,
        algorithm: &str,
    ) -> PyResult<Option<usize>> {
        let options = CheckOptions {
            field: field_of(field)?,
            algorithm: algorithm_of(algorithm)?,
            ..CheckOptions::default()
        };
        let report =
            check_homological(&self.ideal, property_of(property)?, &options).map_err(to_py)?;
        match (report.outcome, report.witness) {
            (Outcome::Holds, _) => Ok(None),
            (Outcome::Fails, Some(Witness::Index(i))) => Ok(Some(i)),
            _ => Err(PyRuntimeError::new_err("search budget exceeded")),
        }
    }

    /// An admissible order of the generators, or `None` if there is none.
    #[pyo3(signature = (budget=None))]
    fn admissible_order(&self, budget: Option<u64>) -> PyResult<Option<Vec<String>>> {
        let budget = budget.map(SearchBudget).unwrap_or_default();
        match hsi_core::admissible_order(&self.ideal, budget).map_err(to_py)? {
            SearchOutcome::Found(order) => Ok(Some(self.names(order.as_slice()))),
            SearchOutcome::NotFound => Ok(None),
            SearchOutcome::BudgetExceeded => Err(PyRuntimeError::new_err("search budget exceeded")),
        }
    }

    fn is_admissible_order(&self, order: Vec<String>) -> PyResult<bool> {
        let order = self.parse_all(order)?;
        hsi_core::is_admissible_order(&self.ideal, &order).map_err(to_py)
    }

    /// The polarization, with variable `v` split into `v_1, ..., v_k`.
    fn polarize(&self) -> PyResult<Ideal> {
        let p = hsi_core::polarize_ideal(&self.ideal).map_err(to_py)?;
        let mut variables = Vec::new();
        for (i, &width) in p.ring_shape().iter().enumerate() {
            for j in 1..=width {
                variables.push(format!("{}_{j}", self.variables[i]));
            }
        }
        let mut seen = std::collections::HashSet::new();
        if !variables.iter().all(|v| seen.insert(v.clone())) {
            variables = hsi_core::text::default_variables(variables.len());
        }
        Ok(Ideal {
            variables,
            ideal: p.ideal().clone(),
        })
    }

    /// The ideal file text for this ideal.
    fn to_text(&self) -> String {
        hsi_core::text::format_ideal_file(&self.ideal, &self.variables)
    }

    fn __len__(&self) -> usize {
        self.ideal.len()
    }

    fn __eq__(&self, other: &Ideal) -> bool {
        self.ideal == other.ideal
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal({})", self.generators().join(", "))
    }
}

/// Parses `ring: ...` / `gens: ...` text.
#[pyfunction]
fn parse_ideal(text: &str) -> PyResult<Ideal> {
    let doc = parse_ideal_file(text).map_err(to_py)?;
    Ok(Ideal {
        variables: doc.variables,
        ideal: doc.ideal,
    })
}

#[pymodule]
fn hsideals(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ideal>()?;
    m.add_function(wrap_pyfunction!(parse_ideal, m)?)?;
    Ok(())
}
