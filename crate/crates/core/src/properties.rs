//! Linear resolution, linear quotients, polymatroidality, and their
//! homological variants (the property holds for every `HS_i(I)`,
//! `0 ≤ i ≤ pd(I)`).

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polarization::polarize_ideal;
use crate::resolution::{betti_table, BettiTable, FieldChoice};
use crate::search::{find_ordering, SearchBudget, SearchOutcome};
use crate::shifts::shift_ideal_from_table;
use crate::simplicial::alexander_dual;

/// How [`has_linear_quotients`] decides the property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LinearQuotientsAlgorithm {
    /// Backtracking over generator orders, extending only by generators whose
    /// colon against the prefix is generated by variables.
    #[default]
    Direct,
    /// Polarize, take the Alexander dual of `I^℘`, and search for a shelling.
    DualShelling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckOptions {
    pub field: FieldChoice,
    pub budget: SearchBudget,
    pub algorithm: LinearQuotientsAlgorithm,
}

/// An order `u_1, ..., u_m` of `G(I)` in which every colon ideal
/// `(u_1, ..., u_{k-1}) : u_k` is generated by variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleOrder(Vec<Monomial>);

impl AdmissibleOrder {
    /// Validates `order` against `ideal`.
    pub fn new(ideal: &MonomialIdeal, order: Vec<Monomial>) -> Result<Self> {
        if is_admissible_order(ideal, &order)? {
            Ok(AdmissibleOrder(order))
        } else {
            Err(Error::Input("not an admissible order".into()))
        }
    }

    pub fn as_slice(&self) -> &[Monomial] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Monomial> {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    BudgetExceeded,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "true",
            Outcome::Fails => "false",
            Outcome::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Order(AdmissibleOrder),
    /// For homological checks: the smallest `i` where `HS_i` fails, or where
    /// the search budget ran out.
    Index(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    fn plain(holds: bool) -> Self {
        PropertyReport {
            outcome: if holds {
                Outcome::Holds
            } else {
                Outcome::Fails
            },
            witness: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn budget_exceeded(&self) -> bool {
        self.outcome == Outcome::BudgetExceeded
    }

    pub fn order(&self) -> Option<&AdmissibleOrder> {
        match &self.witness {
            Some(Witness::Order(o)) => Some(o),
            _ => None,
        }
    }

    pub fn failing_index(&self) -> Option<usize> {
        match self.witness {
            Some(Witness::Index(i)) => Some(i),
            _ => None,
        }
    }
}

/// The three base properties of the shift hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftProperty {
    LinearResolution,
    LinearQuotients,
    Polymatroidal,
}

fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Domain(
            "property checks need a proper nonzero ideal".into(),
        ));
    }
    Ok(())
}

/// `indeg(I) = reg(I)`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldChoice) -> Result<bool> {
    require_proper_nonzero(ideal)?;
    Ok(linear_resolution_from_table(
        ideal,
        &betti_table(ideal, field),
    ))
}

fn linear_resolution_from_table(ideal: &MonomialIdeal, table: &BettiTable) -> bool {
    let indeg = ideal.indeg().expect("nonzero") as i64;
    table.regularity() == Some(indeg)
}

/// Whether the colon `(prefix) : u` is generated by variables.
fn colon_is_linear(prefix: &[&Monomial], u: &Monomial) -> bool {
    let quotients: Vec<Monomial> = prefix.iter().map(|v| v.colon_unchecked(u)).collect();
    let linear: HashSet<usize> = quotients
        .iter()
        .filter(|q| q.degree() == 1)
        .map(|q| q.support()[0])
        .collect();
    quotients
        .iter()
        .all(|q| q.support().iter().any(|v| linear.contains(v)))
}

/// `isAdmissibleOrder(I, L)`. Errors if `L` is not a permutation of `G(I)`.
pub fn is_admissible_order(ideal: &MonomialIdeal, order: &[Monomial]) -> Result<bool> {
    if let Some(bad) = order.iter().find(|u| u.arity() != ideal.arity()) {
        return Err(crate::error::arity_mismatch(ideal.arity(), bad.arity()));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != ideal.generators() {
        return Err(Error::Input(
            "the list is not a permutation of the minimal generators".into(),
        ));
    }
    let refs: Vec<&Monomial> = order.iter().collect();
    Ok((1..refs.len()).all(|k| colon_is_linear(&refs[..k], refs[k])))
}

fn direct_search(ideal: &MonomialIdeal, budget: SearchBudget) -> SearchOutcome<Vec<Monomial>> {
    let gens = ideal.generators();
    find_ordering(gens.len(), budget, |prefix, next| {
        let placed: Vec<&Monomial> = prefix.iter().map(|&j| &gens[j]).collect();
        colon_is_linear(&placed, &gens[next])
    })
    .map(|idx| idx.into_iter().map(|j| gens[j].clone()).collect())
}

/// Steps: polarize, dualize, shell, then read the shelling back as an order
/// of `G(I)` (facet `F` ↦ the generator whose polarization is `x_{[n']∖F}`).
fn dual_shelling_search(
    ideal: &MonomialIdeal,
    budget: SearchBudget,
) -> Result<SearchOutcome<Vec<Monomial>>> {
    let polarized = polarize_ideal(ideal)?;
    let dual = alexander_dual(polarized.ideal())?;
    let n = polarized.ideal().arity();
    let shelling = match dual.find_shelling_order(budget)? {
        SearchOutcome::Found(s) => s,
        SearchOutcome::NotFound => return Ok(SearchOutcome::NotFound),
        SearchOutcome::BudgetExceeded => return Ok(SearchOutcome::BudgetExceeded),
    };
    let order = shelling
        .iter()
        .map(|facet| {
            let complement: Vec<usize> = (0..n).filter(|v| !facet.contains(v)).collect();
            polarized.depolarize(&Monomial::squarefree(n, &complement))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchOutcome::Found(order))
}

/// Whether `ideal` has linear quotients, decided by the chosen algorithm. When the property
/// holds the report carries an admissible order as witness.
pub fn has_linear_quotients(
    ideal: &MonomialIdeal,
    options: &CheckOptions,
) -> Result<PropertyReport> {
    require_proper_nonzero(ideal)?;
    let outcome = match options.algorithm {
        LinearQuotientsAlgorithm::Direct => direct_search(ideal, options.budget),
        LinearQuotientsAlgorithm::DualShelling => dual_shelling_search(ideal, options.budget)?,
    };
    Ok(match outcome {
        SearchOutcome::Found(order) => {
            if !is_admissible_order(ideal, &order)? {
                return Err(Error::Invariant(format!(
                    "search returned a non-admissible order for {ideal}"
                )));
            }
            PropertyReport {
                outcome: Outcome::Holds,
                witness: Some(Witness::Order(AdmissibleOrder(order))),
            }
        }
        SearchOutcome::NotFound => PropertyReport::plain(false),
        SearchOutcome::BudgetExceeded => PropertyReport {
            outcome: Outcome::BudgetExceeded,
            witness: None,
        },
    })
}

/// `admissibleOrder(I)` through the shelling of the dual of `I^℘`.
pub fn admissible_order(
    ideal: &MonomialIdeal,
    budget: SearchBudget,
) -> Result<SearchOutcome<AdmissibleOrder>> {
    let options = CheckOptions {
        budget,
        algorithm: LinearQuotientsAlgorithm::DualShelling,
        ..CheckOptions::default()
    };
    let report = has_linear_quotients(ideal, &options)?;
    Ok(match report.outcome {
        Outcome::Holds => match report.witness {
            Some(Witness::Order(o)) => SearchOutcome::Found(o),
            _ => unreachable!("holding linear-quotients reports carry an order"),
        },
        Outcome::Fails => SearchOutcome::NotFound,
        Outcome::BudgetExceeded => SearchOutcome::BudgetExceeded,
    })
}

/// Equigenerated plus the exchange property on `G(I)`.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<bool> {
    require_proper_nonzero(ideal)?;
    if !ideal.is_equigenerated() {
        return Ok(false);
    }
    let gens = ideal.generators();
    let members = ideal.generator_set();
    let n = ideal.arity();
    for u in gens {
        for v in gens {
            for i in 0..n {
                if u.degree_in(i) <= v.degree_in(i) {
                    continue;
                }
                let reduced = u.div_variable(i).expect("deg_i(u) > 0");
                let exchanged = (0..n).any(|j| {
                    u.degree_in(j) < v.degree_in(j) && members.contains(&reduced.mul_variable(j))
                });
                if !exchanged {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Evaluates a base property on a single ideal.
pub fn check(
    ideal: &MonomialIdeal,
    property: ShiftProperty,
    options: &CheckOptions,
) -> Result<PropertyReport> {
    match property {
        ShiftProperty::LinearResolution => {
            has_linear_resolution(ideal, options.field).map(PropertyReport::plain)
        }
        ShiftProperty::LinearQuotients => has_linear_quotients(ideal, options),
        ShiftProperty::Polymatroidal => is_polymatroidal(ideal).map(PropertyReport::plain),
    }
}

/// Evaluates `property` on `HS_i(I)` for `i = 0, ..., pd(I)`, all shift ideals
/// coming from one Betti table. Stops at the first `i` that fails or runs out
/// of budget and reports it as the witness.
pub fn check_homological(
    ideal: &MonomialIdeal,
    property: ShiftProperty,
    options: &CheckOptions,
) -> Result<PropertyReport> {
    require_proper_nonzero(ideal)?;
    let table = betti_table(ideal, options.field);
    let pd = table.projective_dimension().expect("nonzero ideal");
    for i in 0..=pd {
        let shifted = shift_ideal_from_table(&table, i as isize);
        let report = if i == 0 && property == ShiftProperty::LinearResolution {
            PropertyReport::plain(linear_resolution_from_table(ideal, &table))
        } else {
            check(&shifted, property, options)?
        };
        if report.outcome != Outcome::Holds {
            return Ok(PropertyReport {
                outcome: report.outcome,
                witness: Some(Witness::Index(i)),
            });
        }
    }
    Ok(PropertyReport::plain(true))
}

pub fn has_homological_linear_resolution(
    ideal: &MonomialIdeal,
    field: FieldChoice,
) -> Result<PropertyReport> {
    let options = CheckOptions {
        field,
        ..CheckOptions::default()
    };
    check_homological(ideal, ShiftProperty::LinearResolution, &options)
}

pub fn has_homological_linear_quotients(
    ideal: &MonomialIdeal,
    options: &CheckOptions,
) -> Result<PropertyReport> {
    check_homological(ideal, ShiftProperty::LinearQuotients, options)
}

pub fn is_homological_polymatroidal(
    ideal: &MonomialIdeal,
    field: FieldChoice,
) -> Result<PropertyReport> {
    let options = CheckOptions {
        field,
        ..CheckOptions::default()
    };
    check_homological(ideal, ShiftProperty::Polymatroidal, &options)
}
