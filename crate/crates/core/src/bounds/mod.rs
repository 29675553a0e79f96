//! Lower and upper bounds for χ_lat and the table of published values.
//!
//! The lower bound is `max(χ(G), #isolated vertices)`: weights along an edge
//! differ, so the weight classes form a proper colouring, and isolated
//! vertices carry pairwise distinct labels as their weights. The upper bound
//! comes from the cone: an edge labeling of `K₁ ∨ G` with `c` distinct sums
//! yields a total labeling of `G` with `c − 1` distinct weights.

mod chromatic;
mod known;

use serde::Serialize;
use thiserror::Error;

pub use chromatic::{chromatic_number, CHROMATIC_LIMIT};
pub use known::{known_value, KnownResult, KnownStatus, Quantity};

use crate::graph::{cone, FamilySpec, Graph, VertexId};
use crate::labeling::{Labeling, Mode, TotalLabeling};
use crate::solver::{self, SolveBudget, SolveStatus};
use crate::transforms;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("graph of order {order} exceeds the exact colouring limit of {limit}")]
    TooLarge { order: usize, limit: usize },
}

pub fn chi_lat_lower_bound(g: &Graph) -> Result<usize, BoundsError> {
    Ok(chromatic_number(g)?.max(g.isolated_count()))
}

/// Upper bound obtained through the cone `K₁ ∨ G`.
#[derive(Debug, Clone)]
pub struct ConeBound {
    /// Upper bound on χ_lat(G).
    pub value: usize,
    /// True when the cone's χ_la was solved exactly, so `value + 1` is it.
    pub cone_exact: bool,
    /// Total labeling of `G` with exactly `value` distinct weights.
    pub certificate: TotalLabeling,
}

pub fn chi_lat_upper_bound_via_cone(g: &Graph, budget: SolveBudget) -> Option<ConeBound> {
    let k1g = cone(g);
    let apex = VertexId(g.order());
    let result = solver::solve_min_distinct(&k1g, Mode::Edge, budget);
    let cone_exact = match result.status {
        SolveStatus::Exact => true,
        SolveStatus::LowerUpper => false,
        SolveStatus::Infeasible | SolveStatus::Exhausted => return None,
    };
    let Some(Labeling::Edge(edge_labeling)) = result.certificate else {
        return None;
    };
    let out = transforms::cone_to_total(&k1g, &edge_labeling, apex).ok()?;
    Some(ConeBound {
        value: result.upper? - 1,
        cone_exact,
        certificate: out.labeling,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperSource {
    ConeSolver,
    KnownTable,
}

#[derive(Debug, Clone, Serialize)]
pub struct UpperBound {
    pub value: usize,
    pub source: UpperSource,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub chromatic: usize,
    pub isolated_count: usize,
    pub lower: usize,
    pub upper: Option<UpperBound>,
    pub known: Option<KnownResult>,
    pub notes: Vec<String>,
}

/// Collects every bound available for `g`. `family`, when given, must be
/// the spec `g` was generated from; it unlocks the table lookup.
pub fn bounds_report(
    g: &Graph,
    family: Option<FamilySpec>,
    budget: SolveBudget,
) -> Result<BoundsReport, BoundsError> {
    let chromatic = chromatic_number(g)?;
    let isolated_count = g.isolated_count();
    let lower = chromatic.max(isolated_count);
    let mut notes = vec![format!(
        "lower = max(chromatic number {chromatic}, isolated vertices {isolated_count})"
    )];

    let mut upper: Option<UpperBound> = None;
    match chi_lat_upper_bound_via_cone(g, budget) {
        Some(cb) => {
            notes.push(format!(
                "cone K1 v G: chi_la {} {} gives chi_lat <= {}",
                if cb.cone_exact { "=" } else { "<=" },
                cb.value + 1,
                cb.value
            ));
            upper = Some(UpperBound {
                value: cb.value,
                source: UpperSource::ConeSolver,
            });
        }
        None => notes.push("cone K1 v G: no labeling found within budget or none exists".into()),
    }

    let known = family.and_then(known_value);
    if let Some(k) = &known {
        notes.push(format!("known: {k}"));
        if k.quantity == Quantity::ChiLat && k.is_proven() && upper.as_ref().map_or(true, |u| k.hi < u.value) {
            upper = Some(UpperBound {
                value: k.hi,
                source: UpperSource::KnownTable,
            });
        }
        if !k.is_proven() {
            notes.push("conjectured value, not used as a bound".into());
        }
    }
    if upper.as_ref().is_some_and(|u| u.value == lower) {
        notes.push(format!("bounds meet: chi_lat = {lower}"));
    }
    Ok(BoundsReport {
        chromatic,
        isolated_count,
        lower,
        upper,
        known,
        notes,
    })
}
