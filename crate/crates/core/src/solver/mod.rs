//! Exact minimisation of the number of distinct vertex weights.
//!
//! Two independent routes are provided: [`brute_force_min_distinct`]
//! enumerates every bijection and serves as the oracle, while
//! [`solve_min_distinct`] is a branch-and-bound search over label slots
//! that tightens an incumbent and stops as soon as it meets the lower bound.
//! [`find_with_at_most_k`] and [`for_each_valid`] reuse the same engine for
//! feasibility and enumeration.

mod brute;
mod engine;
mod symmetry;

use std::ops::ControlFlow;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use brute::{brute_force_min_distinct, BRUTE_FORCE_LIMIT};
pub use symmetry::SlotOrbits;

use crate::bounds;
use crate::graph::Graph;
use crate::labeling::{Labeling, Mode};

/// Largest label universe the branch-and-bound engine accepts.
pub const ENGINE_LIMIT: usize = 127;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("label universe {size} exceeds the limit of {limit}")]
    UniverseTooLarge { size: usize, limit: usize },
    #[error("invalid budget: {0}")]
    Budget(String),
}

/// A labelable position: a vertex (total mode only) or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Vertex(usize),
    Edge(usize),
}

impl Slot {
    /// Position of this slot in the search's slot numbering for `mode`.
    pub fn index(self, g: &Graph, mode: Mode) -> Option<usize> {
        match (self, mode) {
            (Slot::Vertex(v), Mode::Total) if v < g.order() => Some(v),
            (Slot::Edge(e), Mode::Total) if e < g.size() => Some(g.order() + e),
            (Slot::Edge(e), Mode::Edge) if e < g.size() => Some(e),
            _ => None,
        }
    }
}

/// Number of labels (`p + q` or `q`).
pub fn universe_size(g: &Graph, mode: Mode) -> usize {
    match mode {
        Mode::Total => g.order() + g.size(),
        Mode::Edge => g.size(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBudget {
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
    /// Single-threaded, fixed-order search: identical inputs give identical
    /// certificates and node counts.
    pub deterministic: bool,
}

impl SolveBudget {
    pub fn new(
        max_nodes: Option<u64>,
        max_millis: Option<u64>,
        deterministic: bool,
    ) -> Result<Self, SolverError> {
        if max_nodes == Some(0) || max_millis == Some(0) {
            return Err(SolverError::Budget("limits must be positive".into()));
        }
        if max_nodes.is_none() && max_millis.is_none() {
            return Err(SolverError::Budget("at least one limit must be finite".into()));
        }
        Ok(SolveBudget {
            max_nodes,
            max_millis,
            deterministic,
        })
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SolveBudget {
            max_nodes: Some(max_nodes.max(1)),
            max_millis: None,
            deterministic: true,
        }
    }

    pub fn millis(max_millis: u64) -> Self {
        SolveBudget {
            max_nodes: None,
            max_millis: Some(max_millis.max(1)),
            deterministic: true,
        }
    }

    pub fn parallel(self) -> Self {
        SolveBudget {
            deterministic: false,
            ..self
        }
    }

    pub(crate) fn deadline(&self) -> Option<Duration> {
        self.max_millis.map(Duration::from_millis)
    }
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_nodes: Some(500_000_000),
            max_millis: Some(60_000),
            deterministic: true,
        }
    }
}

/// Knobs that do not change the answer, only how fast it is reached.
#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Disable every pruning rule and check only complete labelings.
    pub no_pruning: bool,
    /// Slot orbits under graph automorphisms; label 1 is only tried on one
    /// representative per orbit.
    pub symmetry: Option<SlotOrbits>,
    /// Slots whose label is fixed in advance.
    pub pins: Vec<(Slot, u64)>,
}

impl SearchOptions {
    pub fn with_symmetry(orbits: Option<SlotOrbits>) -> Self {
        SearchOptions {
            symmetry: orbits,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    /// The search closed; `upper` is the minimum.
    Exact,
    /// Budget ran out with an incumbent.
    LowerUpper,
    /// The search closed without finding any valid labeling.
    Infeasible,
    /// Budget ran out before any valid labeling was found.
    Exhausted,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub lower: usize,
    pub upper: Option<usize>,
    /// Witness for `upper`.
    pub certificate: Option<Labeling>,
    pub nodes_explored: u64,
}

impl SolveResult {
    pub fn exact(&self) -> Option<usize> {
        match self.status {
            SolveStatus::Exact => self.upper,
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Found(Labeling),
    /// The search closed: no valid labeling within the bound exists.
    None,
    /// Budget exhausted first.
    Unknown,
}

#[derive(Debug, Clone)]
pub struct FeasibilityResult {
    pub outcome: Feasibility,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerationSummary {
    /// Every labeling was visited (no budget stop, no early break).
    pub closed: bool,
    pub nodes_explored: u64,
}

/// Lower bound used to stop minimisation early: `max(χ, isolated)` in
/// total mode, `χ` in edge mode.
pub fn initial_lower_bound(g: &Graph, mode: Mode) -> usize {
    let exact = match mode {
        Mode::Total => bounds::chi_lat_lower_bound(g).ok(),
        Mode::Edge => bounds::chromatic_number(g).ok(),
    };
    exact.unwrap_or_else(|| {
        let chi = match (g.order(), g.size()) {
            (0, _) => 0,
            (_, 0) => 1,
            _ => 2,
        };
        match mode {
            Mode::Total => chi.max(g.isolated_count()),
            Mode::Edge => chi,
        }
    })
}

pub fn solve_min_distinct(g: &Graph, mode: Mode, budget: SolveBudget) -> SolveResult {
    solve_min_distinct_with(g, mode, budget, &SearchOptions::default())
}

pub fn solve_min_distinct_with(
    g: &Graph,
    mode: Mode,
    budget: SolveBudget,
    opts: &SearchOptions,
) -> SolveResult {
    let lower = initial_lower_bound(g, mode);
    if mode == Mode::Edge && g.has_isolated_edge() {
        return SolveResult {
            status: SolveStatus::Infeasible,
            lower,
            upper: None,
            certificate: None,
            nodes_explored: 0,
        };
    }
    if universe_size(g, mode) > ENGINE_LIMIT {
        return SolveResult {
            status: SolveStatus::Exhausted,
            lower,
            upper: None,
            certificate: None,
            nodes_explored: 0,
        };
    }
    let out = engine::run(g, mode, engine::Goal::Minimize { lower }, budget, opts, None);
    let (status, upper, certificate) = match (out.best, out.closed) {
        (Some((d, lab)), true) => (SolveStatus::Exact, Some(d), Some(lab)),
        (Some((d, lab)), false) => (SolveStatus::LowerUpper, Some(d), Some(lab)),
        (None, true) => (SolveStatus::Infeasible, None, None),
        (None, false) => (SolveStatus::Exhausted, None, None),
    };
    SolveResult {
        status,
        lower,
        upper,
        certificate,
        nodes_explored: out.nodes,
    }
}

pub fn find_with_at_most_k(g: &Graph, k: usize, mode: Mode, budget: SolveBudget) -> FeasibilityResult {
    find_with_at_most_k_with(g, k, mode, budget, &SearchOptions::default())
}

pub fn find_with_at_most_k_with(
    g: &Graph,
    k: usize,
    mode: Mode,
    budget: SolveBudget,
    opts: &SearchOptions,
) -> FeasibilityResult {
    let none = |outcome| FeasibilityResult {
        outcome,
        nodes_explored: 0,
    };
    if mode == Mode::Edge && g.has_isolated_edge() {
        return none(Feasibility::None);
    }
    if universe_size(g, mode) > ENGINE_LIMIT {
        return none(Feasibility::Unknown);
    }
    let out = engine::run(g, mode, engine::Goal::AtMost(k), budget, opts, None);
    let outcome = match (out.best, out.closed) {
        (Some((_, lab)), _) => Feasibility::Found(lab),
        (None, true) => Feasibility::None,
        (None, false) => Feasibility::Unknown,
    };
    FeasibilityResult {
        outcome,
        nodes_explored: out.nodes,
    }
}

/// Visits every valid labeling with at most `max_distinct` weights (all
/// valid labelings when `None`) in search order, until the callback breaks
/// or the budget runs out. Always single-threaded.
pub fn for_each_valid<F>(
    g: &Graph,
    mode: Mode,
    max_distinct: Option<usize>,
    budget: SolveBudget,
    opts: &SearchOptions,
    mut visit: F,
) -> EnumerationSummary
where
    F: FnMut(&Labeling) -> ControlFlow<()>,
{
    if universe_size(g, mode) > ENGINE_LIMIT {
        return EnumerationSummary {
            closed: false,
            nodes_explored: 0,
        };
    }
    let budget = SolveBudget {
        deterministic: true,
        ..budget
    };
    let k = max_distinct.unwrap_or(usize::MAX);
    let out = engine::run(g, mode, engine::Goal::Enumerate(k), budget, opts, Some(&mut visit));
    EnumerationSummary {
        closed: out.closed,
        nodes_explored: out.nodes,
    }
}
