//! Total and edge labelings, induced vertex weights, and the local
//! antimagic checks.
//!
//! A total labeling assigns `1..=p+q` bijectively to vertices and edges; the
//! weight of a vertex is its own label plus the labels of its incident
//! edges. An edge labeling assigns `1..=q` to the edges only and the weight
//! is the sum over incident edges (zero for isolated vertices). Either is
//! *local antimagic* when adjacent vertices always get different weights.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Which labeling definition is in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Labels on vertices and edges.
    Total,
    /// Labels on edges only.
    Edge,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Total => "total",
            Mode::Edge => "edge",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "total" => Ok(Mode::Total),
            "edge" => Ok(Mode::Edge),
            _ => Err(format!("unknown mode {s:?} (expected total or edge)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TotalLabeling {
    pub vertex_labels: Vec<u64>,
    pub edge_labels: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeLabeling {
    pub edge_labels: Vec<u64>,
}

/// Either kind of labeling, as produced by the search.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Labeling {
    Total(TotalLabeling),
    Edge(EdgeLabeling),
}

impl Labeling {
    pub fn mode(&self) -> Mode {
        match self {
            Labeling::Total(_) => Mode::Total,
            Labeling::Edge(_) => Mode::Edge,
        }
    }

    pub fn vertex_labels(&self) -> &[u64] {
        match self {
            Labeling::Total(f) => &f.vertex_labels,
            Labeling::Edge(_) => &[],
        }
    }

    pub fn edge_labels(&self) -> &[u64] {
        match self {
            Labeling::Total(f) => &f.edge_labels,
            Labeling::Edge(g) => &g.edge_labels,
        }
    }

    pub fn verify(&self, g: &Graph) -> VerifyReport {
        match self {
            Labeling::Total(f) => verify_total(g, f),
            Labeling::Edge(e) => verify_edge(g, e),
        }
    }
}

impl TotalLabeling {
    /// Reads a path labeling written in the interleaved order
    /// `v1, e1, v2, e2, ..., vn`.
    pub fn from_path_sequence(seq: &[u64]) -> Option<Self> {
        if seq.len() % 2 == 0 {
            return None;
        }
        Some(TotalLabeling {
            vertex_labels: seq.iter().step_by(2).copied().collect(),
            edge_labels: seq.iter().skip(1).step_by(2).copied().collect(),
        })
    }

    /// Inverse of [`TotalLabeling::from_path_sequence`].
    pub fn to_path_sequence(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.vertex_labels.len() + self.edge_labels.len());
        for (i, &v) in self.vertex_labels.iter().enumerate() {
            out.push(v);
            if let Some(&e) = self.edge_labels.get(i) {
                out.push(e);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub weights: Vec<u64>,
    pub distinct_count: usize,
    /// All adjacent pairs have distinct weights.
    pub valid: bool,
}

/// Problems found in a label multiset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("expected {expected} {what} labels, got {found}")]
    Length {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("labels are not a bijection onto 1..={max}: duplicates {duplicates:?}, missing {missing:?}, out of range {out_of_range:?}")]
    NotBijective {
        max: u64,
        duplicates: Vec<u64>,
        missing: Vec<u64>,
        out_of_range: Vec<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub profile: WeightProfile,
    /// Edges `(u, v)` whose endpoints received equal weights.
    pub violations: Vec<(usize, usize)>,
    pub bijection_ok: bool,
    /// Human-readable description of label-set problems, if any.
    pub issues: Vec<String>,
}

impl VerifyReport {
    pub fn valid(&self) -> bool {
        self.bijection_ok && self.violations.is_empty()
    }
}

/// Checks that `labels` is exactly `{1, ..., labels.len()}`.
pub fn check_bijection(labels: &[u64]) -> Result<(), LabelError> {
    let max = labels.len() as u64;
    let mut seen = vec![false; labels.len() + 1];
    let mut duplicates = BTreeSet::new();
    let mut out_of_range = BTreeSet::new();
    for &l in labels {
        if l == 0 || l > max {
            out_of_range.insert(l);
        } else if std::mem::replace(&mut seen[l as usize], true) {
            duplicates.insert(l);
        }
    }
    let missing: Vec<u64> = (1..=max).filter(|&l| !seen[l as usize]).collect();
    if duplicates.is_empty() && out_of_range.is_empty() && missing.is_empty() {
        Ok(())
    } else {
        Err(LabelError::NotBijective {
            max,
            duplicates: duplicates.into_iter().collect(),
            missing,
            out_of_range: out_of_range.into_iter().collect(),
        })
    }
}

fn check_lengths(g: &Graph, vertex: Option<&[u64]>, edge: &[u64]) -> Result<(), LabelError> {
    if let Some(vl) = vertex {
        if vl.len() != g.order() {
            return Err(LabelError::Length {
                what: "vertex",
                expected: g.order(),
                found: vl.len(),
            });
        }
    }
    if edge.len() != g.size() {
        return Err(LabelError::Length {
            what: "edge",
            expected: g.size(),
            found: edge.len(),
        });
    }
    Ok(())
}

fn profile(g: &Graph, weights: Vec<u64>) -> (WeightProfile, Vec<(usize, usize)>) {
    let violations: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| weights[u] == weights[v])
        .collect();
    let distinct_count = weights.iter().collect::<BTreeSet<_>>().len();
    (
        WeightProfile {
            weights,
            distinct_count,
            valid: violations.is_empty(),
        },
        violations,
    )
}

fn raw_total_weights(g: &Graph, f: &TotalLabeling) -> Vec<u64> {
    let mut w = f.vertex_labels.clone();
    for (&(u, v), &l) in g.edges().iter().zip(&f.edge_labels) {
        w[u] += l;
        w[v] += l;
    }
    w
}

fn raw_edge_weights(g: &Graph, labels: &[u64]) -> Vec<u64> {
    let mut w = vec![0; g.order()];
    for (&(u, v), &l) in g.edges().iter().zip(labels) {
        w[u] += l;
        w[v] += l;
    }
    w
}

/// Weights `w(v) = f(v) + Σ f(e)` over edges at `v`.
pub fn total_weights(g: &Graph, f: &TotalLabeling) -> Result<WeightProfile, LabelError> {
    check_lengths(g, Some(&f.vertex_labels), &f.edge_labels)?;
    let all: Vec<u64> = f.vertex_labels.iter().chain(&f.edge_labels).copied().collect();
    check_bijection(&all)?;
    let w = raw_total_weights(g, f);
    debug_assert_eq!(
        w.iter().sum::<u64>(),
        f.vertex_labels.iter().sum::<u64>() + 2 * f.edge_labels.iter().sum::<u64>()
    );
    Ok(profile(g, w).0)
}

/// Weights `g⁺(v) = Σ g(e)` over edges at `v`.
pub fn edge_weights(g: &Graph, lab: &EdgeLabeling) -> Result<WeightProfile, LabelError> {
    check_lengths(g, None, &lab.edge_labels)?;
    check_bijection(&lab.edge_labels)?;
    let w = raw_edge_weights(g, &lab.edge_labels);
    debug_assert_eq!(
        w.iter().sum::<u64>(),
        (g.size() * (g.size() + 1)) as u64
    );
    Ok(profile(g, w).0)
}

fn report(
    g: &Graph,
    lengths: Result<(), LabelError>,
    all: Vec<u64>,
    weights: impl FnOnce() -> Vec<u64>,
) -> VerifyReport {
    if let Err(e) = lengths {
        return VerifyReport {
            profile: WeightProfile {
                weights: Vec::new(),
                distinct_count: 0,
                valid: false,
            },
            violations: Vec::new(),
            bijection_ok: false,
            issues: vec![e.to_string()],
        };
    }
    let issues = match check_bijection(&all) {
        Ok(()) => Vec::new(),
        Err(e) => vec![e.to_string()],
    };
    let (profile, violations) = profile(g, weights());
    VerifyReport {
        profile,
        violations,
        bijection_ok: issues.is_empty(),
        issues,
    }
}

/// Full check of a total labeling. Malformed input is reported, not raised.
pub fn verify_total(g: &Graph, f: &TotalLabeling) -> VerifyReport {
    let all = f.vertex_labels.iter().chain(&f.edge_labels).copied().collect();
    report(
        g,
        check_lengths(g, Some(&f.vertex_labels), &f.edge_labels),
        all,
        || raw_total_weights(g, f),
    )
}

/// Full check of an edge labeling. Malformed input is reported, not raised.
pub fn verify_edge(g: &Graph, lab: &EdgeLabeling) -> VerifyReport {
    report(
        g,
        check_lengths(g, None, &lab.edge_labels),
        lab.edge_labels.clone(),
        || raw_edge_weights(g, &lab.edge_labels),
    )
}
