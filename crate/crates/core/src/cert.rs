//! Self-contained JSON certificates and DOT export.
//!
//! A certificate embeds the graph, the labels, and the claimed weights and
//! distinct count, so it can be re-checked with nothing else at hand.
//! Unknown fields are kept and written back unchanged.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{EdgeLabeling, Labeling, Mode, TotalLabeling, VerifyReport};

pub const TOOL: &str = concat!("latlab ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("integrity error: {}", .0.join("; "))]
    Integrity(Vec<String>),
}

fn schema(path: &str, message: impl Into<String>) -> CertError {
    CertError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub p: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelsDoc {
    pub vertex_labels: Vec<u64>,
    pub edge_labels: Vec<u64>,
    /// Path labelings only: labels in the order v1, e1, v2, e2, ..., vn.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interleaved_sequence: Option<Vec<u64>>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub source: String,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: GraphDoc,
    pub mode: Mode,
    pub labels: LabelsDoc,
    pub weights: Vec<u64>,
    pub distinct: usize,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Certificate {
    /// Builds a certificate; weights and distinct count are computed here.
    pub fn new(g: &Graph, labeling: &Labeling, source: impl Into<String>) -> Self {
        let report = labeling.verify(g);
        Certificate {
            graph: GraphDoc {
                p: g.order(),
                edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
                extra: Map::new(),
            },
            mode: labeling.mode(),
            labels: LabelsDoc {
                vertex_labels: labeling.vertex_labels().to_vec(),
                edge_labels: labeling.edge_labels().to_vec(),
                interleaved_sequence: None,
                extra: Map::new(),
            },
            weights: report.profile.weights,
            distinct: report.profile.distinct_count,
            provenance: Provenance {
                source: source.into(),
                tool_version: TOOL.into(),
                notes: Vec::new(),
                extra: Map::new(),
            },
            citation: None,
            extra: Map::new(),
        }
    }

    /// Adds the interleaved `v1, e1, ..., vn` form when the graph is the
    /// canonical path.
    pub fn with_path_sequence(mut self) -> Self {
        let is_path = self.mode == Mode::Total
            && self.graph.edges.len() + 1 == self.graph.p
            && self.graph.edges.iter().enumerate().all(|(i, e)| *e == [i, i + 1]);
        if is_path {
            let f = TotalLabeling {
                vertex_labels: self.labels.vertex_labels.clone(),
                edge_labels: self.labels.edge_labels.clone(),
            };
            self.labels.interleaved_sequence = Some(f.to_path_sequence());
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.provenance.notes.push(note.into());
        self
    }

    pub fn with_citation(mut self, citation: impl Into<String>) -> Self {
        self.citation = Some(citation.into());
        self
    }

    /// The embedded graph; the edge list must already be canonical.
    pub fn graph(&self) -> Result<Graph, CertError> {
        let g = Graph::new(self.graph.p, self.graph.edges.iter().map(|e| (e[0], e[1])))
            .map_err(|e| schema("graph.edges", e.to_string()))?;
        if let Some(i) = self
            .graph
            .edges
            .iter()
            .zip(g.edges())
            .position(|(a, &(u, v))| *a != [u, v])
        {
            return Err(schema(
                &format!("graph.edges[{i}]"),
                "edges must be listed with ascending endpoints in lexicographic order",
            ));
        }
        Ok(g)
    }

    pub fn labeling(&self) -> Labeling {
        match self.mode {
            Mode::Total => Labeling::Total(TotalLabeling {
                vertex_labels: self.labels.vertex_labels.clone(),
                edge_labels: self.labels.edge_labels.clone(),
            }),
            Mode::Edge => Labeling::Edge(EdgeLabeling {
                edge_labels: self.labels.edge_labels.clone(),
            }),
        }
    }

    /// Recomputes the weights from the embedded labels. Structural problems
    /// (bad graph, vertex labels in edge mode) are errors; everything else is
    /// in the report.
    pub fn verify(&self) -> Result<VerifyReport, CertError> {
        let g = self.graph()?;
        if self.mode == Mode::Edge && !self.labels.vertex_labels.is_empty() {
            return Err(schema("labels.vertex_labels", "must be empty in edge mode"));
        }
        Ok(self.labeling().verify(&g))
    }

    /// Every reason the certificate fails to certify what it claims.
    pub fn integrity_problems(&self) -> Result<Vec<String>, CertError> {
        let report = self.verify()?;
        let mut problems = report.issues.clone();
        for (u, v) in &report.violations {
            problems.push(format!("adjacent vertices {u} and {v} share a weight"));
        }
        if report.profile.weights != self.weights {
            problems.push(format!(
                "recorded weights {:?} differ from recomputed {:?}",
                self.weights, report.profile.weights
            ));
        }
        if report.profile.distinct_count != self.distinct {
            problems.push(format!(
                "recorded distinct count {} differs from recomputed {}",
                self.distinct, report.profile.distinct_count
            ));
        }
        if let Some(seq) = &self.labels.interleaved_sequence {
            let expected = TotalLabeling::from_path_sequence(seq);
            let matches = expected.is_some_and(|f| {
                f.vertex_labels == self.labels.vertex_labels && f.edge_labels == self.labels.edge_labels
            });
            if !matches {
                problems.push("interleaved_sequence disagrees with the labels".into());
            }
        }
        Ok(problems)
    }
}

/// Parses a certificate without checking it.
pub fn parse_certificate(text: &str) -> Result<Certificate, CertError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(&path, e.into_inner().to_string())
    })
}

/// Parses and re-verifies a certificate; anything it fails to certify is an
/// integrity error.
pub fn read_certificate(text: &str) -> Result<Certificate, CertError> {
    let cert = parse_certificate(text)?;
    let problems = cert.integrity_problems()?;
    if problems.is_empty() {
        Ok(cert)
    } else {
        Err(CertError::Integrity(problems))
    }
}

/// Indented JSON with short arrays of numbers kept on one line.
pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    write_value(&mut out, &serde_json::to_value(cert).expect("certificate serializes"), 0);
    out
}

const INLINE_WIDTH: usize = 96;

/// One-line rendering of arrays whose leaves are numbers.
fn inline_array(v: &Value) -> Option<String> {
    match v {
        Value::Number(n) => Some(n.to_string()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(inline_array).collect();
            Some(format!("[{}]", parts?.join(", ")))
        }
        _ => None,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(depth + 1), Value::from(k.as_str()));
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(depth));
        }
        Value::Array(items) if !items.is_empty() => {
            if let Some(inline) = inline_array(v).filter(|s| s.len() <= INLINE_WIDTH) {
                out.push_str(&inline);
                return;
            }
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(depth));
        }
        other => out.push_str(&other.to_string()),
    }
}

/// DOT rendering: vertices show `label/weight` (total) or the edge sum
/// (edge mode); edges show their label.
pub fn export_dot(cert: &Certificate) -> String {
    let mut out = String::from("graph certificate {\n");
    for v in 0..cert.graph.p {
        let w = cert.weights.get(v).copied().unwrap_or(0);
        let text = match (cert.mode, cert.labels.vertex_labels.get(v)) {
            (Mode::Total, Some(l)) => format!("v{v} [{l}/{w}]"),
            _ => format!("v{v} [{w}]"),
        };
        let _ = writeln!(out, "  v{v} [label=\"{text}\"];");
    }
    for (i, e) in cert.graph.edges.iter().enumerate() {
        let l = cert.labels.edge_labels.get(i).copied().unwrap_or(0);
        let _ = writeln!(out, "  v{} -- v{} [label=\"{l}\"];", e[0], e[1]);
    }
    out.push_str("}\n");
    out
}
