//! Transfers between labelings of a graph and labelings of its cones.
//!
//! * [`cone_to_total`]: an edge labeling of `K₁ ∨ G` becomes a total labeling
//!   of `G` by moving each apex edge label onto its rim vertex.
//! * [`total_to_cone`]: the reverse, valid when the sum of the vertex labels
//!   differs from every vertex weight.
//! * [`double_cone_collapse`]: an edge labeling of `G ∨ O₂` becomes a total
//!   labeling of `G ∨ K₁`; the second apex's edge labels move onto the rim
//!   and the kept apex gets the one label left, `2p + q + 1`.
//!
//! In all three the weight of every vertex of `G` is carried over unchanged.

use thiserror::Error;

use crate::graph::{cone, Graph, VertexId};
use crate::labeling::{verify_edge, verify_total, EdgeLabeling, TotalLabeling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("structure: {0}")]
    Structure(String),
    #[error("input labeling is not valid: {0}")]
    InvalidInput(String),
    #[error("vertex label sum {sum} equals the weight of vertex {vertex}")]
    SumCollision { sum: u64, vertex: usize },
    #[error("kept apex weight {weight} equals the weight of vertex {vertex}")]
    ApexCollision { weight: u64, vertex: usize },
}

#[derive(Debug, Clone)]
pub struct TotalOutput {
    pub graph: Graph,
    pub labeling: TotalLabeling,
    /// Index in the input graph of each output vertex.
    pub origin: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ConeOutput {
    /// `K₁ ∨ G`, apex last.
    pub graph: Graph,
    pub labeling: EdgeLabeling,
    pub apex: VertexId,
}

#[derive(Debug, Clone)]
pub struct CollapseOutput {
    /// `G ∨ K₁`, kept apex last.
    pub graph: Graph,
    pub labeling: TotalLabeling,
    /// Input index of the apex that survives as the cone point.
    pub kept_apex: VertexId,
    /// Input index of the apex whose edge labels became vertex labels.
    pub consumed_apex: VertexId,
}

fn require_valid_edge(g: &Graph, lab: &EdgeLabeling) -> Result<(), TransformError> {
    let r = verify_edge(g, lab);
    if r.valid() {
        Ok(())
    } else if !r.bijection_ok {
        Err(TransformError::InvalidInput(r.issues.join("; ")))
    } else {
        Err(TransformError::InvalidInput(format!(
            "adjacent equal sums on {:?}",
            r.violations
        )))
    }
}

pub fn cone_to_total(
    cone_graph: &Graph,
    g: &EdgeLabeling,
    apex: VertexId,
) -> Result<TotalOutput, TransformError> {
    let a = apex.0;
    if !cone_graph.is_universal(a) {
        return Err(TransformError::Structure(format!(
            "apex {a} is not adjacent to every other vertex"
        )));
    }
    require_valid_edge(cone_graph, g)?;
    let (base, map) = cone_graph.delete_vertices(&[a]);
    let mut vertex_labels = vec![0; base.order()];
    let mut edge_labels = vec![0; base.size()];
    for (&(u, v), &l) in cone_graph.edges().iter().zip(&g.edge_labels) {
        match (u == a, v == a) {
            (true, _) => vertex_labels[map[v].unwrap()] = l,
            (_, true) => vertex_labels[map[u].unwrap()] = l,
            _ => {
                let e = base.edge_id(map[u].unwrap(), map[v].unwrap()).unwrap();
                edge_labels[e.0] = l;
            }
        }
    }
    let origin = (0..cone_graph.order()).filter(|&v| v != a).collect();
    Ok(TotalOutput {
        graph: base,
        labeling: TotalLabeling {
            vertex_labels,
            edge_labels,
        },
        origin,
    })
}

pub fn total_to_cone(g: &Graph, f: &TotalLabeling) -> Result<ConeOutput, TransformError> {
    let r = verify_total(g, f);
    if !r.valid() {
        return Err(TransformError::InvalidInput(if r.bijection_ok {
            format!("adjacent equal weights on {:?}", r.violations)
        } else {
            r.issues.join("; ")
        }));
    }
    let sum: u64 = f.vertex_labels.iter().sum();
    if let Some(vertex) = r.profile.weights.iter().position(|&w| w == sum) {
        return Err(TransformError::SumCollision { sum, vertex });
    }
    let k1g = cone(g);
    let apex = g.order();
    let edge_labels = k1g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if v == apex {
                f.vertex_labels[u]
            } else {
                f.edge_labels[g.edge_id(u, v).expect("edge of G").0]
            }
        })
        .collect();
    Ok(ConeOutput {
        graph: k1g,
        labeling: EdgeLabeling { edge_labels },
        apex: VertexId(apex),
    })
}

pub fn double_cone_collapse(
    double_cone: &Graph,
    g: &EdgeLabeling,
    apexes: (VertexId, VertexId),
) -> Result<CollapseOutput, TransformError> {
    let (u1, u2) = (apexes.0 .0, apexes.1 .0);
    let n = double_cone.order();
    if u1 >= n || u2 >= n || u1 == u2 {
        return Err(TransformError::Structure(format!(
            "apexes ({u1}, {u2}) must be two distinct vertices"
        )));
    }
    if double_cone.has_edge(u1, u2) {
        return Err(TransformError::Structure(format!("apexes {u1} and {u2} are adjacent")));
    }
    for u in [u1, u2] {
        if double_cone.degree(u) + 2 != n {
            return Err(TransformError::Structure(format!(
                "apex {u} is not adjacent to every base vertex"
            )));
        }
    }
    let (base, map) = double_cone.delete_vertices(&[u1, u2]);
    let (p, q) = (base.order(), base.size());
    if p < 2 || q < 1 {
        return Err(TransformError::Structure(format!(
            "base graph must have order >= 2 and size >= 1, got ({p}, {q})"
        )));
    }
    require_valid_edge(double_cone, g)?;

    let sums = crate::labeling::edge_weights(double_cone, g)
        .expect("validated")
        .weights;
    let top = (2 * p + q + 1) as u64;
    let kept_weight = top + sums[u1];
    if let Some(v) = (0..n)
        .filter(|&v| v != u1 && v != u2)
        .find(|&v| sums[v] == kept_weight)
    {
        return Err(TransformError::ApexCollision {
            weight: kept_weight,
            vertex: v,
        });
    }

    let out_graph = cone(&base);
    let apex = p;
    let mut vertex_labels = vec![0; p + 1];
    let mut edge_labels = vec![0; out_graph.size()];
    vertex_labels[apex] = top;
    for (&(a, b), &l) in double_cone.edges().iter().zip(&g.edge_labels) {
        let (other, hub) = match (a, b) {
            (x, y) if x == u1 || x == u2 => (y, x),
            (x, y) if y == u1 || y == u2 => (x, y),
            (x, y) => {
                let e = out_graph.edge_id(map[x].unwrap(), map[y].unwrap()).unwrap();
                edge_labels[e.0] = l;
                continue;
            }
        };
        let v = map[other].unwrap();
        if hub == u1 {
            let e = out_graph.edge_id(v, apex).unwrap();
            edge_labels[e.0] = l;
        } else {
            vertex_labels[v] = l;
        }
    }
    Ok(CollapseOutput {
        graph: out_graph,
        labeling: TotalLabeling {
            vertex_labels,
            edge_labels,
        },
        kept_apex: VertexId(u1),
        consumed_apex: VertexId(u2),
    })
}
