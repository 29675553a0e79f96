//! Explicit labelings: `K₂ + Oₙ`, the short odd paths, and cutting a cycle
//! labeling down to a path labeling.

use thiserror::Error;

use crate::graph::{generate, EdgeId, FamilySpec, Graph};
use crate::labeling::{verify_total, TotalLabeling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Interleaved sequences `v1, e1, v2, ..., vn` for P₃, P₅ and P₇, each with
/// two distinct weights.
pub const ODD_PATH_SEQUENCES: [(usize, &[u64]); 3] = [
    (3, &[1, 5, 3, 4, 2]),
    (5, &[1, 9, 7, 3, 2, 5, 8, 6, 4]),
    (7, &[13, 6, 4, 10, 1, 8, 9, 3, 5, 11, 2, 7, 12]),
];

/// `K₂ + Oₙ` with `f(u₁)=1, f(u₂)=2, f(u₁u₂)=3, f(vᵢ)=i+3`.
pub fn construct_k2_plus_empty(n: usize) -> Result<(Graph, TotalLabeling), ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::Parameter("K2 + On requires n >= 1".into()));
    }
    let g = generate(FamilySpec::K2PlusEmpty(n)).expect("valid family");
    let mut vertex_labels = vec![1, 2];
    vertex_labels.extend((1..=n as u64).map(|i| i + 3));
    Ok((
        g,
        TotalLabeling {
            vertex_labels,
            edge_labels: vec![3],
        },
    ))
}

/// The fixed two-weight labelings of P₃, P₅ and P₇.
pub fn construct_small_odd_path(n: usize) -> Result<(Graph, TotalLabeling), ConstructionError> {
    let (_, seq) = ODD_PATH_SEQUENCES
        .iter()
        .find(|(m, _)| *m == n)
        .ok_or_else(|| {
            ConstructionError::Parameter(format!(
                "explicit sequences exist for n = 3, 5, 7 only; use the solver for P{n}"
            ))
        })?;
    let g = generate(FamilySpec::Path(n)).expect("valid family");
    let f = TotalLabeling::from_path_sequence(seq).expect("odd length");
    Ok((g, f))
}

/// Deletes the edge labelled 1 from a valid total labeling of a cycle and
/// lowers every other label by one. Each vertex weight drops by exactly 3.
///
/// The path starts at the higher-index endpoint of the deleted edge and walks
/// away from it; the returned vector maps path positions to cycle vertices.
pub fn path_from_cycle(
    cycle: &Graph,
    f: &TotalLabeling,
    doomed: EdgeId,
) -> Result<(Graph, TotalLabeling, Vec<usize>), ConstructionError> {
    let n = cycle.order();
    if n < 3 || cycle.size() != n || !cycle.is_connected() || (0..n).any(|v| cycle.degree(v) != 2) {
        return Err(ConstructionError::Precondition("input graph is not a cycle".into()));
    }
    if doomed.0 >= cycle.size() {
        return Err(ConstructionError::Precondition(format!("no edge {doomed}")));
    }
    let report = verify_total(cycle, f);
    if !report.valid() {
        return Err(ConstructionError::Precondition(
            "labeling is not a valid local antimagic total labeling".into(),
        ));
    }
    let doomed_label = f.edge_labels[doomed.0];
    if doomed_label != 1 {
        return Err(ConstructionError::Precondition(format!(
            "edge {doomed} carries label {doomed_label}, expected 1"
        )));
    }

    let (a, b) = cycle.edge(doomed);
    let mut walk = vec![b];
    let mut prev = a;
    while walk.len() < n {
        let cur = *walk.last().unwrap();
        let next = *cycle
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .expect("degree two");
        prev = cur;
        walk.push(next);
    }

    let path = generate(FamilySpec::Path(n)).expect("n >= 3");
    let vertex_labels = walk.iter().map(|&v| f.vertex_labels[v] - 1).collect();
    let edge_labels = walk
        .windows(2)
        .map(|w| f.edge_labels[cycle.edge_id(w[0], w[1]).unwrap().0] - 1)
        .collect();
    Ok((
        path,
        TotalLabeling {
            vertex_labels,
            edge_labels,
        },
        walk,
    ))
}
