//! Exhaustive oracle: every bijection of the label universe onto the slots.

use super::{SolveResult, SolveStatus, SolverError};
use crate::graph::Graph;
use crate::labeling::{EdgeLabeling, Labeling, Mode, TotalLabeling};

/// Largest label universe the oracle will enumerate (10! labelings).
pub const BRUTE_FORCE_LIMIT: usize = 10;

fn distinct_if_valid(g: &Graph, mode: Mode, labels: &[u64], weights: &mut [u64]) -> Option<usize> {
    let p = g.order();
    let edge_labels = match mode {
        Mode::Total => {
            weights.copy_from_slice(&labels[..p]);
            &labels[p..]
        }
        Mode::Edge => {
            weights.fill(0);
            labels
        }
    };
    for (&(u, v), &l) in g.edges().iter().zip(edge_labels) {
        weights[u] += l;
        weights[v] += l;
    }
    if g.edges().iter().any(|&(u, v)| weights[u] == weights[v]) {
        return None;
    }
    let mut seen: Vec<u64> = Vec::with_capacity(p);
    for &w in weights.iter() {
        if !seen.contains(&w) {
            seen.push(w);
        }
    }
    Some(seen.len())
}

/// Enumerates all labelings (Heap's algorithm) and returns the exact
/// minimum distinct-weight count, or `Infeasible` if none is valid.
pub fn brute_force_min_distinct(g: &Graph, mode: Mode) -> Result<SolveResult, SolverError> {
    let n = super::universe_size(g, mode);
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolverError::UniverseTooLarge {
            size: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut labels: Vec<u64> = (1..=n as u64).collect();
    let mut weights = vec![0u64; g.order()];
    let mut best: Option<(usize, Vec<u64>)> = None;
    let mut visited = 0u64;

    let mut consider = |labels: &[u64], best: &mut Option<(usize, Vec<u64>)>| {
        visited += 1;
        if let Some(d) = distinct_if_valid(g, mode, labels, &mut weights) {
            if best.as_ref().map_or(true, |(b, _)| d < *b) {
                *best = Some((d, labels.to_vec()));
            }
        }
    };

    consider(&labels, &mut best);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                labels.swap(0, i);
            } else {
                labels.swap(c[i], i);
            }
            consider(&labels, &mut best);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    let p = g.order();
    Ok(match best {
        Some((d, labels)) => {
            let cert = match mode {
                Mode::Total => Labeling::Total(TotalLabeling {
                    vertex_labels: labels[..p].to_vec(),
                    edge_labels: labels[p..].to_vec(),
                }),
                Mode::Edge => Labeling::Edge(EdgeLabeling {
                    edge_labels: labels,
                }),
            };
            SolveResult {
                status: SolveStatus::Exact,
                lower: d,
                upper: Some(d),
                certificate: Some(cert),
                nodes_explored: visited,
            }
        }
        None => SolveResult {
            status: SolveStatus::Infeasible,
            lower: 0,
            upper: None,
            certificate: None,
            nodes_explored: visited,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        generate(spec).unwrap()
    }

    #[test]
    fn visits_every_permutation() {
        let r = brute_force_min_distinct(&fam(FamilySpec::Path(3)), Mode::Total).unwrap();
        assert_eq!(r.nodes_explored, 120);
    }

    #[test]
    fn small_exact_values() {
        let c3 = brute_force_min_distinct(&fam(FamilySpec::Cycle(3)), Mode::Total).unwrap();
        assert_eq!(c3.exact(), Some(3));
        let p2 = brute_force_min_distinct(&fam(FamilySpec::Path(2)), Mode::Total).unwrap();
        assert_eq!(p2.exact(), Some(2));
        let k2 = brute_force_min_distinct(&fam(FamilySpec::Path(2)), Mode::Edge).unwrap();
        assert_eq!(k2.status, SolveStatus::Infeasible);
    }

    #[test]
    fn triangle_edge_labelings_need_three() {
        // every edge labeling of C3 gives three distinct sums
        let r = brute_force_min_distinct(&fam(FamilySpec::Cycle(3)), Mode::Edge).unwrap();
        assert_eq!(r.exact(), Some(3));
        assert_eq!(r.nodes_explored, 6);
    }

    #[test]
    fn edgeless_edge_mode() {
        let r = brute_force_min_distinct(&Graph::empty(3), Mode::Edge).unwrap();
        assert_eq!(r.exact(), Some(1));
        let r = brute_force_min_distinct(&Graph::empty(3), Mode::Total).unwrap();
        assert_eq!(r.exact(), Some(3));
    }

    #[test]
    fn refuses_large_universe() {
        let err = brute_force_min_distinct(&fam(FamilySpec::Cycle(6)), Mode::Total).unwrap_err();
        assert_eq!(
            err,
            SolverError::UniverseTooLarge {
                size: 12,
                limit: BRUTE_FORCE_LIMIT
            }
        );
    }
}
