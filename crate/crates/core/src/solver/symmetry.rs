//! Slot orbits for families whose automorphisms are known in advance.
//!
//! Only one symmetry is broken: the smallest label may sit on a single
//! representative of each orbit. Any labeling can be moved there by an
//! automorphism, which preserves validity and the distinct-weight count.

use super::Slot;
use crate::graph::{generate, FamilySpec, Graph};
use crate::labeling::Mode;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotOrbits {
    orbits: Vec<Vec<Slot>>,
}

impl SlotOrbits {
    /// Orbits for cycles (rotations), complete graphs (all vertex
    /// permutations) and wheels (rim rotations). Returns `None` for other
    /// families, or when `graph` is not the canonical member of `spec`.
    pub fn for_family(spec: FamilySpec, graph: &Graph) -> Option<Self> {
        if generate(spec).ok().as_ref() != Some(graph) {
            return None;
        }
        let all_vertices = || (0..graph.order()).map(Slot::Vertex).collect::<Vec<_>>();
        let all_edges = || (0..graph.size()).map(Slot::Edge).collect::<Vec<_>>();
        let orbits = match spec {
            FamilySpec::Cycle(_) | FamilySpec::Complete(_) => vec![all_vertices(), all_edges()],
            FamilySpec::Wheel(n) if n >= 4 => {
                let (spokes, rim): (Vec<_>, Vec<_>) = (0..graph.size())
                    .partition(|&e| graph.edge(crate::graph::EdgeId(e)).1 == n);
                vec![
                    (0..n).map(Slot::Vertex).collect(),
                    vec![Slot::Vertex(n)],
                    rim.into_iter().map(Slot::Edge).collect(),
                    spokes.into_iter().map(Slot::Edge).collect(),
                ]
            }
            FamilySpec::Wheel(3) => return Self::for_family(FamilySpec::Complete(4), graph),
            _ => return None,
        };
        Some(SlotOrbits { orbits })
    }

    pub fn orbits(&self) -> &[Vec<Slot>] {
        &self.orbits
    }

    /// For each slot index, whether label 1 may be placed there: the member
    /// of each orbit that comes first in `order` is the representative.
    pub(crate) fn label_one_mask(&self, g: &Graph, mode: Mode, order: &[usize]) -> Vec<bool> {
        let mut position = vec![0; order.len()];
        for (i, &s) in order.iter().enumerate() {
            position[s] = i;
        }
        let mut mask = vec![true; order.len()];
        for orbit in &self.orbits {
            let members: Vec<usize> = orbit.iter().filter_map(|s| s.index(g, mode)).collect();
            if let Some(&rep) = members.iter().min_by_key(|&&s| position[s]) {
                for &s in &members {
                    mask[s] = s == rep;
                }
            }
        }
        mask
    }
}
