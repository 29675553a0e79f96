//! Finite simple undirected graphs with a canonical, stable edge indexing.
//!
//! Vertices are `0..p`. Edges are stored with endpoints ascending and the
//! edge list sorted lexicographically, so an [`EdgeId`] is the position of an
//! edge in that list. Graphs are immutable once built.

mod codec;
mod family;

pub use codec::{
    format_edge_list, format_graph6, parse_edge_list, parse_graph, parse_graph6, CodecError,
    GraphFormat,
};
pub use family::{generate, FamilySpec};

use std::fmt;

use thiserror::Error;

/// Index of a vertex in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Position of an edge in the canonical edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {u}-{v} has an endpoint outside 0..{p}")]
    VertexOutOfRange { u: usize, v: usize, p: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    p: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge collection, canonicalizing the
    /// edge order. Loops, duplicates and out-of-range endpoints are rejected.
    pub fn new<I>(p: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= p || v >= p {
                return Err(GraphError::VertexOutOfRange { u, v, p });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(p, canon))
    }

    fn from_canonical(p: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); p];
        let mut incidence = vec![Vec::new(); p];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incidence[u].push(id);
            incidence[v].push(id);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            p,
            edges,
            adjacency,
            incidence,
        }
    }

    /// The edgeless graph on `p` vertices.
    pub fn empty(p: usize) -> Self {
        Self::from_canonical(p, Vec::new())
    }

    /// Order of the graph.
    pub fn order(&self) -> usize {
        self.p
    }

    /// Size of the graph.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(EdgeId)
    }

    pub fn isolated_count(&self) -> usize {
        (0..self.p).filter(|&v| self.degree(v) == 0).count()
    }

    /// True when `v` is adjacent to every other vertex.
    pub fn is_universal(&self, v: usize) -> bool {
        v < self.p && self.degree(v) + 1 == self.p
    }

    /// True when some component is a single edge (a copy of K₂).
    pub fn has_isolated_edge(&self) -> bool {
        self.edges
            .iter()
            .any(|&(u, v)| self.degree(u) == 1 && self.degree(v) == 1)
    }

    /// The subgraph induced by deleting `removed`; survivors keep their
    /// relative order. Returns the new graph and the old→new index map.
    pub fn delete_vertices(&self, removed: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.p];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect::<Vec<_>>();
        // relative order is preserved, so the mapped list is still canonical
        (Self::from_canonical(next, edges), map)
    }

    pub fn is_connected(&self) -> bool {
        if self.p == 0 {
            return true;
        }
        let mut seen = vec![false; self.p];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.p
    }
}

/// `G ∨ H`: `G` keeps indices `0..p_G`, `H` is shifted by `p_G`, and every
/// vertex of `G` is joined to every vertex of `H`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + off, v + off)));
    for u in 0..g.order() {
        for v in 0..h.order() {
            edges.push((u, v + off));
        }
    }
    edges.sort_unstable();
    Graph::from_canonical(off + h.order(), edges)
}

/// `G + H`: side by side, `H` shifted by `p_G`, no cross edges.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + off, v + off)));
    Graph::from_canonical(off + h.order(), edges)
}

/// `K₁ ∨ G` with the apex as the last vertex.
pub fn cone(g: &Graph) -> Graph {
    join(g, &Graph::empty(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn canonical_order() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 1), (0, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.edge_id(3, 0), Some(EdgeId(1)));
        assert_eq!(g.incident_edges(0), &[0, 1]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn join_counts() {
        let w4 = join(&Graph::empty(1), &cycle(4));
        assert_eq!((w4.order(), w4.size()), (5, 8));
        assert!(w4.is_universal(0));

        let k23 = join(&Graph::empty(2), &Graph::empty(3));
        assert_eq!(k23.size(), 6);

        let c3 = cycle(3);
        assert_eq!(join(&c3, &Graph::empty(0)), c3);
    }

    #[test]
    fn union_counts() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let g = disjoint_union(&k2, &Graph::empty(3));
        assert_eq!((g.order(), g.size()), (5, 1));
        assert_eq!(g.isolated_count(), 3);
        assert!(g.has_isolated_edge());

        let c3 = cycle(3);
        assert_eq!(disjoint_union(&c3, &Graph::empty(0)), c3);
        let two = disjoint_union(&c3, &c3);
        assert_eq!((two.order(), two.size()), (6, 6));
        assert!(!two.is_connected());
    }

    #[test]
    fn cone_puts_apex_last() {
        let w = cone(&cycle(5));
        assert!(w.is_universal(5));
        assert_eq!(w.size(), 10);
    }

    #[test]
    fn delete_vertices_reindexes() {
        let w = cone(&cycle(4));
        let (g, map) = w.delete_vertices(&[4]);
        assert_eq!(g, cycle(4));
        assert_eq!(map[4], None);
        let (h, _) = w.delete_vertices(&[0]);
        assert_eq!(h.order(), 4);
        assert_eq!(h.size(), 5);
    }
}
