use std::fmt;
use std::str::FromStr;

use super::{disjoint_union, join, Graph, GraphError};

/// Named graph families with their parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Oₙ
    Empty(usize),
    /// Pₙ, vertices `0..n` in path order.
    Path(usize),
    /// Cₙ, `n ≥ 3`.
    Cycle(usize),
    /// Kₙ
    Complete(usize),
    /// K_{p,q}; the first part is `0..p`.
    CompleteBipartite(usize, usize),
    /// Wₙ = K₁ ∨ Cₙ, apex last.
    Wheel(usize),
    /// Fₙ = K₁ ∨ Pₙ (order n+1), apex last.
    Fan(usize),
    /// K₂ + Oₙ; the edge is `0-1`.
    K2PlusEmpty(usize),
    /// K_m ∨ Cₙ; the clique is `0..m`.
    JoinCompleteCycle(usize, usize),
    /// C_p ∨ O_m; the cycle is `0..p`, the independent set follows.
    CycleJoinEmpty(usize, usize),
}

impl FamilySpec {
    fn check(&self) -> Result<(), GraphError> {
        let bad = |msg: &str| Err(GraphError::Parameter(format!("{self}: {msg}")));
        match *self {
            FamilySpec::Path(n) | FamilySpec::Fan(n) if n < 1 => bad("requires n >= 1"),
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) if n < 3 => bad("requires n >= 3"),
            FamilySpec::JoinCompleteCycle(_, n) if n < 3 => bad("requires cycle length n >= 3"),
            FamilySpec::CycleJoinEmpty(p, _) if p < 3 => bad("requires cycle length p >= 3"),
            _ => Ok(()),
        }
    }

    /// Short name used on the command line (`cycle:6`, `kpq:2,3`, ...).
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Empty(_) => "empty",
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "kpq",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Fan(_) => "fan",
            FamilySpec::K2PlusEmpty(_) => "k2-plus-empty",
            FamilySpec::JoinCompleteCycle(..) => "complete-join-cycle",
            FamilySpec::CycleJoinEmpty(..) => "cycle-join-empty",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Empty(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Fan(n)
            | FamilySpec::K2PlusEmpty(n) => write!(f, "{}:{}", self.name(), n),
            FamilySpec::CompleteBipartite(a, b)
            | FamilySpec::JoinCompleteCycle(a, b)
            | FamilySpec::CycleJoinEmpty(a, b) => write!(f, "{}:{},{}", self.name(), a, b),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| GraphError::Parameter(format!("expected <family>:<params>, got {s:?}")))?;
        let nums = params
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| GraphError::Parameter(format!("{s:?}: {e}")))?;
        let one = |ctor: fn(usize) -> FamilySpec| match nums[..] {
            [n] => Ok(ctor(n)),
            _ => Err(GraphError::Parameter(format!("{name} takes one parameter"))),
        };
        let two = |ctor: fn(usize, usize) -> FamilySpec| match nums[..] {
            [a, b] => Ok(ctor(a, b)),
            _ => Err(GraphError::Parameter(format!("{name} takes two parameters"))),
        };
        match name {
            "empty" => one(FamilySpec::Empty),
            "path" => one(FamilySpec::Path),
            "cycle" => one(FamilySpec::Cycle),
            "complete" => one(FamilySpec::Complete),
            "wheel" => one(FamilySpec::Wheel),
            "fan" => one(FamilySpec::Fan),
            "k2-plus-empty" => one(FamilySpec::K2PlusEmpty),
            "kpq" => two(FamilySpec::CompleteBipartite),
            "complete-join-cycle" => two(FamilySpec::JoinCompleteCycle),
            "cycle-join-empty" => two(FamilySpec::CycleJoinEmpty),
            other => Err(GraphError::Parameter(format!("unknown family {other:?}"))),
        }
    }
}

fn path(n: usize) -> Graph {
    Graph::from_canonical(n, (1..n).map(|i| (i - 1, i)).collect())
}

fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    Graph::from_canonical(n, edges)
}

fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_canonical(n, edges)
}

/// Builds the canonical member of a family.
pub fn generate(spec: FamilySpec) -> Result<Graph, GraphError> {
    spec.check()?;
    let g = match spec {
        FamilySpec::Empty(n) => Graph::empty(n),
        FamilySpec::Path(n) => path(n),
        FamilySpec::Cycle(n) => cycle(n),
        FamilySpec::Complete(n) => complete(n),
        FamilySpec::CompleteBipartite(a, b) => join(&Graph::empty(a), &Graph::empty(b)),
        FamilySpec::Wheel(n) => join(&cycle(n), &Graph::empty(1)),
        FamilySpec::Fan(n) => join(&path(n), &Graph::empty(1)),
        FamilySpec::K2PlusEmpty(n) => disjoint_union(&complete(2), &Graph::empty(n)),
        FamilySpec::JoinCompleteCycle(m, n) => join(&complete(m), &cycle(n)),
        FamilySpec::CycleJoinEmpty(p, m) => join(&cycle(p), &Graph::empty(m)),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);

        let w4 = generate(FamilySpec::Wheel(4)).unwrap();
        assert_eq!((w4.order(), w4.size()), (5, 8));
        assert_eq!(w4.neighbors(4), &[0, 1, 2, 3]);

        let k = generate(FamilySpec::K2PlusEmpty(3)).unwrap();
        assert_eq!((k.order(), k.size()), (5, 1));
        assert_eq!(k.edges(), &[(0, 1)]);
    }

    #[test]
    fn parameter_errors() {
        for spec in [
            FamilySpec::Cycle(2),
            FamilySpec::Wheel(2),
            FamilySpec::Path(0),
            FamilySpec::Fan(0),
            FamilySpec::JoinCompleteCycle(2, 2),
            FamilySpec::CycleJoinEmpty(2, 1),
        ] {
            let err = generate(spec).unwrap_err();
            assert!(matches!(err, GraphError::Parameter(_)), "{spec}");
        }
    }

    #[test]
    fn parse_and_display() {
        for text in ["cycle:6", "kpq:2,3", "wheel:4", "k2-plus-empty:0", "cycle-join-empty:5,2"] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert!("cycle".parse::<FamilySpec>().is_err());
        assert!("kpq:3".parse::<FamilySpec>().is_err());
        assert!("moebius:3".parse::<FamilySpec>().is_err());
    }

    proptest! {
        #[test]
        fn closed_form_counts(n in 3usize..20, m in 0usize..7, a in 0usize..7) {
            let count = |s| {
                let g = generate(s).unwrap();
                (g.order(), g.size())
            };
            prop_assert_eq!(count(FamilySpec::Cycle(n)), (n, n));
            prop_assert_eq!(count(FamilySpec::Wheel(n)), (n + 1, 2 * n));
            prop_assert_eq!(count(FamilySpec::Fan(n)), (n + 1, 2 * n - 1));
            prop_assert_eq!(count(FamilySpec::CompleteBipartite(a, m)), (a + m, a * m));
            prop_assert_eq!(
                count(FamilySpec::JoinCompleteCycle(m, n)),
                (m + n, m * m.saturating_sub(1) / 2 + n + m * n)
            );
            prop_assert_eq!(count(FamilySpec::Path(n)), (n, n - 1));
            prop_assert_eq!(count(FamilySpec::Complete(m)), (m, m * m.saturating_sub(1) / 2));
        }
    }
}
