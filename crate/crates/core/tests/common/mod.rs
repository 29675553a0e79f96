//! Generators and property bodies shared by the proptest suite and the
//! acceptance runner.
#![allow(dead_code)]

use std::ops::ControlFlow;
use std::sync::OnceLock;

use lat_core::cert::{parse_certificate, read_certificate, write_certificate, Certificate};
use lat_core::constructions::path_from_cycle;
use lat_core::graph::{generate, EdgeId, FamilySpec, Graph};
use lat_core::labeling::{
    check_bijection, edge_weights, total_weights, verify_edge, verify_total, EdgeLabeling, LabelError, Labeling,
    TotalLabeling,
};
use lat_core::solver::{for_each_valid, SearchOptions, Slot, SolveBudget};
use lat_core::Mode;
use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::{Config, TestCaseError, TestError, TestRunner};
use serde_json::Value;

pub const CASES: u32 = 1000;

pub fn config() -> ProptestConfig {
    ProptestConfig::with_cases(CASES)
}

pub fn arb_graph(max_p: usize) -> impl Strategy<Value = Graph> {
    (1..=max_p).prop_flat_map(|p| {
        let pairs: Vec<(usize, usize)> = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges = pairs.iter().zip(&mask).filter(|(_, &keep)| keep).map(|(e, _)| *e);
            Graph::new(p, edges).unwrap()
        })
    })
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<u64>> {
    Just((1..=n as u64).collect::<Vec<_>>()).prop_shuffle()
}

/// A graph with a uniformly random bijective total labeling.
pub fn arb_total() -> impl Strategy<Value = (Graph, TotalLabeling)> {
    arb_graph(8).prop_flat_map(|g| {
        let p = g.order();
        shuffled(p + g.size()).prop_map(move |labels| (g.clone(), split(p, &labels)))
    })
}

pub fn arb_edge() -> impl Strategy<Value = (Graph, EdgeLabeling)> {
    arb_graph(8).prop_flat_map(|g| {
        shuffled(g.size()).prop_map(move |edge_labels| (g.clone(), EdgeLabeling { edge_labels }))
    })
}

fn split(p: usize, labels: &[u64]) -> TotalLabeling {
    TotalLabeling {
        vertex_labels: labels[..p].to_vec(),
        edge_labels: labels[p..].to_vec(),
    }
}

/// Vertex labels followed by edge labels.
fn flat(f: &TotalLabeling) -> Vec<u64> {
    f.vertex_labels.iter().chain(&f.edge_labels).copied().collect()
}

/// The edge labels of `f` renumbered to `1..=q`, keeping their order.
fn compress(f: &TotalLabeling) -> EdgeLabeling {
    let mut sorted = f.edge_labels.clone();
    sorted.sort_unstable();
    let edge_labels = f
        .edge_labels
        .iter()
        .map(|l| sorted.binary_search(l).unwrap() as u64 + 1)
        .collect();
    EdgeLabeling { edge_labels }
}

pub type TotalCase = (Graph, TotalLabeling);

pub fn duplicated_label_rejected((g, f): TotalCase, from: Index, to: Index) -> Result<(), TestCaseError> {
    let mut labels = flat(&f);
    prop_assume!(labels.len() >= 2);
    let (i, j) = (from.index(labels.len()), to.index(labels.len()));
    prop_assume!(i != j);
    labels[j] = labels[i];
    let bad = split(g.order(), &labels);
    match total_weights(&g, &bad) {
        Err(LabelError::NotBijective { duplicates, .. }) => prop_assert_eq!(duplicates, vec![labels[i]]),
        other => prop_assert!(false, "expected rejection, got {:?}", other),
    }
    let report = verify_total(&g, &bad);
    prop_assert!(!report.bijection_ok);
    prop_assert!(!report.valid());
    Ok(())
}

pub fn out_of_range_label_rejected((g, f): TotalCase, at: Index, bump: u64) -> Result<(), TestCaseError> {
    let mut labels = flat(&f);
    let i = at.index(labels.len());
    labels[i] = labels.len() as u64 + bump;
    prop_assert!(check_bijection(&labels).is_err());
    prop_assert!(!verify_total(&g, &split(g.order(), &labels)).bijection_ok);
    Ok(())
}

pub fn bijections_accepted((g, f): TotalCase) -> Result<(), TestCaseError> {
    prop_assert!(total_weights(&g, &f).is_ok());
    prop_assert!(verify_total(&g, &f).bijection_ok);
    Ok(())
}

/// Σw = Σf(V) + 2Σf(E), and the labels sum to n(n+1)/2.
pub fn total_weight_sum_identity((g, f): TotalCase) -> Result<(), TestCaseError> {
    let profile = total_weights(&g, &f).unwrap();
    let sum_w: u64 = profile.weights.iter().sum();
    let sum_v: u64 = f.vertex_labels.iter().sum();
    let sum_e: u64 = f.edge_labels.iter().sum();
    prop_assert_eq!(sum_w, sum_v + 2 * sum_e);
    let n = (g.order() + g.size()) as u64;
    prop_assert_eq!(sum_v + sum_e, n * (n + 1) / 2);
    Ok(())
}

/// Σg⁺ = q(q+1); isolated vertices weigh 0.
pub fn edge_weight_sum_identity((g, lab): (Graph, EdgeLabeling)) -> Result<(), TestCaseError> {
    let profile = edge_weights(&g, &lab).unwrap();
    let q = g.size() as u64;
    prop_assert_eq!(profile.weights.iter().sum::<u64>(), q * (q + 1));
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            prop_assert_eq!(profile.weights[v], 0);
        }
    }
    let valid = verify_edge(&g, &lab).valid();
    let clash = g.edges().iter().any(|&(u, v)| profile.weights[u] == profile.weights[v]);
    prop_assert_eq!(valid, !clash);
    Ok(())
}

/// Valid total labelings of C3..C7 with label 1 on edge 0 (any number of
/// distinct weights), up to 300 per cycle, found by enumeration.
pub fn cycle_pool() -> &'static Vec<(usize, TotalLabeling)> {
    static POOL: OnceLock<Vec<(usize, TotalLabeling)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool = Vec::new();
        for n in 3..=7 {
            let c = generate(FamilySpec::Cycle(n)).unwrap();
            let opts = SearchOptions {
                pins: vec![(Slot::Edge(0), 1)],
                ..Default::default()
            };
            let mut taken = 0;
            for_each_valid(&c, Mode::Total, None, SolveBudget::default(), &opts, |lab| {
                if let Labeling::Total(f) = lab {
                    pool.push((n, f.clone()));
                    taken += 1;
                }
                if taken >= 300 {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
        }
        pool
    })
}

/// Relabels a cycle labeling by the dihedral symmetry `v -> ±v + r`.
fn move_cycle(c: &Graph, f: &TotalLabeling, r: usize, flip: bool) -> TotalLabeling {
    let n = c.order();
    let map = |v: usize| {
        let v = if flip { (n - v) % n } else { v };
        (v + r) % n
    };
    let mut vertex_labels = vec![0; n];
    let mut edge_labels = vec![0; n];
    for v in 0..n {
        vertex_labels[map(v)] = f.vertex_labels[v];
    }
    for (e, &(u, v)) in c.edges().iter().enumerate() {
        edge_labels[c.edge_id(map(u), map(v)).unwrap().0] = f.edge_labels[e];
    }
    TotalLabeling {
        vertex_labels,
        edge_labels,
    }
}

pub fn path_from_cycle_shift(pick: Index, r: usize, flip: bool) -> Result<(), TestCaseError> {
    let pool = cycle_pool();
    let (n, f) = &pool[pick.index(pool.len())];
    let c = generate(FamilySpec::Cycle(*n)).unwrap();
    let f = move_cycle(&c, f, r % n, flip);
    let before = verify_total(&c, &f);
    prop_assert!(before.valid());
    let doomed = EdgeId(f.edge_labels.iter().position(|&l| l == 1).unwrap());
    let (path, g, walk) = path_from_cycle(&c, &f, doomed).unwrap();
    let after = verify_total(&path, &g);
    prop_assert!(after.valid());
    prop_assert_eq!(after.profile.distinct_count, before.profile.distinct_count);
    let mut labels = g.to_path_sequence();
    labels.sort_unstable();
    prop_assert_eq!(labels, (1..=2 * *n as u64 - 1).collect::<Vec<_>>());
    for (i, &v) in walk.iter().enumerate() {
        prop_assert_eq!(after.profile.weights[i] + 3, before.profile.weights[v]);
    }
    Ok(())
}

pub fn certificate_round_trip((g, f): TotalCase, edge_mode: bool, extra: Option<u32>) -> Result<(), TestCaseError> {
    let lab = if edge_mode {
        Labeling::Edge(compress(&f))
    } else {
        Labeling::Total(f)
    };
    let mut cert = Certificate::new(&g, &lab, "proptest").with_path_sequence();
    if let Some(x) = extra {
        cert.extra.insert("run".into(), Value::from(x));
        cert.provenance.extra.insert("seed".into(), Value::from(x));
    }
    let text = write_certificate(&cert);
    let back = parse_certificate(&text).unwrap();
    prop_assert_eq!(&back, &cert);
    prop_assert_eq!(write_certificate(&back), text.clone());
    let valid = lab.verify(&g).valid();
    prop_assert_eq!(read_certificate(&text).is_ok(), valid);
    Ok(())
}

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

fn e<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// Runs every suite outside the test harness; one entry per suite.
pub fn run_all() -> Vec<(&'static str, Result<(), String>)> {
    vec![
        (
            "duplicated label rejected",
            e(runner().run(&(arb_total(), any::<Index>(), any::<Index>()), |(c, a, b)| {
                duplicated_label_rejected(c, a, b)
            })),
        ),
        (
            "out-of-range label rejected",
            e(runner().run(&(arb_total(), any::<Index>(), 1u64..5), |(c, a, b)| {
                out_of_range_label_rejected(c, a, b)
            })),
        ),
        ("bijections accepted", e(runner().run(&arb_total(), bijections_accepted))),
        ("total weight sum", e(runner().run(&arb_total(), total_weight_sum_identity))),
        ("edge weight sum", e(runner().run(&arb_edge(), edge_weight_sum_identity))),
        (
            "path_from_cycle -3 shift",
            e(runner().run(&(any::<Index>(), 0usize..8, any::<bool>()), |(p, r, f)| {
                path_from_cycle_shift(p, r, f)
            })),
        ),
        (
            "certificate round trip",
            e(runner().run(&(arb_total(), any::<bool>(), any::<Option<u32>>()), |(c, m, x)| {
                certificate_round_trip(c, m, x)
            })),
        ),
    ]
}
