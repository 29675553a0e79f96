use lat_core::graph::{generate, FamilySpec, Graph};
use lat_core::solver::{
    brute_force_min_distinct, find_with_at_most_k, solve_min_distinct, solve_min_distinct_with, Feasibility,
    SearchOptions, SlotOrbits, SolveBudget, SolveResult, SolveStatus,
};
use lat_core::Mode;

/// Every labeled graph on `p` vertices.
fn labeled_graphs(p: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e);
        Graph::new(p, edges).unwrap()
    })
}

/// The oracle corpus: connected labeled graphs with p <= 4, plus O1..O4.
fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=4)
        .flat_map(labeled_graphs)
        .filter(|g| g.is_connected())
        .collect();
    // O1 is connected and already present
    out.extend((2..=4).map(Graph::empty));
    out
}

fn check_certificate(g: &Graph, r: &SolveResult) {
    if let Some(lab) = &r.certificate {
        let report = lab.verify(g);
        assert!(report.valid(), "{g:?}: certificate invalid");
        assert_eq!(Some(report.profile.distinct_count), r.upper);
    }
}

fn same_answer(a: &SolveResult, b: &SolveResult) -> bool {
    a.status == b.status && a.upper == b.upper
}

#[test]
fn corpus_has_expected_size() {
    // connected labeled graphs: 1, 1, 4, 38
    assert_eq!(corpus().len(), 1 + 1 + 4 + 38 + 3);
}

#[test]
fn engine_matches_brute_force() {
    for g in corpus() {
        for mode in [Mode::Total, Mode::Edge] {
            let oracle = brute_force_min_distinct(&g, mode).unwrap();
            let bnb = solve_min_distinct(&g, mode, SolveBudget::default());
            assert!(
                same_answer(&oracle, &bnb),
                "{mode} mode on {:?}: oracle {:?}/{:?}, engine {:?}/{:?}",
                g.edges(),
                oracle.status,
                oracle.upper,
                bnb.status,
                bnb.upper
            );
            assert!(matches!(oracle.status, SolveStatus::Exact | SolveStatus::Infeasible));
            check_certificate(&g, &oracle);
            check_certificate(&g, &bnb);
        }
    }
}

#[test]
fn k2_edge_mode_infeasible_in_both() {
    let k2 = generate(FamilySpec::Complete(2)).unwrap();
    assert_eq!(brute_force_min_distinct(&k2, Mode::Edge).unwrap().status, SolveStatus::Infeasible);
    assert_eq!(solve_min_distinct(&k2, Mode::Edge, SolveBudget::default()).status, SolveStatus::Infeasible);
    assert_eq!(find_with_at_most_k(&k2, 5, Mode::Edge, SolveBudget::default()).outcome, Feasibility::None);
}

#[test]
fn pruning_does_not_change_answers() {
    let unpruned = SearchOptions {
        no_pruning: true,
        ..Default::default()
    };
    for g in corpus() {
        for mode in [Mode::Total, Mode::Edge] {
            let a = solve_min_distinct(&g, mode, SolveBudget::default());
            let b = solve_min_distinct_with(&g, mode, SolveBudget::default(), &unpruned);
            assert!(same_answer(&a, &b), "{mode} {:?}", g.edges());
            check_certificate(&g, &b);
        }
    }
}

#[test]
fn feasibility_agrees_with_minimum() {
    for g in corpus() {
        for mode in [Mode::Total, Mode::Edge] {
            let min = brute_force_min_distinct(&g, mode).unwrap().upper;
            for k in 1..=g.order() {
                let r = find_with_at_most_k(&g, k, mode, SolveBudget::default());
                match (&r.outcome, min) {
                    (Feasibility::Found(lab), Some(m)) => {
                        assert!(k >= m);
                        let rep = lab.verify(&g);
                        assert!(rep.valid() && rep.profile.distinct_count <= k);
                    }
                    (Feasibility::None, Some(m)) => assert!(k < m, "{mode} {:?} k={k}", g.edges()),
                    (Feasibility::None, None) => {}
                    (outcome, _) => panic!("{mode} {:?} k={k}: {outcome:?}", g.edges()),
                }
            }
        }
    }
}

#[test]
fn symmetry_breaking_does_not_change_answers() {
    let specs = [
        FamilySpec::Cycle(3),
        FamilySpec::Cycle(4),
        FamilySpec::Cycle(5),
        FamilySpec::Cycle(6),
        FamilySpec::Cycle(7),
        FamilySpec::Complete(3),
        FamilySpec::Complete(4),
        FamilySpec::Wheel(3),
        FamilySpec::Wheel(4),
    ];
    for spec in specs {
        let g = generate(spec).unwrap();
        let orbits = SlotOrbits::for_family(spec, &g);
        assert!(orbits.is_some(), "{spec}");
        for mode in [Mode::Total, Mode::Edge] {
            let plain = solve_min_distinct(&g, mode, SolveBudget::default());
            let sym = solve_min_distinct_with(&g, mode, SolveBudget::default(), &SearchOptions::with_symmetry(orbits.clone()));
            assert!(same_answer(&plain, &sym), "{spec} {mode}: {:?} vs {:?}", plain.upper, sym.upper);
            check_certificate(&g, &sym);
        }
    }
}

#[test]
fn parallel_matches_deterministic() {
    for spec in [FamilySpec::Cycle(5), FamilySpec::Path(4), FamilySpec::Complete(4), FamilySpec::Wheel(4)] {
        let g = generate(spec).unwrap();
        for mode in [Mode::Total, Mode::Edge] {
            let seq = solve_min_distinct(&g, mode, SolveBudget::default());
            let par = solve_min_distinct(&g, mode, SolveBudget::default().parallel());
            assert!(same_answer(&seq, &par), "{spec} {mode}");
            check_certificate(&g, &par);
        }
    }
}

#[test]
fn deterministic_runs_are_identical() {
    for spec in [FamilySpec::Cycle(6), FamilySpec::Path(5), FamilySpec::Fan(3)] {
        let g = generate(spec).unwrap();
        for mode in [Mode::Total, Mode::Edge] {
            let a = solve_min_distinct(&g, mode, SolveBudget::default());
            let b = solve_min_distinct(&g, mode, SolveBudget::default());
            assert_eq!(a.nodes_explored, b.nodes_explored);
            assert_eq!(a.certificate, b.certificate);
            assert!(a.certificate.is_some());
        }
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let g = generate(FamilySpec::Complete(5)).unwrap();
    let r = solve_min_distinct(&g, Mode::Total, SolveBudget::nodes(10));
    assert!(matches!(r.status, SolveStatus::Exhausted | SolveStatus::LowerUpper));
    assert!(r.nodes_explored <= 10 + 4096);
    let f = find_with_at_most_k(&generate(FamilySpec::Path(9)).unwrap(), 2, Mode::Total, SolveBudget::nodes(5));
    assert_eq!(f.outcome, Feasibility::Unknown);
}
