use lat_core::bounds::{chi_lat_lower_bound, known_value, KnownResult, KnownStatus, Quantity};
use lat_core::graph::{generate, FamilySpec};
use lat_core::solver::{solve_min_distinct_with, SearchOptions, SlotOrbits, SolveBudget, SolveResult, SolveStatus};
use lat_core::Mode;

fn run(spec: FamilySpec, budget: SolveBudget) -> (KnownResult, SolveResult) {
    let known = known_value(spec).unwrap_or_else(|| panic!("{spec}: no table entry"));
    assert!(known.is_proven(), "{spec}: only proven entries are checked here");
    let g = generate(spec).unwrap();
    let mode = match known.quantity {
        Quantity::ChiLat => Mode::Total,
        Quantity::ChiLa => Mode::Edge,
    };
    let opts = SearchOptions::with_symmetry(SlotOrbits::for_family(spec, &g));
    let r = solve_min_distinct_with(&g, mode, budget, &opts);
    if let Some(lab) = &r.certificate {
        let report = lab.verify(&g);
        assert!(report.valid());
        assert_eq!(Some(report.profile.distinct_count), r.upper);
    }
    (known, r)
}

/// Solves the family member exactly and checks the table's claim.
fn check(spec: FamilySpec) {
    let (known, r) = run(spec, SolveBudget::millis(30_000));
    assert_eq!(r.status, SolveStatus::Exact, "{spec}: {:?} after {} nodes", r.status, r.nodes_explored);
    let value = r.upper.unwrap();
    assert!(known.contains(value), "{spec}: solver {value}, table {known}");
}

/// For members the search cannot close quickly: no labeling may beat the
/// proven value, and the proven lower bound may not exceed the table.
fn check_consistent(spec: FamilySpec) {
    let (known, r) = run(spec, SolveBudget::millis(2_000));
    assert!(r.lower <= known.hi, "{spec}: lower bound {} above table {known}", r.lower);
    if let Some(upper) = r.upper {
        assert!(upper >= known.lo, "{spec}: solver found {upper}, below table {known}");
    }
}

#[test]
fn paths() {
    for n in 1..=8 {
        check(FamilySpec::Path(n));
    }
}

#[test]
fn cycles() {
    for n in 3..=8 {
        check(FamilySpec::Cycle(n));
    }
}

#[test]
fn complete_graphs() {
    for n in 1..=5 {
        check(FamilySpec::Complete(n));
    }
}

#[test]
fn complete_bipartite() {
    for (p, q) in [(1, 1), (1, 2), (1, 3), (1, 5), (2, 2), (2, 3), (2, 4)] {
        check(FamilySpec::CompleteBipartite(p, q));
    }
    for (p, q) in [(3, 4), (3, 5), (2, 6)] {
        check_consistent(FamilySpec::CompleteBipartite(p, q));
    }
}

#[test]
fn k2_plus_empty() {
    for n in 0..=5 {
        check(FamilySpec::K2PlusEmpty(n));
    }
}

#[test]
fn wheels() {
    for n in [3, 4] {
        check(FamilySpec::Wheel(n));
    }
    check_consistent(FamilySpec::Wheel(6));
}

#[test]
fn odd_fans_edge_mode() {
    for n in [3, 5, 7] {
        check(FamilySpec::Fan(n));
    }
}

#[test]
fn complete_join_cycle() {
    check(FamilySpec::JoinCompleteCycle(2, 3));
    check_consistent(FamilySpec::JoinCompleteCycle(2, 5));
    check_consistent(FamilySpec::JoinCompleteCycle(3, 4));
}

#[test]
fn cycle_join_two_ranges() {
    check(FamilySpec::CycleJoinEmpty(3, 2));
    check_consistent(FamilySpec::CycleJoinEmpty(5, 2));
}

#[test]
fn edgeless_and_degenerate_joins() {
    for n in 1..=5 {
        check(FamilySpec::Empty(n));
    }
    check(FamilySpec::CycleJoinEmpty(5, 0));
    check(FamilySpec::CycleJoinEmpty(4, 1));
}

#[test]
fn k2_plus_empty_lower_bound_is_tight() {
    for n in 3..=10 {
        let g = generate(FamilySpec::K2PlusEmpty(n)).unwrap();
        assert_eq!(chi_lat_lower_bound(&g).unwrap(), known_value(FamilySpec::K2PlusEmpty(n)).unwrap().lo);
    }
}

#[test]
fn conjectures_are_flagged() {
    for n in [9, 11, 13] {
        let k = known_value(FamilySpec::Path(n)).unwrap();
        assert_eq!(k.status, KnownStatus::Conjecture);
    }
}
