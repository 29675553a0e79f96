use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use super::{SearchOptions, SolveBudget};
use crate::graph::Graph;
use crate::labeling::{EdgeLabeling, Labeling, Mode, TotalLabeling};

/// How often (in nodes) a worker publishes its count and checks the budget.
const CHECK_INTERVAL: u64 = 1 << 12;

#[derive(Debug, Clone, Copy)]
pub(super) enum Goal {
    /// Minimise the distinct count; stop once it reaches `lower`.
    Minimize { lower: usize },
    /// Stop at the first labeling with at most `k` distinct weights.
    AtMost(usize),
    /// Visit every labeling with at most `k` distinct weights.
    Enumerate(usize),
}

pub(super) struct Outcome {
    pub best: Option<(usize, Labeling)>,
    /// True when the search space within the final bound was fully covered.
    pub closed: bool,
    pub nodes: u64,
}

type Visitor<'a> = &'a mut dyn FnMut(&Labeling) -> ControlFlow<()>;

/// Static description of the search: slots, their vertices, and the order.
struct Problem<'g> {
    graph: &'g Graph,
    mode: Mode,
    n: usize,
    slot_vertices: Vec<Vec<usize>>,
    slots_per_vertex: Vec<usize>,
    order: Vec<usize>,
    /// `Some(mask)` restricts label 1 to the flagged slots.
    one_allowed: Option<Vec<bool>>,
    pinned: Vec<Option<u64>>,
    reserved: u128,
    pruning: bool,
}

impl<'g> Problem<'g> {
    fn new(graph: &'g Graph, mode: Mode, opts: &SearchOptions) -> Self {
        let p = graph.order();
        let mut slot_vertices = Vec::new();
        if mode == Mode::Total {
            slot_vertices.extend((0..p).map(|v| vec![v]));
        }
        slot_vertices.extend(graph.edges().iter().map(|&(u, v)| vec![u, v]));
        let n = slot_vertices.len();

        let mut slots_per_vertex = vec![0; p];
        for vs in &slot_vertices {
            for &v in vs {
                slots_per_vertex[v] += 1;
            }
        }

        let mut pinned = vec![None; n];
        let mut reserved = 0u128;
        for &(slot, label) in &opts.pins {
            if let Some(i) = slot.index(graph, mode) {
                pinned[i] = Some(label);
                reserved |= 1 << label;
            }
        }

        let order = slot_order(&slot_vertices, &slots_per_vertex, &pinned);
        let pruning = !opts.no_pruning;
        let one_allowed = match &opts.symmetry {
            Some(orbits) if pruning && opts.pins.is_empty() => {
                Some(orbits.label_one_mask(graph, mode, &order))
            }
            _ => None,
        };

        Problem {
            graph,
            mode,
            n,
            slot_vertices,
            slots_per_vertex,
            order,
            one_allowed,
            pinned,
            reserved,
            pruning,
        }
    }

    fn labeling(&self, labels: &[u64]) -> Labeling {
        match self.mode {
            Mode::Total => {
                let p = self.graph.order();
                Labeling::Total(TotalLabeling {
                    vertex_labels: labels[..p].to_vec(),
                    edge_labels: labels[p..].to_vec(),
                })
            }
            Mode::Edge => Labeling::Edge(EdgeLabeling {
                edge_labels: labels.to_vec(),
            }),
        }
    }

    fn candidates(&self, slot: usize, used: u128) -> impl Iterator<Item = u64> + '_ {
        let pin = self.pinned[slot];
        let free = !used & !self.reserved;
        let one_ok = self.one_allowed.as_ref().map_or(true, |m| m[slot]);
        (1..=self.n as u64).filter(move |&l| match pin {
            Some(p) => l == p && used & (1 << l) == 0,
            None => free & (1 << l) != 0 && (l != 1 || one_ok),
        })
    }
}

/// Greedy static order: at each step take the slot that completes the most
/// vertices, then the one touching the most already-started vertices, then
/// the lowest index. Pinned slots go first.
fn slot_order(
    slot_vertices: &[Vec<usize>],
    slots_per_vertex: &[usize],
    pinned: &[Option<u64>],
) -> Vec<usize> {
    let n = slot_vertices.len();
    let mut remaining = slots_per_vertex.to_vec();
    let mut started = vec![false; remaining.len()];
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let place = |s: usize,
                     order: &mut Vec<usize>,
                     placed: &mut [bool],
                     remaining: &mut [usize],
                     started: &mut [bool]| {
        placed[s] = true;
        order.push(s);
        for &v in &slot_vertices[s] {
            remaining[v] -= 1;
            started[v] = true;
        }
    };
    for s in (0..n).filter(|&s| pinned[s].is_some()) {
        place(s, &mut order, &mut placed, &mut remaining, &mut started);
    }
    while order.len() < n {
        let best = (0..n)
            .filter(|&s| !placed[s])
            .max_by_key(|&s| {
                let vs = &slot_vertices[s];
                let completes = vs.iter().filter(|&&v| remaining[v] == 1).count();
                let touches = vs.iter().filter(|&&v| started[v]).count();
                (completes, touches, std::cmp::Reverse(s))
            })
            .expect("unplaced slot");
        place(best, &mut order, &mut placed, &mut remaining, &mut started);
    }
    order
}

/// State shared between workers.
struct Shared {
    /// Largest distinct count still worth finding.
    limit: AtomicUsize,
    stop: AtomicBool,
    exhausted: AtomicBool,
    nodes: AtomicU64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    fn halted(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    fn halt_exhausted(&self) {
        self.exhausted.store(true, Ordering::Relaxed);
        self.stop.store(true, Ordering::Relaxed);
    }
}

/// Per-worker mutable search state.
struct Worker<'p, 'g, 'v> {
    problem: &'p Problem<'g>,
    shared: &'p Shared,
    goal: Goal,
    labels: Vec<u64>,
    used: u128,
    partial: Vec<u64>,
    remaining: Vec<usize>,
    /// Multiset of completed weights as (weight, multiplicity).
    completed: Vec<(u64, u32)>,
    best: Option<(usize, Vec<u64>)>,
    unflushed: u64,
    visitor: Option<Visitor<'v>>,
}

impl<'p, 'g, 'v> Worker<'p, 'g, 'v> {
    fn new(problem: &'p Problem<'g>, shared: &'p Shared, goal: Goal) -> Self {
        let mut w = Worker {
            problem,
            shared,
            goal,
            labels: vec![0; problem.n],
            used: 0,
            partial: vec![0; problem.graph.order()],
            remaining: problem.slots_per_vertex.clone(),
            completed: Vec::new(),
            best: None,
            unflushed: 0,
            visitor: None,
        };
        if problem.pruning {
            // vertices without slots are complete from the start (weight 0)
            for v in 0..problem.graph.order() {
                if w.remaining[v] == 0 {
                    w.add_weight(0);
                }
            }
        }
        w
    }

    fn limit(&self) -> usize {
        self.shared.limit.load(Ordering::Relaxed)
    }

    fn add_weight(&mut self, weight: u64) {
        match self.completed.iter_mut().find(|(w, _)| *w == weight) {
            Some((_, c)) => *c += 1,
            None => self.completed.push((weight, 1)),
        }
    }

    fn remove_weight(&mut self, weight: u64) {
        let i = self
            .completed
            .iter()
            .position(|(w, _)| *w == weight)
            .expect("weight present");
        self.completed[i].1 -= 1;
        if self.completed[i].1 == 0 {
            self.completed.swap_remove(i);
        }
    }

    /// Places `label` on `slot`. Returns false when the partial labeling is
    /// already dead; the caller must still call [`Worker::unassign`].
    fn assign(&mut self, slot: usize, label: u64) -> bool {
        let problem = self.problem;
        self.labels[slot] = label;
        self.used |= 1 << label;
        for &v in &problem.slot_vertices[slot] {
            self.partial[v] += label;
            self.remaining[v] -= 1;
        }
        if !problem.pruning {
            return true;
        }
        let mut ok = true;
        for &v in &problem.slot_vertices[slot] {
            if self.remaining[v] == 0 {
                let w = self.partial[v];
                self.add_weight(w);
                if problem
                    .graph
                    .neighbors(v)
                    .iter()
                    .any(|&u| self.remaining[u] == 0 && self.partial[u] == w)
                {
                    ok = false;
                }
            }
        }
        ok && self.completed.len() <= self.limit()
    }

    fn unassign(&mut self, slot: usize, label: u64) {
        let problem = self.problem;
        for &v in &problem.slot_vertices[slot] {
            if problem.pruning && self.remaining[v] == 0 {
                self.remove_weight(self.partial[v]);
            }
            self.partial[v] -= label;
            self.remaining[v] += 1;
        }
        self.used &= !(1 << label);
        self.labels[slot] = 0;
    }

    /// Once the weight budget is saturated, every unfinished vertex must end
    /// on an existing weight not used by a finished neighbour. Checks that
    /// this is still reachable with the labels left.
    fn feasible(&self) -> bool {
        if self.completed.len() < self.limit() {
            return true;
        }
        let n = self.problem.n as u64;
        let avail: Vec<u64> = (1..=n).filter(|&l| self.used & (1 << l) == 0).collect();
        let mut prefix = Vec::with_capacity(avail.len() + 1);
        prefix.push(0u64);
        for &l in &avail {
            prefix.push(prefix.last().unwrap() + l);
        }
        let total = *prefix.last().unwrap();
        let graph = self.problem.graph;
        for v in 0..graph.order() {
            let r = self.remaining[v];
            if r == 0 {
                continue;
            }
            if r > avail.len() {
                return false;
            }
            let lo = self.partial[v] + prefix[r];
            let hi = self.partial[v] + total - prefix[avail.len() - r];
            let reachable = self.completed.iter().any(|&(w, _)| {
                if w < lo || w > hi {
                    return false;
                }
                if r == 1 && self.used & (1 << (w - self.partial[v])) != 0 {
                    return false;
                }
                !graph
                    .neighbors(v)
                    .iter()
                    .any(|&u| self.remaining[u] == 0 && self.partial[u] == w)
            });
            if !reachable {
                return false;
            }
        }
        true
    }

    fn tick(&mut self) {
        self.unflushed += 1;
        if self.unflushed >= CHECK_INTERVAL {
            self.flush_nodes();
        }
    }

    fn flush_nodes(&mut self) {
        let batch = std::mem::take(&mut self.unflushed);
        let total = self.shared.nodes.fetch_add(batch, Ordering::Relaxed) + batch;
        let over_nodes = self.shared.max_nodes.is_some_and(|m| total >= m);
        let over_time = self.shared.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.shared.halt_exhausted();
        }
    }

    fn leaf(&mut self) {
        let (distinct, valid) = if self.problem.pruning {
            (self.completed.len(), true)
        } else {
            let w = &self.partial;
            let valid = self.problem.graph.edges().iter().all(|&(u, v)| w[u] != w[v]);
            let mut ws = w.clone();
            ws.sort_unstable();
            ws.dedup();
            (ws.len(), valid)
        };
        if !valid || distinct > self.limit() {
            return;
        }
        match self.goal {
            Goal::Minimize { lower } => {
                self.best = Some((distinct, self.labels.clone()));
                self.shared.limit.fetch_min(distinct.saturating_sub(1), Ordering::Relaxed);
                if distinct <= lower {
                    self.shared.stop.store(true, Ordering::Relaxed);
                }
            }
            Goal::AtMost(_) => {
                self.best = Some((distinct, self.labels.clone()));
                self.shared.stop.store(true, Ordering::Relaxed);
            }
            Goal::Enumerate(_) => {
                let lab = self.problem.labeling(&self.labels);
                if let Some(visit) = self.visitor.as_mut() {
                    if visit(&lab).is_break() {
                        self.shared.stop.store(true, Ordering::Relaxed);
                    }
                }
            }
        }
    }

    fn dfs(&mut self, depth: usize) {
        if self.shared.halted() {
            return;
        }
        self.tick();
        if depth == self.problem.n {
            self.leaf();
            return;
        }
        let slot = self.problem.order[depth];
        let labels: Vec<u64> = self.problem.candidates(slot, self.used).collect();
        for label in labels {
            if self.shared.halted() {
                return;
            }
            if self.assign(slot, label) && (!self.problem.pruning || self.feasible()) {
                self.dfs(depth + 1);
            }
            self.unassign(slot, label);
        }
    }

    /// Runs the subtree in which the first slot carries `label`.
    fn run_branch(&mut self, label: u64) {
        let slot = self.problem.order[0];
        if self.assign(slot, label) && (!self.problem.pruning || self.feasible()) {
            self.dfs(1);
        }
        self.unassign(slot, label);
    }
}

pub(super) fn run(
    graph: &Graph,
    mode: Mode,
    goal: Goal,
    budget: SolveBudget,
    opts: &SearchOptions,
    visitor: Option<Visitor<'_>>,
) -> Outcome {
    let problem = Problem::new(graph, mode, opts);
    let start = Instant::now();
    let initial_limit = match goal {
        Goal::Minimize { .. } => graph.order(),
        Goal::AtMost(k) | Goal::Enumerate(k) => k.min(graph.order()),
    };
    let shared = Shared {
        limit: AtomicUsize::new(initial_limit),
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
        max_nodes: budget.max_nodes,
        deadline: budget.deadline().map(|d| start + d),
    };

    let parallel = !budget.deterministic && visitor.is_none() && problem.n > 1;
    let best = if parallel {
        let first = problem.order[0];
        let branches: Vec<u64> = problem.candidates(first, 0).collect();
        let found = Mutex::new(Vec::new());
        branches.par_iter().for_each(|&label| {
            if shared.halted() {
                return;
            }
            let mut w = Worker::new(&problem, &shared, goal);
            w.run_branch(label);
            w.flush_nodes();
            if let Some(b) = w.best {
                found.lock().expect("poisoned").push(b);
            }
        });
        found
            .into_inner()
            .expect("poisoned")
            .into_iter()
            .min_by_key(|(d, labels)| (*d, labels.clone()))
    } else {
        let mut w = Worker::new(&problem, &shared, goal);
        w.visitor = visitor;
        w.dfs(0);
        w.flush_nodes();
        w.best
    };

    Outcome {
        best: best.map(|(d, labels)| (d, problem.labeling(&labels))),
        closed: !shared.exhausted.load(Ordering::Relaxed)
            && !matches!(goal, Goal::Enumerate(_) if shared.stop.load(Ordering::Relaxed)),
        nodes: shared.nodes.load(Ordering::Relaxed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn cycle_order_walks_around() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        let p = Problem::new(&c4, Mode::Total, &SearchOptions::default());
        // v0, e01, e03 (completes v0), v1, e12 (completes v1), ...
        assert_eq!(p.order[..5], [0, 4, 5, 1, 6]);
        assert_eq!(p.order.len(), 8);
    }

    #[test]
    fn pinned_slots_lead() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        let opts = SearchOptions {
            pins: vec![(super::super::Slot::Edge(2), 1)],
            ..Default::default()
        };
        let p = Problem::new(&c4, Mode::Total, &opts);
        assert_eq!(p.order[0], 6);
        assert_eq!(p.candidates(6, 0).collect::<Vec<_>>(), vec![1]);
        assert!(p.candidates(0, 0).all(|l| l != 1));
    }
}
