use crate::graph::Graph;

use super::BoundsError;

/// Largest order accepted by [`chromatic_number`].
pub const CHROMATIC_LIMIT: usize = 16;

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

/// Clique number by subset enumeration (p ≤ 16 keeps this at 65536 sets).
fn clique_number(adj: &[u32]) -> usize {
    let p = adj.len();
    let mut best = 0;
    for set in 0u32..(1 << p) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let is_clique = (0..p)
            .filter(|&v| set >> v & 1 == 1)
            .all(|v| set & !(1 << v) & !adj[v] == 0);
        if is_clique {
            best = size;
        }
    }
    best
}

/// Greedy colouring in descending degree order.
fn greedy_colors(adj: &[u32], order: &[usize]) -> usize {
    let mut color = vec![usize::MAX; adj.len()];
    let mut used = 0;
    for &v in order {
        let c = (0..)
            .find(|&c| (0..adj.len()).all(|u| adj[v] >> u & 1 == 0 || color[u] != c))
            .unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable(adj: &[u32], order: &[usize], k: usize, color: &mut [usize], depth: usize, top: usize) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    // a fresh colour is interchangeable with any other unused one
    for c in 0..k.min(top + 1) {
        let clash = (0..adj.len()).any(|u| adj[v] >> u & 1 == 1 && color[u] == c);
        if !clash {
            color[v] = c;
            if colorable(adj, order, k, color, depth + 1, top.max(c + 1)) {
                return true;
            }
            color[v] = usize::MAX;
        }
    }
    false
}

/// Exact chromatic number: clique lower bound, greedy upper bound, and a
/// backtracking test for every value in between.
pub fn chromatic_number(g: &Graph) -> Result<usize, BoundsError> {
    let p = g.order();
    if p > CHROMATIC_LIMIT {
        return Err(BoundsError::TooLarge {
            order: p,
            limit: CHROMATIC_LIMIT,
        });
    }
    if p == 0 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let lower = clique_number(&adj).max(1);
    let upper = greedy_colors(&adj, &order);
    for k in lower..upper {
        let mut color = vec![usize::MAX; p];
        if colorable(&adj, &order, k, &mut color, 0, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}
