//! Exact bandwidth by iterative deepening over a feasibility DFS.
//!
//! `feasible(k)` searches orderings position by position. Pruning: a
//! placed vertex with an unplaced neighbor imposes a deadline (its position
//! plus k); once the next position exceeds any deadline the branch dies.
//! Twin vertices (equal neighborhoods, with or without the mutual edge)
//! are interchangeable, so among unplaced twins only the smallest id may
//! be placed next.

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};

pub const BANDWIDTH_CAP: usize = 14;

/// Returns (bw, labeling) where labeling[v] is the position of v in 1..=n.
pub fn bandwidth(g: &WeightedGraph, cap: usize) -> Result<(usize, Vec<usize>)> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "bandwidth", n: g.n(), cap });
    }
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    if g.m() == 0 {
        return Ok((0, (1..=n).collect()));
    }

    let mut adj = vec![0u64; n];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }

    // Twin classes: canonical representative ordering breaks symmetry.
    let mut class = (0..n).collect::<Vec<usize>>();
    for u in 0..n {
        for v in (u + 1)..n {
            let without = |x: usize, y: usize| adj[x] & !(1u64 << y);
            if adj[u] == adj[v] || without(u, v) == without(v, u) {
                let cu = class[u];
                class[v] = cu;
            }
        }
    }

    // Max degree / 2 is a classic lower bound.
    let lb = g.max_degree().div_ceil(2).max(1);
    for k in lb..n {
        if let Some(labels) = feasible(&adj, &class, n, k) {
            return Ok((k, labels));
        }
    }
    let identity: Vec<usize> = (1..=n).collect();
    Ok((n - 1, identity))
}

fn feasible(adj: &[u64], class: &[usize], n: usize, k: usize) -> Option<Vec<usize>> {
    let mut pos = vec![0usize; n]; // 1-based, 0 = unplaced
    let mut order: Vec<VertexId> = Vec::with_capacity(n);
    if dfs(adj, class, n, k, &mut pos, &mut order, 0) {
        Some(pos)
    } else {
        None
    }
}

fn dfs(
    adj: &[u64],
    class: &[usize],
    n: usize,
    k: usize,
    pos: &mut Vec<usize>,
    order: &mut Vec<VertexId>,
    placed_mask: u64,
) -> bool {
    let i = order.len() + 1; // next position to fill
    if i > n {
        return true;
    }
    // Deadline check: every placed vertex with an unplaced neighbor must
    // still be within reach of position i.
    for &u in order.iter() {
        if adj[u] & !placed_mask != 0 && pos[u] + k < i {
            return false;
        }
    }
    'candidates: for v in 0..n {
        if placed_mask & (1 << v) != 0 {
            continue;
        }
        // Twin symmetry: only the smallest unplaced member of a class.
        for w in 0..v {
            if class[w] == class[v] && placed_mask & (1 << w) == 0 {
                continue 'candidates;
            }
        }
        // Every placed neighbor must be within k of position i.
        let mut nb = adj[v] & placed_mask;
        let mut ok = true;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if pos[u] + k < i {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        pos[v] = i;
        order.push(v);
        if dfs(adj, class, n, k, pos, order, placed_mask | (1 << v)) {
            return true;
        }
        order.pop();
        pos[v] = 0;
    }
    false
}
