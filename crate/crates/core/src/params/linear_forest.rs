//! Exact distance to linear forest by increasing-size subset search.
//!
//! A deletion set works when the remaining graph has maximum degree at most
//! two and no cycle. A greedy packing of vertex-disjoint claws (a degree-3
//! vertex plus three neighbors) gives the starting size: each claw forces
//! at least one deletion.

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};

use super::{adjacency_masks, full_mask};

pub const LINEAR_FOREST_CAP: usize = 20;

/// Returns (dl, lexicographically first minimum deletion set).
pub fn distance_to_linear_forest(g: &WeightedGraph, cap: usize) -> Result<(usize, Vec<VertexId>)> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "distance to linear forest", n: g.n(), cap });
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let full = full_mask(n);

    let lb = claw_packing(&adj, n);
    for k in lb..=n {
        let mut chosen = Vec::with_capacity(k);
        if let Some(set) = search(&adj, n, full, k, 0, 0, &mut chosen) {
            return Ok((k, set));
        }
    }
    unreachable!("deleting every vertex always works")
}

fn claw_packing(adj: &[u64], n: usize) -> usize {
    let mut used = 0u64;
    let mut count = 0;
    for v in 0..n {
        if used & (1 << v) != 0 {
            continue;
        }
        let free = adj[v] & !used;
        if free.count_ones() >= 3 {
            let mut taken = 1u64 << v;
            let mut it = free;
            for _ in 0..3 {
                let w = it.trailing_zeros();
                it &= it - 1;
                taken |= 1u64 << w;
            }
            used |= taken;
            count += 1;
        }
    }
    count
}

fn is_linear_forest(adj: &[u64], alive: u64) -> bool {
    // Max degree two.
    let mut it = alive;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        if (adj[v] & alive).count_ones() > 2 {
            return false;
        }
    }
    // Acyclic: walk each path component from an endpoint; a component with
    // no degree-<=1 vertex is a cycle.
    let mut seen = 0u64;
    let mut it = alive;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        if seen & (1 << v) != 0 || (adj[v] & alive).count_ones() > 1 {
            continue;
        }
        // Walk from this endpoint.
        let mut prev = usize::MAX;
        let mut cur = v;
        seen |= 1 << v;
        loop {
            let mut nb = adj[cur] & alive;
            if prev != usize::MAX {
                nb &= !(1u64 << prev);
            }
            if nb == 0 {
                break;
            }
            let nxt = nb.trailing_zeros() as usize;
            seen |= 1 << nxt;
            prev = cur;
            cur = nxt;
        }
    }
    // Anything alive but unseen sits on a cycle.
    alive & !seen == 0
}

fn search(
    adj: &[u64],
    n: usize,
    full: u64,
    k: usize,
    start: usize,
    deleted: u64,
    chosen: &mut Vec<VertexId>,
) -> Option<Vec<VertexId>> {
    if chosen.len() == k {
        return is_linear_forest(adj, full & !deleted).then(|| chosen.clone());
    }
    let remaining = k - chosen.len();
    for v in start..=(n - remaining) {
        chosen.push(v);
        let r = search(adj, n, full, k, v + 1, deleted | (1 << v), chosen);
        chosen.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}
