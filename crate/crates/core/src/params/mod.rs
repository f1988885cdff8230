//! Exact exponential-time computation of the classic graph parameters.
//!
//! Everything here except the doubling dimension works on the unweighted
//! view of the graph. Each computation carries an instance cap and errors
//! with `CapExceeded` above it.

mod bandwidth;
mod doubling;
mod leaf;
mod linear_forest;
mod width;

pub use bandwidth::{bandwidth, BANDWIDTH_CAP};
pub use doubling::{doubling_dimension, DoublingWitness, DOUBLING_CAP};
pub use leaf::{max_leaf_number, MAX_LEAF_CAP};
pub use linear_forest::{distance_to_linear_forest, LINEAR_FOREST_CAP};
pub use width::{
    pathwidth, treewidth, validate_decomposition, Decomposition, DecompositionKind, WIDTH_CAP,
};

use crate::graph::WeightedGraph;

/// Bitmask adjacency of the unweighted view. Panics above 64 vertices;
/// every caller checks its cap first.
pub(crate) fn adjacency_masks(g: &WeightedGraph) -> Vec<u64> {
    assert!(g.n() <= 64);
    let mut adj = vec![0u64; g.n()];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    adj
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// True when the vertices of `mask` induce a connected subgraph.
pub(crate) fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == mask
}

/// The largest h such that h vertices have degree at least h.
pub fn h_index(g: &WeightedGraph) -> usize {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut h = 0;
    for (i, d) in degrees.iter().enumerate() {
        if *d >= i + 1 {
            h = i + 1;
        } else {
            break;
        }
    }
    h
}

/// (minimum degree, maximum degree).
pub fn degree_stats(g: &WeightedGraph) -> (usize, usize) {
    (g.min_degree(), g.max_degree())
}
