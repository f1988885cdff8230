//! Exact max leaf number.
//!
//! For a connected graph on n >= 3 vertices the internal vertices of any
//! spanning tree form a connected dominating set, and conversely any
//! connected dominating set D yields a spanning tree whose leaves are
//! exactly V minus D. So ml = n - gamma_c, computed by increasing-size
//! subset search over connected dominating sets.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, WeightedGraph};

use super::{adjacency_masks, full_mask, mask_connected};

pub const MAX_LEAF_CAP: usize = 20;

/// Returns (ml, edge ids of a spanning tree realizing ml leaves).
/// Requires a connected graph.
pub fn max_leaf_number(g: &WeightedGraph, cap: usize) -> Result<(usize, Vec<EdgeId>)> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "max leaf number", n: g.n(), cap });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n <= 1 {
        return Ok((0, Vec::new()));
    }
    if n == 2 {
        return Ok((2, vec![0]));
    }

    let adj = adjacency_masks(g);
    let closed: Vec<u64> = (0..n).map(|v| adj[v] | (1 << v)).collect();
    let full = full_mask(n);

    for k in 1..n {
        if let Some(dom) = find_cds(&adj, &closed, full, n, k) {
            let tree = tree_from_cds(g, dom);
            debug_assert_eq!(leaf_count(g, &tree), n - k);
            return Ok((n - k, tree));
        }
    }
    unreachable!("V itself is always a connected dominating set for n >= 3")
}

/// Lexicographically first connected dominating set of size exactly `k`.
fn find_cds(adj: &[u64], closed: &[u64], full: u64, n: usize, k: usize) -> Option<u64> {
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    fn go(
        adj: &[u64],
        closed: &[u64],
        full: u64,
        n: usize,
        k: usize,
        start: usize,
        mask: u64,
        dominated: u64,
        chosen: &mut Vec<usize>,
    ) -> Option<u64> {
        if chosen.len() == k {
            return (dominated == full && mask_connected(adj, mask)).then_some(mask);
        }
        let remaining = k - chosen.len();
        // Even taking every remaining vertex cannot dominate more than the
        // union of all closed neighborhoods from `start` on.
        let mut tail = dominated;
        for v in start..n {
            tail |= closed[v];
        }
        if tail != full {
            return None;
        }
        for v in start..=(n - remaining) {
            chosen.push(v);
            let r = go(
                adj,
                closed,
                full,
                n,
                k,
                v + 1,
                mask | (1 << v),
                dominated | closed[v],
                chosen,
            );
            chosen.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    go(adj, closed, full, n, k, 0, 0, 0, &mut chosen)
}

/// Spanning tree whose internal vertices all lie inside the dominating set:
/// a BFS tree of the set plus one pendant edge per outside vertex.
fn tree_from_cds(g: &WeightedGraph, dom: u64) -> Vec<EdgeId> {
    let n = g.n();
    let mut tree = Vec::with_capacity(n - 1);
    let mut in_tree = vec![false; n];
    let root = dom.trailing_zeros() as usize;
    in_tree[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &e in g.incident(v) {
            let w = g.edge(e).other(v);
            if dom & (1 << w) != 0 && !in_tree[w] {
                in_tree[w] = true;
                tree.push(e);
                queue.push_back(w);
            }
        }
    }
    for v in 0..n {
        if dom & (1 << v) != 0 {
            continue;
        }
        // Attach to the smallest-id dominating neighbor via the smallest
        // edge id.
        let e = g
            .incident(v)
            .iter()
            .copied()
            .filter(|&e| dom & (1 << g.edge(e).other(v)) != 0)
            .min()
            .expect("dominating set touches every outside vertex");
        tree.push(e);
        in_tree[v] = true;
    }
    debug_assert!(in_tree.iter().all(|&b| b));
    tree
}

fn leaf_count(g: &WeightedGraph, tree: &[EdgeId]) -> usize {
    let mut deg = vec![0usize; g.n()];
    for &e in tree {
        deg[g.edge(e).u] += 1;
        deg[g.edge(e).v] += 1;
    }
    deg.iter().filter(|&&d| d == 1).count()
}

#[cfg(test)]
mod tests {
    use super::super::tests::{complete, cycle, path, star, unit_graph};
    use super::*;

    #[test]
    fn complete_graph() {
        let (ml, tree) = max_leaf_number(&complete(4), MAX_LEAF_CAP).unwrap();
        assert_eq!(ml, 3);
        assert_eq!(tree.len(), 3);
        assert_eq!(leaf_count(&complete(4), &tree), 3);
    }

    #[test]
    fn paths_have_two_leaves() {
        for n in [2, 3, 5, 8] {
            let g = path(n);
            assert_eq!(max_leaf_number(&g, MAX_LEAF_CAP).unwrap().0, 2, "P_{n}");
        }
    }

    #[test]
    fn star_is_its_own_spanning_tree() {
        let (ml, tree) = max_leaf_number(&star(6), MAX_LEAF_CAP).unwrap();
        assert_eq!(ml, 5);
        assert_eq!(tree.len(), 5);
    }

    #[test]
    fn cycle_max_leaves() {
        // C_n: removing one edge gives a path; a spanning tree of a cycle
        // is always a path, so ml = 2.
        assert_eq!(max_leaf_number(&cycle(6), MAX_LEAF_CAP).unwrap().0, 2);
    }

    #[test]
    fn witness_tree_spans_and_realizes_ml() {
        let g = unit_graph(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 4), (4, 5)]);
        let (ml, tree) = max_leaf_number(&g, MAX_LEAF_CAP).unwrap();
        assert_eq!(tree.len(), g.n() - 1);
        assert_eq!(leaf_count(&g, &tree), ml);
    }

    #[test]
    fn rejects_disconnected_and_cap() {
        let g = unit_graph(&[(0, 1), (2, 3)]);
        assert!(matches!(max_leaf_number(&g, MAX_LEAF_CAP), Err(Error::Disconnected)));
        assert!(matches!(max_leaf_number(&path(5), 4), Err(Error::CapExceeded { .. })));
    }
}
