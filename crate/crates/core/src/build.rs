//! Small deterministic graph constructors shared by tests, gadget claims
//! and the verification corpus.

use crate::graph::WeightedGraph;
use crate::rational::{rat_int, Rat};

pub fn unit_from_pairs(pairs: &[(u64, u64)]) -> WeightedGraph {
    let list: Vec<(u64, u64, Rat)> = pairs.iter().map(|&(u, v)| (u, v, rat_int(1))).collect();
    WeightedGraph::from_edge_list(&list).expect("valid unit graph")
}

/// Path on n vertices, unit weights.
pub fn path_graph(n: usize) -> WeightedGraph {
    assert!(n >= 1);
    if n == 1 {
        return WeightedGraph::from_dense(1, &[]).unwrap();
    }
    unit_from_pairs(&(0..n as u64 - 1).map(|v| (v, v + 1)).collect::<Vec<_>>())
}

/// Cycle on n vertices, unit weights.
pub fn cycle_graph(n: usize) -> WeightedGraph {
    assert!(n >= 3);
    unit_from_pairs(&(0..n as u64).map(|v| (v, (v + 1) % n as u64)).collect::<Vec<_>>())
}

/// Complete graph on n vertices, unit weights.
pub fn complete_graph(n: usize) -> WeightedGraph {
    assert!(n >= 2);
    let mut pairs = Vec::new();
    for u in 0..n as u64 {
        for v in (u + 1)..n as u64 {
            pairs.push((u, v));
        }
    }
    unit_from_pairs(&pairs)
}

/// Star on n vertices (center 0), unit weights.
pub fn star_graph(n: usize) -> WeightedGraph {
    assert!(n >= 2);
    unit_from_pairs(&(1..n as u64).map(|v| (0, v)).collect::<Vec<_>>())
}

/// rows x cols grid, unit weights, row-major ids.
pub fn grid_graph(rows: usize, cols: usize) -> WeightedGraph {
    let id = |r: usize, c: usize| (r * cols + c) as u64;
    let mut pairs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                pairs.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                pairs.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    unit_from_pairs(&pairs)
}

/// The 3-regular Petersen graph on 10 vertices, unit weights.
pub fn petersen_graph() -> WeightedGraph {
    unit_from_pairs(&[
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    ])
}

/// The 3-regular cube graph Q_3 on 8 vertices, unit weights.
pub fn cube_graph() -> WeightedGraph {
    let mut pairs = Vec::new();
    for v in 0u64..8 {
        for b in 0..3 {
            let w = v ^ (1 << b);
            if v < w {
                pairs.push((v, w));
            }
        }
    }
    unit_from_pairs(&pairs)
}
