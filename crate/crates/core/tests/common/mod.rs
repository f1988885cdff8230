//! Shared generators for integration tests: seeded random connected
//! weighted graphs and random metrics.

use atlas_core::graph::WeightedGraph;
use atlas_core::rational::{rat, Rat};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Random connected graph: a random spanning tree plus extra edges, with
/// random small positive rational weights.
pub fn random_connected_graph(seed: u64, n: usize, extra_edge_prob: f64) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(u64, u64, Rat)> = Vec::new();
    let weight = |rng: &mut ChaCha8Rng| rat(rng.gen_range(1..=60), rng.gen_range(1..=9));
    for v in 1..n as u64 {
        let u = rng.gen_range(0..v);
        edges.push((u, v, weight(&mut rng)));
    }
    for u in 0..n as u64 {
        for v in (u + 1)..n as u64 {
            let exists = edges.iter().any(|&(a, b, _)| (a, b) == (u, v));
            if !exists && rng.gen_bool(extra_edge_prob) {
                edges.push((u, v, weight(&mut rng)));
            }
        }
    }
    WeightedGraph::from_edge_list(&edges).expect("valid random graph")
}

/// Random connected graph with maximum degree at most three.
#[allow(dead_code)]
pub fn random_subcubic_graph(seed: u64, n: usize) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(u64, u64, Rat)> = Vec::new();
    for v in 1..n {
        let candidates: Vec<usize> = (0..v).filter(|&u| deg[u] < 3).collect();
        let u = candidates[rng.gen_range(0..candidates.len())];
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u as u64, v as u64, Rat::from_integer(1.into())));
    }
    for _ in 0..n {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || deg[u] >= 3 || deg[v] >= 3 {
            continue;
        }
        let (a, b) = (u.min(v) as u64, u.max(v) as u64);
        if edges.iter().any(|&(x, y, _)| (x, y) == (a, b)) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push((a, b, Rat::from_integer(1.into())));
    }
    WeightedGraph::from_edge_list(&edges).expect("valid subcubic graph")
}
