//! The deterministic verification corpus: every gadget instance at the
//! standard sizes, unit complete graphs, and seeded random graphs,
//! subcubic graphs and metrics.

use atlas_core::build;
use atlas_core::embed::FiniteMetric;
use atlas_core::gadgets::{self, CaterpillarVariant, Gadget};
use atlas_core::graph::WeightedGraph;
use atlas_core::rational::{rat, Rat};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Random connected graph: a random spanning tree plus extra edges with
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

/// Random connected unit-weight graph with maximum degree at most three.
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

/// Random metric: the shortest-path metric of a random weighted graph.
pub fn random_metric(seed: u64, n: usize) -> FiniteMetric {
    let g = random_connected_graph(seed, n, 0.4);
    FiniteMetric::from_graph(&g).expect("connected by construction")
}

/// Every gadget instance at its standard corpus sizes.
pub fn standard_gadgets() -> Vec<(String, Gadget)> {
    let mut out: Vec<(String, Gadget)> = Vec::new();
    for n in 2..=7 {
        out.push((format!("star-{n}"), gadgets::star(n).unwrap()));
    }
    for l in 1..=6 {
        out.push((format!("subdivided-star-{l}"), gadgets::subdivided_star(l).unwrap()));
    }
    for n in 2..=6 {
        out.push((format!("complete-exp-{n}"), gadgets::complete_graph_exp_weights(n).unwrap()));
    }
    for b in [2usize, 4, 6] {
        for variant in [
            CaterpillarVariant::Hd2LowerBound,
            CaterpillarVariant::SkeletonBandwidth,
            CaterpillarVariant::SkeletonThree,
            CaterpillarVariant::Hd1Constant,
        ] {
            out.push((
                format!("caterpillar-{}-{b}", variant.as_str()),
                gadgets::caterpillar(b, variant).unwrap(),
            ));
        }
    }
    for d in 1..=2 {
        out.push((format!("binary-tree-{d}"), gadgets::binary_tree_geometric(d).unwrap()));
    }
    for q in 2..=3 {
        out.push((format!("subdivided-grid-{q}"), gadgets::subdivided_grid(q).unwrap()));
    }
    for (name, base) in tight_weight_inputs() {
        for metric in [false, true] {
            let tag = if metric { "metric" } else { "plain" };
            out.push((
                format!("tight-weights-{tag}-{name}"),
                gadgets::spanning_tree_tight_weights(&base, metric).unwrap(),
            ));
        }
    }
    for (name, base) in subcubic_inputs() {
        out.push((format!("vc-reduction-{name}"), gadgets::vc_reduction(&base).unwrap()));
    }
    out
}

/// Unweighted bases for the tight-weighting gadget.
pub fn tight_weight_inputs() -> Vec<(String, WeightedGraph)> {
    vec![
        ("K4".to_string(), build::complete_graph(4)),
        ("C6".to_string(), build::cycle_graph(6)),
        ("petersen".to_string(), build::petersen_graph()),
    ]
}

/// The subcubic graphs (n <= 10) feeding the hardness reduction.
pub fn subcubic_inputs() -> Vec<(String, WeightedGraph)> {
    let mut out = vec![
        ("P2".to_string(), build::path_graph(2)),
        ("P4".to_string(), build::path_graph(4)),
        ("C5".to_string(), build::cycle_graph(5)),
        ("C6".to_string(), build::cycle_graph(6)),
        ("K4".to_string(), build::complete_graph(4)),
        ("Q3".to_string(), build::cube_graph()),
        ("petersen".to_string(), build::petersen_graph()),
    ];
    for (i, n) in [6usize, 8, 10].into_iter().enumerate() {
        out.push((format!("random-cubic-{n}"), random_subcubic_graph(7000 + i as u64, n)));
    }
    out
}

/// The random half of the corpus: 50 connected weighted graphs, n <= 10.
pub fn random_corpus() -> Vec<(String, WeightedGraph)> {
    (0..50u64)
        .map(|seed| {
            let n = 4 + (seed as usize % 7); // 4..=10
            (format!("random-{seed:02}-n{n}"), random_connected_graph(1000 + seed, n, 0.3))
        })
        .collect()
}

/// The full corpus for the verification harness. Large hardness-reduction
/// outputs stay out (criterion-style checks build them on the fly); the
/// two smallest are kept as ordinary corpus members.
pub fn verify_corpus_graphs() -> Vec<(String, WeightedGraph)> {
    let mut out: Vec<(String, WeightedGraph)> = Vec::new();
    for (name, gadget) in standard_gadgets() {
        let keep = !name.starts_with("vc-reduction")
            || name == "vc-reduction-P2"
            || name == "vc-reduction-P4";
        if keep {
            out.push((name, gadget.graph));
        }
    }
    for n in 3..=6 {
        out.push((format!("complete-unit-{n}"), build::complete_graph(n)));
    }
    out.extend(random_corpus());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = random_connected_graph(42, 8, 0.3);
        let b = random_connected_graph(42, 8, 0.3);
        assert_eq!(a.m(), b.m());
        for (x, y) in a.edges().iter().zip(b.edges()) {
            assert_eq!((x.u, x.v, &x.weight), (y.u, y.v, &y.weight));
        }
    }

    #[test]
    fn subcubic_inputs_are_subcubic() {
        for (name, g) in subcubic_inputs() {
            assert!(g.max_degree() <= 3, "{name}");
            assert!(g.n() <= 10, "{name}");
            assert!(g.is_connected(), "{name}");
        }
    }

    #[test]
    fn corpus_has_expected_shape() {
        let corpus = verify_corpus_graphs();
        assert!(corpus.len() >= 80);
        let names: std::collections::BTreeSet<&str> =
            corpus.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names.len(), corpus.len(), "corpus names must be unique");
    }
}
