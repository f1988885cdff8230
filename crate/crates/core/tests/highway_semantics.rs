//! Highway-dimension semantics: catalog closure, witness rules, the
//! hardness-reduction family, radius discretization soundness and the
//! ordering chain.

mod common;

use atlas_core::build;
use atlas_core::gadgets::{self, CaterpillarVariant};
use atlas_core::highway::{
    anchored_min_hitting_set, critical_radii, enumerate_shortest_paths, evaluation_radii,
    highway_dimension, paths_to_hit, r_significant, HdTag, CATALOG_CAP,
};
use atlas_core::hitting::min_vertex_cover;
use atlas_core::params::doubling_dimension;
use atlas_core::rational::{rat, rat_int};
use atlas_core::skeleton::skeleton_dimension;
use atlas_core::PathRecord;
use common::{random_connected_graph, random_subcubic_graph};

#[test]
fn subpath_closure_on_random_graphs() {
    let mut checked = 0;
    for seed in 0..14u64 {
        let g = random_connected_graph(300 + seed, 4 + (seed as usize % 5), 0.35);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        if cat.had_ties() {
            continue; // closure is only promised for unique shortest paths
        }
        checked += 1;
        for p in cat.unordered_paths() {
            let k = p.vertices.len();
            for i in 0..k {
                for j in (i + 1)..k {
                    let sub = &p.vertices[i..=j];
                    assert!(
                        cat.is_shortest(sub) || cat.is_shortest(&reversed(sub)),
                        "subpath {sub:?} of {:?} not canonical (seed {seed})",
                        p.vertices
                    );
                }
            }
        }
    }
    assert!(checked >= 10, "only {checked} tie-free graphs sampled");
}

fn reversed(seq: &[usize]) -> Vec<usize> {
    let mut v = seq.to_vec();
    v.reverse();
    v
}

#[test]
fn exp_clique_hd1_is_one() {
    for n in 2..=5 {
        let g = gadgets::complete_graph_exp_weights(n).unwrap();
        let w = highway_dimension(&g.graph, HdTag::Hd1).unwrap();
        assert_eq!(w.value, 1, "n = {n}");
    }
}

#[test]
fn subdivided_star_hd2_is_l() {
    for l in 1..=4 {
        let g = gadgets::subdivided_star(l).unwrap();
        let w = highway_dimension(&g.graph, HdTag::Hd2).unwrap();
        assert_eq!(w.value, l, "l = {l}");
    }
}

#[test]
fn caterpillar_hd2_lower_bound() {
    let g = gadgets::caterpillar(4, CaterpillarVariant::Hd2LowerBound).unwrap();
    let w = highway_dimension(&g.graph, HdTag::Hd2).unwrap();
    assert!(w.value >= 4, "hd2 = {} < b", w.value);
}

#[test]
fn caterpillar_hd1_constant() {
    for b in [3, 5] {
        let g = gadgets::caterpillar(b, CaterpillarVariant::Hd1Constant).unwrap();
        let w = highway_dimension(&g.graph, HdTag::Hd1).unwrap();
        assert!(w.value <= 7, "b = {b}: hd1 = {}", w.value);
    }
}

#[test]
fn vc_reduction_witness_rules() {
    // 5-cycle reduction: originals 0..4, starred 5..9, hub x = 10.
    let c5 = build::cycle_graph(5);
    let gadget = gadgets::vc_reduction(&c5).unwrap();
    let g = &gadget.graph;
    let cat = enumerate_shortest_paths(g, CATALOG_CAP).unwrap();
    let r = rat(5, 2);

    // A single original vertex only extends to length 2 < 5/2.
    let v = PathRecord { vertices: vec![0], length: rat_int(0) };
    assert!(r_significant(g, &cat, &v, &r).is_none());

    // A single starred vertex has the witness x v* v of length 6.
    let starred = PathRecord { vertices: vec![5], length: rat_int(0) };
    let w = r_significant(g, &cat, &starred, &r).unwrap();
    assert!(w.length > r);

    // The family at (x, 5/2) contains every original edge and every
    // singleton outside V.
    let family = paths_to_hit(g, &cat, 10, &r, HdTag::Hd3);
    for e in c5.edges() {
        let mut key = vec![e.u, e.v];
        key.sort_unstable();
        assert!(family.contains(&key), "missing edge {key:?}");
    }
    for v in 5..=10 {
        assert!(family.contains(&vec![v]), "missing singleton {v}");
    }
    for v in 0..5 {
        assert!(!family.contains(&vec![v]), "original singleton {v} must not appear");
    }
}

#[test]
fn vc_reduction_anchored_identity() {
    // Minimum hitting set at (x, 5/2) is |C| + n + 1.
    let cases: Vec<(atlas_core::WeightedGraph, &str)> = vec![
        (build::path_graph(2), "single edge"),
        (build::path_graph(4), "P4"),
        (build::cycle_graph(5), "C5"),
        (build::cube_graph(), "Q3"),
    ];
    for (g, name) in cases {
        let n = g.n();
        let c = min_vertex_cover(&g, 24).unwrap().len();
        let gadget = gadgets::vc_reduction(&g).unwrap();
        let cat = enumerate_shortest_paths(&gadget.graph, CATALOG_CAP).unwrap();
        let (size, hs) =
            anchored_min_hitting_set(&gadget.graph, &cat, 2 * n, &rat(5, 2), HdTag::Hd3).unwrap();
        assert_eq!(size, c + n + 1, "{name}");
        // The hitting set must contain all of V' minus V.
        for v in n..=2 * n {
            assert!(hs.contains(&v), "{name}: missing {v}");
        }
    }
}

#[test]
fn radius_discretization_is_sound() {
    // Sampling many extra radii never beats the critical-radius sweep.
    for seed in 0..2u64 {
        let g = random_connected_graph(400 + seed, 6, 0.35);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        for tag in [HdTag::Hd1, HdTag::Hd2, HdTag::Hd3] {
            for u in 0..g.n() {
                let criticals = critical_radii(&g, &cat, u, tag);
                let mut anchored_max = 0usize;
                for r in evaluation_radii(&criticals) {
                    let (s, _) = anchored_min_hitting_set(&g, &cat, u, &r, tag).unwrap();
                    anchored_max = anchored_max.max(s);
                }
                let top = criticals.last().cloned().unwrap_or_else(|| rat_int(1));
                for i in 1..=200u64 {
                    let r = &top * rat(i as i64 * 7 % 211 + 1, 191);
                    if !num::Signed::is_positive(&r) {
                        continue;
                    }
                    let (s, _) = anchored_min_hitting_set(&g, &cat, u, &r, tag).unwrap();
                    assert!(
                        s <= anchored_max,
                        "seed {seed} {} anchor {u}: dense radius beat the sweep",
                        tag.as_str()
                    );
                }
            }
        }
    }
}

#[test]
fn fast_route_matches_anchored_scan() {
    // highway_dimension's internal membership tables must agree with the
    // paths_to_hit route: the max over anchors and evaluation radii of the
    // anchored minimum hitting set is the highway dimension.
    for seed in 0..4u64 {
        let g = random_connected_graph(650 + seed, 5 + (seed as usize % 2), 0.4);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        for tag in [HdTag::Hd1, HdTag::Hd2, HdTag::Hd3] {
            let fast = highway_dimension(&g, tag).unwrap().value;
            let mut slow = 0usize;
            for u in 0..g.n() {
                for r in evaluation_radii(&critical_radii(&g, &cat, u, tag)) {
                    let (s, _) = anchored_min_hitting_set(&g, &cat, u, &r, tag).unwrap();
                    slow = slow.max(s);
                }
            }
            assert_eq!(fast, slow, "seed {seed} {}", tag.as_str());
        }
    }
}

#[test]
fn ordering_chain_with_kappa_and_doubling() {
    for seed in 0..6u64 {
        let g = random_connected_graph(500 + seed, 5 + (seed as usize % 3), 0.4);
        let hd1 = highway_dimension(&g, HdTag::Hd1).unwrap().value;
        let hd2 = highway_dimension(&g, HdTag::Hd2).unwrap().value;
        let hd3 = highway_dimension(&g, HdTag::Hd3).unwrap().value;
        let kappa = skeleton_dimension(&g).kappa;
        let d = doubling_dimension(&g, 16).unwrap().d;
        assert!(hd2 <= hd1, "seed {seed}");
        assert!(hd2 <= hd3, "seed {seed}");
        assert!(kappa <= hd3, "seed {seed}: kappa {kappa} > hd3 {hd3}");
        assert!(hd1 <= hd3 * (hd3 + 1), "seed {seed}");
        assert!(d <= 2 * kappa + 1, "seed {seed}: d {d} > 2k+1");
    }
}

mod hitting_properties {
    use atlas_core::hitting::{min_hitting_set, min_vertex_cover, HittingSetInstance};
    use atlas_core::rational::rat_int;
    use atlas_core::Rat;
    use proptest::prelude::*;

    fn exhaustive_min(family: &[Vec<usize>], candidates: &[usize]) -> usize {
        fn combos(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for (i, &v) in pool.iter().enumerate() {
                for mut rest in combos(&pool[i + 1..], k - 1) {
                    rest.insert(0, v);
                    out.push(rest);
                }
            }
            out
        }
        for k in 0..=candidates.len() {
            if combos(candidates, k)
                .iter()
                .any(|s| family.iter().all(|set| set.iter().any(|v| s.contains(v))))
            {
                return k;
            }
        }
        unreachable!()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn solver_matches_exhaustive(
            family in proptest::collection::vec(
                proptest::collection::btree_set(0usize..8, 1..4),
                1..7,
            )
        ) {
            let family: Vec<Vec<usize>> =
                family.into_iter().map(|s| s.into_iter().collect()).collect();
            let inst = HittingSetInstance {
                family: family.clone(),
                candidates: (0..8).collect(),
                cap: None,
            };
            let hs = min_hitting_set(&inst).unwrap();
            prop_assert!(family.iter().all(|s| s.iter().any(|v| hs.contains(v))));
            prop_assert_eq!(hs.len(), exhaustive_min(&family, &inst.candidates));
        }

        #[test]
        fn vertex_cover_agrees_with_hitting_set_dual(
            pairs in proptest::collection::btree_set((0u64..7, 0u64..7), 1..12)
        ) {
            let dedup: std::collections::BTreeSet<(u64, u64)> = pairs
                .into_iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            let edges: Vec<(u64, u64, Rat)> =
                dedup.into_iter().map(|(u, v)| (u, v, rat_int(1))).collect();
            prop_assume!(!edges.is_empty());
            let g = atlas_core::WeightedGraph::from_edge_list(&edges).unwrap();
            let cover = min_vertex_cover(&g, 24).unwrap();
            // Two independent exact routes must agree in size.
            let family: Vec<Vec<usize>> =
                g.edges().iter().map(|e| vec![e.u, e.v]).collect();
            let hs = min_hitting_set(&HittingSetInstance {
                family,
                candidates: (0..g.n()).collect(),
                cap: None,
            })
            .unwrap();
            prop_assert_eq!(cover.len(), hs.len());
        }
    }
}

#[test]
fn subcubic_reductions_on_random_graphs() {
    for seed in 0..3u64 {
        let g = random_subcubic_graph(600 + seed, 6);
        let n = g.n();
        let c = min_vertex_cover(&g, 24).unwrap().len();
        let gadget = gadgets::vc_reduction(&g).unwrap();
        let cat = enumerate_shortest_paths(&gadget.graph, CATALOG_CAP).unwrap();
        let (size, _) =
            anchored_min_hitting_set(&gadget.graph, &cat, 2 * n, &rat(5, 2), HdTag::Hd3).unwrap();
        assert_eq!(size, c + n + 1, "seed {seed}");
    }
}
