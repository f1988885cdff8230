//! Exact minimum hitting set and minimum vertex cover by branch and bound.

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};

/// Default cap on the number of sets in one instance.
pub const FAMILY_CAP: usize = 5000;

/// A family of vertex sets to hit, a pool of allowed hitters, and an
/// optional cap on the family size.
#[derive(Debug, Clone)]
pub struct HittingSetInstance {
    pub family: Vec<Vec<VertexId>>,
    pub candidates: Vec<VertexId>,
    pub cap: Option<usize>,
}

/// Exact minimum hitting set within the candidate pool.
///
/// Branch and bound: branch on the vertices of an uncovered set with the
/// fewest remaining options, greedy upper bound, disjoint-subfamily lower
/// bound. All tie-breaks are by ascending vertex id, so the result is
/// deterministic. Errors when some set contains no candidate at all.
pub fn min_hitting_set(inst: &HittingSetInstance) -> Result<Vec<VertexId>> {
    let cap = inst.cap.unwrap_or(FAMILY_CAP);
    if inst.family.len() > cap {
        return Err(Error::CapExceeded { what: "hitting-set family", n: inst.family.len(), cap });
    }
    let max_v = inst
        .family
        .iter()
        .flatten()
        .chain(inst.candidates.iter())
        .max()
        .map_or(0, |&v| v + 1);
    if max_v > 128 {
        return Err(Error::CapExceeded { what: "hitting-set universe", n: max_v, cap: 128 });
    }
    let mask_of = |set: &[VertexId]| -> u128 { set.iter().fold(0u128, |m, &v| m | (1u128 << v)) };
    let cand_mask = mask_of(&inst.candidates);

    let mut sets: Vec<u128> = Vec::with_capacity(inst.family.len());
    for s in &inst.family {
        let m = mask_of(s);
        if m & cand_mask == 0 {
            let pretty: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            return Err(Error::InfeasibleHittingSet { set: pretty.join(",") });
        }
        sets.push(m & cand_mask);
    }
    sets.sort_unstable();
    sets.dedup();
    // A superset of another set is hit whenever the subset is.
    let reduced: Vec<u128> = sets
        .iter()
        .filter(|&&a| !sets.iter().any(|&b| b != a && b & a == b))
        .copied()
        .collect();

    let solution = solve_masks(&reduced);
    Ok(mask_vertices(solution))
}

fn mask_vertices(m: u128) -> Vec<VertexId> {
    (0..128).filter(|&v| m & (1u128 << v) != 0).collect()
}

fn greedy_cover(sets: &[u128]) -> u128 {
    let mut chosen = 0u128;
    let mut remaining: Vec<u128> = sets.to_vec();
    while !remaining.is_empty() {
        let universe = remaining.iter().fold(0u128, |a, b| a | b);
        let mut best_v = 0usize;
        let mut best_hits = 0usize;
        for v in 0..128 {
            let bit = 1u128 << v;
            if universe & bit == 0 {
                continue;
            }
            let hits = remaining.iter().filter(|&&s| s & bit != 0).count();
            if hits > best_hits {
                best_hits = hits;
                best_v = v;
            }
        }
        let bit = 1u128 << best_v;
        chosen |= bit;
        remaining.retain(|&s| s & bit == 0);
    }
    chosen
}

fn packing_lower_bound(sets: &[u128], chosen: u128) -> usize {
    let mut used = 0u128;
    let mut count = 0usize;
    for &s in sets {
        if s & chosen != 0 {
            continue;
        }
        if s & used == 0 {
            used |= s;
            count += 1;
        }
    }
    count
}

fn solve_masks(sets: &[u128]) -> u128 {
    let mut best = greedy_cover(sets);
    let mut stack_best_len = best.count_ones() as usize;
    fn recurse(sets: &[u128], chosen: u128, best: &mut u128, best_len: &mut usize) {
        let uncovered: Vec<u128> = sets.iter().filter(|&&s| s & chosen == 0).copied().collect();
        if uncovered.is_empty() {
            let len = chosen.count_ones() as usize;
            if len < *best_len {
                *best_len = len;
                *best = chosen;
            }
            return;
        }
        let chosen_len = chosen.count_ones() as usize;
        if chosen_len + packing_lower_bound(&uncovered, 0) >= *best_len {
            return;
        }
        let branch_set = uncovered
            .iter()
            .min_by_key(|s| s.count_ones())
            .copied()
            .unwrap();
        for v in mask_vertices(branch_set) {
            recurse(sets, chosen | (1u128 << v), best, best_len);
        }
    }
    recurse(sets, 0, &mut best, &mut stack_best_len);
    best
}

/// Exact minimum vertex cover of the unweighted view of `g`.
///
/// Independent of the hitting-set solver: branches on a maximum-degree
/// vertex (take it, or take its whole neighborhood) with a greedy matching
/// lower bound.
pub fn min_vertex_cover(g: &WeightedGraph, cap: usize) -> Result<Vec<VertexId>> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "minimum vertex cover", n: g.n(), cap });
    }
    if g.n() > 128 {
        return Err(Error::CapExceeded { what: "minimum vertex cover", n: g.n(), cap: 128 });
    }
    let n = g.n();
    let mut adj = vec![0u128; n];
    for e in g.edges() {
        adj[e.u] |= 1u128 << e.v;
        adj[e.v] |= 1u128 << e.u;
    }

    fn matching_bound(adj: &[u128], alive: u128) -> usize {
        let mut used = 0u128;
        let mut count = 0;
        for u in 0..adj.len() {
            let ub = 1u128 << u;
            if alive & ub == 0 || used & ub != 0 {
                continue;
            }
            let free = adj[u] & alive & !used;
            if free != 0 {
                let v = free.trailing_zeros() as usize;
                used |= ub | (1u128 << v);
                count += 1;
            }
        }
        count
    }

    fn recurse(
        adj: &[u128],
        alive: u128,
        cover: u128,
        best: &mut u128,
        best_len: &mut usize,
    ) {
        let cover_len = cover.count_ones() as usize;
        if cover_len + matching_bound(adj, alive) >= *best_len {
            return;
        }
        // Highest remaining degree; ties to the smallest id.
        let mut pick: Option<(usize, usize)> = None;
        for v in 0..adj.len() {
            if alive & (1u128 << v) == 0 {
                continue;
            }
            let d = (adj[v] & alive).count_ones() as usize;
            if d > 0 && pick.map_or(true, |(pd, _)| d > pd) {
                pick = Some((d, v));
            }
        }
        let Some((_, v)) = pick else {
            // No edges left: cover complete.
            if cover_len < *best_len {
                *best_len = cover_len;
                *best = cover;
            }
            return;
        };
        let vbit = 1u128 << v;
        // Branch 1: v in the cover.
        recurse(adj, alive & !vbit, cover | vbit, best, best_len);
        // Branch 2: v not in the cover, so all its alive neighbors are.
        let nbrs = adj[v] & alive;
        recurse(adj, alive & !nbrs & !vbit, cover | nbrs, best, best_len);
    }

    // Greedy initial cover: repeatedly take a max-degree vertex.
    let mut alive = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut greedy = 0u128;
    loop {
        let mut pick: Option<(usize, usize)> = None;
        for v in 0..n {
            if alive & (1u128 << v) == 0 {
                continue;
            }
            let d = (adj[v] & alive).count_ones() as usize;
            if d > 0 && pick.map_or(true, |(pd, _)| d > pd) {
                pick = Some((d, v));
            }
        }
        match pick {
            Some((_, v)) => {
                greedy |= 1u128 << v;
                alive &= !(1u128 << v);
            }
            None => break,
        }
    }

    let mut best = greedy;
    let mut best_len = greedy.count_ones() as usize;
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    recurse(&adj, full, 0, &mut best, &mut best_len);
    Ok(mask_vertices(best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn inst(family: &[&[usize]]) -> HittingSetInstance {
        let max = family.iter().flat_map(|s| s.iter()).max().copied().unwrap_or(0);
        HittingSetInstance {
            family: family.iter().map(|s| s.to_vec()).collect(),
            candidates: (0..=max).collect(),
            cap: None,
        }
    }

    /// Exhaustive oracle: smallest subset of candidates hitting everything.
    fn exhaustive(family: &[Vec<usize>], candidates: &[usize]) -> usize {
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

    fn combos(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..pool.len() {
                cur.push(pool[i]);
                go(pool, k, i + 1, cur, out);
                cur.pop();
            }
        }
        go(pool, k, 0, &mut cur, &mut out);
        out
    }

    #[test]
    fn two_singletons() {
        let i = inst(&[&[0], &[1]]);
        assert_eq!(min_hitting_set(&i).unwrap(), vec![0, 1]);
    }

    #[test]
    fn four_cycle_edges_need_two() {
        let i = inst(&[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]);
        let hs = min_hitting_set(&i).unwrap();
        assert_eq!(hs.len(), 2);
        assert_eq!(hs.len(), exhaustive(&i.family, &i.candidates));
    }

    #[test]
    fn respects_candidates() {
        let mut i = inst(&[&[0, 1], &[1, 2]]);
        i.candidates = vec![0, 2];
        assert_eq!(min_hitting_set(&i).unwrap(), vec![0, 2]);
    }

    #[test]
    fn infeasible_named() {
        let mut i = inst(&[&[0, 1], &[2]]);
        i.candidates = vec![0, 1];
        match min_hitting_set(&i) {
            Err(Error::InfeasibleHittingSet { set }) => assert_eq!(set, "2"),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn empty_family_is_empty_set() {
        let i = HittingSetInstance { family: vec![], candidates: vec![0, 1], cap: None };
        assert_eq!(min_hitting_set(&i).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn matches_exhaustive_on_small_families() {
        // A handful of fixed families exercising overlap structure.
        let cases: Vec<Vec<Vec<usize>>> = vec![
            vec![vec![0, 1, 2], vec![2, 3], vec![0, 3], vec![1, 3]],
            vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![0, 2, 4]],
            vec![vec![1], vec![1, 2], vec![3, 4], vec![2, 4]],
            vec![vec![0, 5], vec![1, 5], vec![2, 5], vec![3, 5], vec![4, 5]],
        ];
        for family in cases {
            let max = family.iter().flatten().max().copied().unwrap();
            let cands: Vec<usize> = (0..=max).collect();
            let i = HittingSetInstance {
                family: family.clone(),
                candidates: cands.clone(),
                cap: None,
            };
            let hs = min_hitting_set(&i).unwrap();
            assert!(family.iter().all(|s| s.iter().any(|v| hs.contains(v))));
            assert_eq!(hs.len(), exhaustive(&family, &cands));
        }
    }

    fn graph(pairs: &[(u64, u64)]) -> WeightedGraph {
        let list: Vec<(u64, u64, crate::rational::Rat)> =
            pairs.iter().map(|&(u, v)| (u, v, rat_int(1))).collect();
        WeightedGraph::from_edge_list(&list).unwrap()
    }

    #[test]
    fn vertex_cover_small_cases() {
        assert_eq!(min_vertex_cover(&graph(&[(0, 1)]), 24).unwrap().len(), 1);
        // 5-cycle: derived by exhaustive reasoning, cover size 3.
        let c5 = graph(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(min_vertex_cover(&c5, 24).unwrap().len(), 3);
        // Path on 4 vertices: size 2.
        let p4 = graph(&[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(min_vertex_cover(&p4, 24).unwrap().len(), 2);
        // Petersen graph: size 6.
        let petersen = graph(&[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ]);
        let cover = min_vertex_cover(&petersen, 24).unwrap();
        assert_eq!(cover.len(), 6);
        for e in petersen.edges() {
            assert!(cover.contains(&e.u) || cover.contains(&e.v));
        }
    }

    #[test]
    fn vertex_cover_is_actually_a_cover() {
        let g = graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let cover = min_vertex_cover(&g, 24).unwrap();
        for e in g.edges() {
            assert!(cover.contains(&e.u) || cover.contains(&e.v));
        }
        assert_eq!(cover.len(), 3);
    }
}
