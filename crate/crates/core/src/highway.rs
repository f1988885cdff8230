//! Exact highway dimensions hd1, hd2 and hd3 on small graphs.
//!
//! All three definitions quantify over every anchor vertex and every real
//! radius. The path family a hitting set must cover is piecewise constant
//! in the radius; its breakpoints are radii where one of the defining
//! inequalities flips. Evaluating the minimum hitting set at every
//! breakpoint, at the midpoint of every gap between consecutive
//! breakpoints, and at half the smallest breakpoint therefore covers every
//! family the real quantifier can produce.
//!
//! * hd1 hits all shortest paths longer than r lying inside the closed ball
//!   of radius 4r around the anchor, with hitters restricted to that ball.
//! * hd2 hits all shortest paths of length in (r, 2r] meeting the ball of
//!   radius 2r, hitters anywhere.
//! * hd3 hits all shortest paths (including single vertices) that are
//!   (r, 2r)-close to the anchor: some witness extension of the path, by at
//!   most one vertex per end and itself a shortest path longer than r,
//!   meets the ball of radius 2r.

use std::collections::BTreeSet;
use num::Signed;

use crate::error::{Error, Result};
use crate::graph::{PathRecord, VertexId, WeightedGraph};
use crate::hitting::{min_hitting_set, HittingSetInstance};
use crate::rational::{rat, Rat};

pub const CATALOG_CAP: usize = 40;
pub const HD12_CAP: usize = 24;
pub const HD3_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdTag {
    Hd1,
    Hd2,
    Hd3,
}

impl HdTag {
    pub fn as_str(self) -> &'static str {
        match self {
            HdTag::Hd1 => "hd1",
            HdTag::Hd2 => "hd2",
            HdTag::Hd3 => "hd3",
        }
    }
}

/// All-pairs canonical shortest paths plus the exact distance matrix.
#[derive(Debug, Clone)]
pub struct ShortestPathCatalog {
    n: usize,
    paths: Vec<Vec<Option<PathRecord>>>,
    dist: Vec<Vec<Option<Rat>>>,
    had_ties: bool,
}

/// Reads one canonical path per ordered pair off the per-source trees.
pub fn enumerate_shortest_paths(g: &WeightedGraph, cap: usize) -> Result<ShortestPathCatalog> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "shortest-path catalog", n: g.n(), cap });
    }
    let trees = g.all_trees();
    let n = g.n();
    let mut paths = vec![vec![None; n]; n];
    let mut dist = vec![vec![None; n]; n];
    let had_ties = trees.iter().any(|t| t.had_ties());
    for u in 0..n {
        for v in 0..n {
            if u == v {
                dist[u][v] = Some(Rat::from_integer(0.into()));
                continue;
            }
            if let Some(p) = trees[u].path_to(v) {
                dist[u][v] = Some(p.length.clone());
                paths[u][v] = Some(p);
            }
        }
    }
    Ok(ShortestPathCatalog { n, paths, dist, had_ties })
}

impl ShortestPathCatalog {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn had_ties(&self) -> bool {
        self.had_ties
    }

    pub fn path(&self, u: VertexId, v: VertexId) -> Option<&PathRecord> {
        self.paths[u][v].as_ref()
    }

    pub fn dist(&self, u: VertexId, v: VertexId) -> Option<&Rat> {
        self.dist[u][v].as_ref()
    }

    /// Is this vertex sequence the canonical shortest path between its own
    /// endpoints?
    pub fn is_shortest(&self, seq: &[VertexId]) -> bool {
        if seq.is_empty() {
            return false;
        }
        if seq.len() == 1 {
            return true;
        }
        let (a, b) = (seq[0], *seq.last().unwrap());
        self.paths[a][b]
            .as_ref()
            .is_some_and(|p| p.vertices == seq)
    }

    /// Canonical paths over unordered pairs (u < v), in id order.
    pub fn unordered_paths(&self) -> Vec<&PathRecord> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if let Some(p) = self.paths[u][v].as_ref() {
                    out.push(p);
                }
            }
        }
        out
    }

    /// min over path vertices of dist(u, .); None when unreachable.
    pub fn min_dist_to(&self, u: VertexId, path: &[VertexId]) -> Option<Rat> {
        path.iter()
            .filter_map(|&w| self.dist[u][w].clone())
            .min()
            .filter(|_| path.iter().all(|&w| self.dist[u][w].is_some()))
    }

    /// max over path vertices of dist(u, .); None when any vertex is
    /// unreachable from u.
    pub fn max_dist_to(&self, u: VertexId, path: &[VertexId]) -> Option<Rat> {
        let mut best: Option<Rat> = None;
        for &w in path {
            match &self.dist[u][w] {
                None => return None,
                Some(d) => {
                    if best.as_ref().is_none_or(|b| d > b) {
                        best = Some(d.clone());
                    }
                }
            }
        }
        best
    }
}

/// The hd3 path universe: every canonical unordered path plus every single
/// vertex.
pub fn hd3_path_universe(cat: &ShortestPathCatalog) -> Vec<PathRecord> {
    let mut out: Vec<PathRecord> = (0..cat.n())
        .map(|v| PathRecord { vertices: vec![v], length: Rat::from_integer(0.into()) })
        .collect();
    out.extend(cat.unordered_paths().into_iter().cloned());
    out
}

/// All r-witness candidates of a path: the path itself and every extension
/// by at most one vertex per end that is itself a canonical shortest path.
pub fn witness_paths(
    g: &WeightedGraph,
    cat: &ShortestPathCatalog,
    path: &PathRecord,
) -> Vec<PathRecord> {
    let mut out = Vec::new();
    let first = path.vertices[0];
    let last = *path.vertices.last().unwrap();
    let mut push_if_shortest = |seq: Vec<VertexId>| {
        if seq.len() == 1 {
            out.push(PathRecord { vertices: seq, length: Rat::from_integer(0.into()) });
            return;
        }
        if cat.is_shortest(&seq) {
            let (a, b) = (seq[0], *seq.last().unwrap());
            out.push(PathRecord { vertices: seq, length: cat.dist(a, b).unwrap().clone() });
        }
    };
    push_if_shortest(path.vertices.clone());
    let mut front: Vec<VertexId> = g.neighbors(first).collect();
    front.sort_unstable();
    let mut back: Vec<VertexId> = g.neighbors(last).collect();
    back.sort_unstable();
    for &x in &front {
        let mut seq = Vec::with_capacity(path.vertices.len() + 1);
        seq.push(x);
        seq.extend_from_slice(&path.vertices);
        push_if_shortest(seq);
    }
    for &y in &back {
        let mut seq = path.vertices.clone();
        seq.push(y);
        push_if_shortest(seq);
    }
    for &x in &front {
        for &y in &back {
            let mut seq = Vec::with_capacity(path.vertices.len() + 2);
            seq.push(x);
            seq.extend_from_slice(&path.vertices);
            seq.push(y);
            push_if_shortest(seq);
        }
    }
    out
}

/// First r-witness of the path in canonical enumeration order, if any.
pub fn r_significant(
    g: &WeightedGraph,
    cat: &ShortestPathCatalog,
    path: &PathRecord,
    r: &Rat,
) -> Option<PathRecord> {
    witness_paths(g, cat, path).into_iter().find(|w| w.length > *r)
}

/// The family of vertex sets a hitting set must cover at anchor `u` and
/// radius `r` under the given definition.
pub fn paths_to_hit(
    g: &WeightedGraph,
    cat: &ShortestPathCatalog,
    u: VertexId,
    r: &Rat,
    tag: HdTag,
) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    match tag {
        HdTag::Hd1 => {
            let four_r = rat(4, 1) * r;
            for p in cat.unordered_paths() {
                if p.length > *r && cat.max_dist_to(u, &p.vertices).is_some_and(|d| d <= four_r) {
                    out.push(sorted(&p.vertices));
                }
            }
        }
        HdTag::Hd2 => {
            let two_r = rat(2, 1) * r;
            for p in cat.unordered_paths() {
                if p.length > *r
                    && p.length <= two_r
                    && cat.min_dist_to(u, &p.vertices).is_some_and(|d| d <= two_r)
                {
                    out.push(sorted(&p.vertices));
                }
            }
        }
        HdTag::Hd3 => {
            let two_r = rat(2, 1) * r;
            for p in hd3_path_universe(cat) {
                let close = witness_paths(g, cat, &p).into_iter().any(|w| {
                    w.length > *r
                        && cat.min_dist_to(u, &w.vertices).is_some_and(|d| d <= two_r)
                });
                if close {
                    out.push(sorted(&p.vertices));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn sorted(vs: &[VertexId]) -> Vec<VertexId> {
    let mut v = vs.to_vec();
    v.sort_unstable();
    v
}

/// Radii at which the family can change for this anchor, sorted and
/// deduplicated. All values are strictly positive.
pub fn critical_radii(
    g: &WeightedGraph,
    cat: &ShortestPathCatalog,
    u: VertexId,
    tag: HdTag,
) -> Vec<Rat> {
    let mut set: BTreeSet<Rat> = BTreeSet::new();
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    match tag {
        HdTag::Hd1 => {
            for p in cat.unordered_paths() {
                set.insert(p.length.clone());
                if let Some(d) = cat.max_dist_to(u, &p.vertices) {
                    set.insert(d * &quarter);
                }
            }
        }
        HdTag::Hd2 => {
            for p in cat.unordered_paths() {
                set.insert(p.length.clone());
                set.insert(&p.length * &half);
                if let Some(d) = cat.min_dist_to(u, &p.vertices) {
                    set.insert(d * &half);
                }
            }
        }
        HdTag::Hd3 => {
            for p in hd3_path_universe(cat) {
                for w in witness_paths(g, cat, &p) {
                    set.insert(w.length.clone());
                    if let Some(d) = cat.min_dist_to(u, &w.vertices) {
                        set.insert(d * &half);
                    }
                }
            }
        }
    }
    set.into_iter().filter(|r| r.is_positive()).collect()
}

/// Critical radii plus gap midpoints plus half the smallest critical value
/// (covering the open interval below the first breakpoint).
pub fn evaluation_radii(criticals: &[Rat]) -> Vec<Rat> {
    let half = rat(1, 2);
    let mut out = Vec::with_capacity(2 * criticals.len() + 1);
    if let Some(first) = criticals.first() {
        out.push(first * &half);
    }
    for (i, c) in criticals.iter().enumerate() {
        out.push(c.clone());
        if let Some(next) = criticals.get(i + 1) {
            out.push((c + next) * &half);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The minimum hitting set for one anchored instance. For hd1 the hitters
/// are restricted to the closed 4r-ball around the anchor.
pub fn anchored_min_hitting_set(
    g: &WeightedGraph,
    cat: &ShortestPathCatalog,
    u: VertexId,
    r: &Rat,
    tag: HdTag,
) -> Result<(usize, Vec<VertexId>)> {
    let family = paths_to_hit(g, cat, u, r, tag);
    let candidates: Vec<VertexId> = match tag {
        HdTag::Hd1 => {
            let four_r = rat(4, 1) * r;
            (0..g.n())
                .filter(|&v| cat.dist(u, v).is_some_and(|d| *d <= four_r))
                .collect()
        }
        _ => (0..g.n()).collect(),
    };
    let inst = HittingSetInstance { family, candidates, cap: None };
    let hs = min_hitting_set(&inst)?;
    Ok((hs.len(), hs))
}

#[derive(Debug, Clone)]
pub struct HighwayWitness {
    pub tag: HdTag,
    pub value: usize,
    pub anchor: Option<VertexId>,
    pub radius: Option<Rat>,
    pub hitting_set: Vec<VertexId>,
    pub had_ties: bool,
}

/// Exact highway dimension: the maximum anchored minimum-hitting-set size
/// over all anchors and evaluation radii.
pub fn highway_dimension(g: &WeightedGraph, tag: HdTag) -> Result<HighwayWitness> {
    let cap = match tag {
        HdTag::Hd3 => HD3_CAP,
        _ => HD12_CAP,
    };
    highway_dimension_capped(g, tag, cap)
}

pub fn highway_dimension_capped(
    g: &WeightedGraph,
    tag: HdTag,
    cap: usize,
) -> Result<HighwayWitness> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: tag.as_str(), n: g.n(), cap });
    }
    let cat = enumerate_shortest_paths(g, cap.max(CATALOG_CAP))?;
    let mut best = HighwayWitness {
        tag,
        value: 0,
        anchor: None,
        radius: None,
        hitting_set: Vec::new(),
        had_ties: cat.had_ties(),
    };

    // Radius-independent data, computed once: the path universe and, for
    // hd3, every witness of every path.
    let universe: Vec<PathRecord> = match tag {
        HdTag::Hd3 => hd3_path_universe(&cat),
        _ => cat.unordered_paths().into_iter().cloned().collect(),
    };
    let witnesses: Vec<Vec<PathRecord>> = match tag {
        HdTag::Hd3 => universe.iter().map(|p| witness_paths(g, &cat, p)).collect(),
        _ => Vec::new(),
    };

    // Membership thresholds per path: a path is in the family at radius r
    // iff some (len, activation) pair satisfies len > r && r >= activation.
    // hd1: (length, max-dist/4); hd2: (length, max(length, min-dist)/2);
    // hd3: one pair (witness length, min-dist/2) per witness.
    enum Member {
        Window(Rat, Rat),
        Pairs(Vec<(Rat, Rat)>),
        Never,
    }

    for u in 0..g.n() {
        let quarter = rat(1, 4);
        let half = rat(1, 2);
        let members: Vec<Member> = universe
            .iter()
            .enumerate()
            .map(|(i, p)| match tag {
                HdTag::Hd1 => match cat.max_dist_to(u, &p.vertices) {
                    Some(d) => Member::Window(p.length.clone(), d * &quarter),
                    None => Member::Never,
                },
                HdTag::Hd2 => match cat.min_dist_to(u, &p.vertices) {
                    Some(d) => {
                        // Activation: r >= len/2 (length fits below 2r) and
                        // r >= min-dist/2 (ball reaches the path).
                        let a = (&p.length * &half).max(d * &half);
                        Member::Window(p.length.clone(), a)
                    }
                    None => Member::Never,
                },
                HdTag::Hd3 => {
                    let pairs: Vec<(Rat, Rat)> = witnesses[i]
                        .iter()
                        .filter_map(|w| {
                            cat.min_dist_to(u, &w.vertices)
                                .map(|d| (w.length.clone(), d * &half))
                        })
                        .collect();
                    if pairs.is_empty() {
                        Member::Never
                    } else {
                        Member::Pairs(pairs)
                    }
                }
            })
            .collect();

        let in_family = |i: usize, r: &Rat| -> bool {
            match &members[i] {
                Member::Never => false,
                Member::Window(len, activation) => len > r && r >= activation,
                Member::Pairs(pairs) => pairs.iter().any(|(len, act)| len > r && r >= act),
            }
        };

        let criticals = critical_radii(g, &cat, u, tag);
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for r in evaluation_radii(&criticals) {
            let idx: Vec<usize> = (0..universe.len()).filter(|&i| in_family(i, &r)).collect();
            if idx.is_empty() || !seen.insert(idx.clone()) {
                continue;
            }
            let mut family: Vec<Vec<VertexId>> =
                idx.iter().map(|&i| sorted(&universe[i].vertices)).collect();
            family.sort();
            family.dedup();
            // A cheap upper bound: solving exactly can only matter when the
            // greedy bound beats the best value found so far.
            if greedy_upper_bound(&family) <= best.value {
                continue;
            }
            let candidates: Vec<VertexId> = match tag {
                HdTag::Hd1 => {
                    let four_r = rat(4, 1) * &r;
                    (0..g.n())
                        .filter(|&v| cat.dist(u, v).is_some_and(|d| *d <= four_r))
                        .collect()
                }
                _ => (0..g.n()).collect(),
            };
            let inst = HittingSetInstance { family, candidates, cap: None };
            let hs = min_hitting_set(&inst)?;
            if hs.len() > best.value {
                best.value = hs.len();
                best.anchor = Some(u);
                best.radius = Some(r.clone());
                best.hitting_set = hs;
            }
        }
    }
    Ok(best)
}

fn greedy_upper_bound(family: &[Vec<VertexId>]) -> usize {
    let mut remaining: Vec<&Vec<VertexId>> = family.iter().collect();
    let mut count = 0usize;
    while let Some(first) = remaining.first() {
        // Hit the most sets with a single vertex, ties to the smallest id.
        let mut tally: std::collections::BTreeMap<VertexId, usize> = Default::default();
        for s in &remaining {
            for &v in *s {
                *tally.entry(v).or_default() += 1;
            }
        }
        let (&v, _) = tally
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .unwrap_or((&first[0], &1));
        remaining.retain(|s| !s.contains(&v));
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn unit_graph(pairs: &[(u64, u64)]) -> WeightedGraph {
        let list: Vec<(u64, u64, Rat)> = pairs.iter().map(|&(u, v)| (u, v, rat_int(1))).collect();
        WeightedGraph::from_edge_list(&list).unwrap()
    }

    #[test]
    fn catalog_path_graph() {
        let g = unit_graph(&[(0, 1), (1, 2)]);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        assert_eq!(cat.unordered_paths().len(), 3);
        assert_eq!(cat.path(0, 2).unwrap().vertices, vec![0, 1, 2]);
        assert!(cat.is_shortest(&[2, 1, 0]));
        assert!(!cat.is_shortest(&[0, 2]));
    }

    #[test]
    fn catalog_weighted_triangle() {
        let g = WeightedGraph::from_edge_list(&[
            (0, 1, rat_int(1)),
            (1, 2, rat_int(1)),
            (0, 2, rat_int(3)),
        ])
        .unwrap();
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        let p = cat.path(0, 2).unwrap();
        assert_eq!(p.vertices, vec![0, 1, 2]);
        assert_eq!(p.length, rat_int(2));
    }

    #[test]
    fn witness_of_long_path_is_itself() {
        let g = unit_graph(&[(0, 1), (1, 2)]);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        let p = cat.path(0, 2).unwrap().clone();
        let w = r_significant(&g, &cat, &p, &rat_int(1)).unwrap();
        assert_eq!(w.vertices, p.vertices);
    }

    #[test]
    fn endpoint_singleton_has_short_witnesses_only() {
        // The end vertex of a path can only be extended on one side.
        let g = unit_graph(&[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        let single = PathRecord { vertices: vec![0], length: rat_int(0) };
        let ws = witness_paths(&g, &cat, &single);
        let max_len = ws.iter().map(|w| w.length.clone()).max().unwrap();
        assert_eq!(max_len, rat_int(1));
        assert!(r_significant(&g, &cat, &single, &rat_int(1)).is_none());
        let mid = PathRecord { vertices: vec![2], length: rat_int(0) };
        let w = r_significant(&g, &cat, &mid, &rat_int(1)).unwrap();
        assert_eq!(w.length, rat_int(2));
    }

    #[test]
    fn family_empty_beyond_diameter() {
        let g = unit_graph(&[(0, 1), (1, 2)]);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        let fam = paths_to_hit(&g, &cat, 0, &rat_int(10), HdTag::Hd1);
        assert!(fam.is_empty());
    }

    #[test]
    fn subdivided_star_leaf_edges_enter_hd2_family_at_half() {
        // Center 0, mids odd, leaves even; the l leaf edges have length 1,
        // so they satisfy r < 1 <= 2r exactly when r is in [1/2, 1), and
        // the mids sit inside B_2r(center).
        let l = 4u64;
        let mut pairs = Vec::new();
        for i in 0..l {
            pairs.push((0, 1 + 2 * i));
            pairs.push((1 + 2 * i, 2 + 2 * i));
        }
        let g = unit_graph(&pairs);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        let fam = paths_to_hit(&g, &cat, 0, &rat(1, 2), HdTag::Hd2);
        for i in 0..l as usize {
            let edge = vec![1 + 2 * i, 2 + 2 * i];
            assert!(fam.contains(&edge), "leaf edge {edge:?} missing");
        }
        // At r = 1 the length-1 edges fail the strict lower bound.
        let fam_at_one = paths_to_hit(&g, &cat, 0, &rat_int(1), HdTag::Hd2);
        assert!(fam_at_one.iter().all(|s| s.len() > 2));
    }

    #[test]
    fn critical_radii_single_edge_hd2() {
        let g = unit_graph(&[(0, 1)]);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        let crits = critical_radii(&g, &cat, 0, HdTag::Hd2);
        assert!(crits.contains(&rat_int(1)));
        assert!(crits.contains(&rat(1, 2)));
    }

    #[test]
    fn hd2_of_single_edge_is_one() {
        let g = unit_graph(&[(0, 1)]);
        let w = highway_dimension(&g, HdTag::Hd2).unwrap();
        assert_eq!(w.value, 1);
    }

    #[test]
    fn hd3_of_path3() {
        // At anchor 1 and small r every singleton {0},{1},{2} is
        // (r,2r)-close via the full path as witness, so hd3 = 3.
        let g = unit_graph(&[(0, 1), (1, 2)]);
        let w = highway_dimension(&g, HdTag::Hd3).unwrap();
        assert_eq!(w.value, 3);
    }

    #[test]
    fn ordering_chain_on_small_graphs() {
        let graphs = vec![
            unit_graph(&[(0, 1), (1, 2), (2, 3)]),
            unit_graph(&[(0, 1), (0, 2), (0, 3), (0, 4)]),
            unit_graph(&[(0, 1), (1, 2), (2, 0), (2, 3)]),
        ];
        for g in graphs {
            let hd1 = highway_dimension(&g, HdTag::Hd1).unwrap().value;
            let hd2 = highway_dimension(&g, HdTag::Hd2).unwrap().value;
            let hd3 = highway_dimension(&g, HdTag::Hd3).unwrap().value;
            assert!(hd2 <= hd1, "hd2 {hd2} > hd1 {hd1}");
            assert!(hd2 <= hd3, "hd2 {hd2} > hd3 {hd3}");
            assert!(hd1 <= hd3 * (hd3 + 1), "hd1 {hd1} > hd3(hd3+1) {}", hd3 * (hd3 + 1));
        }
    }

    #[test]
    fn anchored_instance_respects_hd1_candidates() {
        let g = unit_graph(&[(0, 1), (1, 2), (2, 3)]);
        let cat = enumerate_shortest_paths(&g, CATALOG_CAP).unwrap();
        let (size, hs) = anchored_min_hitting_set(&g, &cat, 0, &rat(1, 2), HdTag::Hd1).unwrap();
        let two = rat_int(2); // 4r
        for &v in &hs {
            assert!(*cat.dist(0, v).unwrap() <= two);
        }
        assert!(size >= 1);
    }

    #[test]
    fn cap_errors() {
        let g = unit_graph(&[(0, 1)]);
        assert!(matches!(
            highway_dimension_capped(&g, HdTag::Hd3, 1),
            Err(Error::CapExceeded { .. })
        ));
    }
}
