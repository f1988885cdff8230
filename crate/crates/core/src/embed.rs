//! The hub-hierarchy embedding: nets at geometric scales over a finite
//! metric, a level-weighted edge graph, pruning of over-long level edges,
//! and the verification suite for distortion, pruning safety, long-edge hub
//! membership and the skeleton-dimension bound.

use num::{One, Zero};
use num::Signed;

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::rational::{ceil_log2, ceil_log2_int, pow2, rat, rat_int, Rat};

/// A finite metric: symmetric positive rational distances, zero diagonal,
/// triangle inequality.
#[derive(Debug, Clone)]
pub struct FiniteMetric {
    dist: Vec<Vec<Rat>>,
}

impl FiniteMetric {
    pub fn new(dist: Vec<Vec<Rat>>) -> Result<Self> {
        let n = dist.len();
        for (i, row) in dist.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMetric("matrix is not square".into()));
            }
            if !row[i].is_zero() {
                return Err(Error::InvalidMetric(format!("nonzero diagonal at {i}")));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if dist[i][j] != dist[j][i] {
                    return Err(Error::InvalidMetric(format!("asymmetry at ({i}, {j})")));
                }
                if !dist[i][j].is_positive() {
                    return Err(Error::InvalidMetric(format!(
                        "non-positive distance at ({i}, {j})"
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if dist[i][k] > &dist[i][j] + &dist[j][k] {
                        return Err(Error::InvalidMetric(format!(
                            "triangle violation ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteMetric { dist })
    }

    /// The shortest-path metric of a connected weighted graph.
    pub fn from_graph(g: &WeightedGraph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let trees = g.all_trees();
        let n = g.n();
        let dist: Vec<Vec<Rat>> = (0..n)
            .map(|u| (0..n).map(|v| trees[u].dist(v).unwrap().clone()).collect())
            .collect();
        Ok(FiniteMetric { dist })
    }

    pub fn n(&self) -> usize {
        self.dist.len()
    }

    pub fn dist(&self, i: usize, j: usize) -> &Rat {
        &self.dist[i][j]
    }

    pub fn min_distance(&self) -> Option<Rat> {
        let n = self.n();
        let mut best: Option<Rat> = None;
        for i in 0..n {
            for j in (i + 1)..n {
                if best.as_ref().is_none_or(|b| self.dist[i][j] < *b) {
                    best = Some(self.dist[i][j].clone());
                }
            }
        }
        best
    }

    pub fn max_distance(&self) -> Option<Rat> {
        let n = self.n();
        let mut best: Option<Rat> = None;
        for i in 0..n {
            for j in (i + 1)..n {
                if best.as_ref().is_none_or(|b| self.dist[i][j] > *b) {
                    best = Some(self.dist[i][j].clone());
                }
            }
        }
        best
    }

    /// max distance / min distance; None below two points.
    pub fn aspect_ratio(&self) -> Option<Rat> {
        Some(self.max_distance()? / self.min_distance()?)
    }

    /// The same metric scaled so the minimum distance is one.
    pub fn rescaled_min_one(&self) -> FiniteMetric {
        match self.min_distance() {
            None => self.clone(),
            Some(min) => FiniteMetric {
                dist: self
                    .dist
                    .iter()
                    .map(|row| row.iter().map(|d| d / &min).collect())
                    .collect(),
            },
        }
    }
}

/// Nested hub sets Y_0 (everything) down to Y_L.
#[derive(Debug, Clone)]
pub struct HubHierarchy {
    pub levels: Vec<Vec<VertexId>>,
    pub epsilon: Rat,
}

impl HubHierarchy {
    pub fn top_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn in_level(&self, i: usize, v: VertexId) -> bool {
        self.levels[i].contains(&v)
    }

    /// The highest level containing both endpoints.
    pub fn pair_level(&self, u: VertexId, v: VertexId) -> usize {
        (0..self.levels.len())
            .rev()
            .find(|&i| self.in_level(i, u) && self.in_level(i, v))
            .expect("level 0 holds every point")
    }
}

/// Covering radius of level i: eps * 2^(i-2) / ((1 + eps)^2 * L).
pub fn covering_radius(eps: &Rat, i: usize, l: usize) -> Rat {
    assert!(l >= 1);
    let one_plus = Rat::one() + eps;
    eps * pow2(i as i64 - 2) / (&one_plus * &one_plus * rat_int(l as i64))
}

/// Builds the nested nets top-down: each level extends the one above by a
/// greedy scan in point-id order, admitting a point iff it is farther than
/// the level's covering radius from everything already admitted.
pub fn build_hub_hierarchy(x: &FiniteMetric, eps: &Rat) -> Result<HubHierarchy> {
    if !(eps.is_positive() && *eps < Rat::one()) {
        return Err(Error::InvalidParameter("epsilon must satisfy 0 < eps < 1".into()));
    }
    if x.n() < 2 {
        return Err(Error::InvalidMetric("hierarchy needs at least two points".into()));
    }
    let alpha = x.aspect_ratio().expect("two points");
    let l = ceil_log2(&alpha);
    let mut levels: Vec<Vec<VertexId>> = vec![(0..x.n()).collect()];
    if l == 0 {
        return Ok(HubHierarchy { levels, epsilon: eps.clone() });
    }
    let mut above: Option<Vec<VertexId>> = None;
    let mut stack: Vec<Vec<VertexId>> = Vec::new();
    for i in (1..=l).rev() {
        let radius = covering_radius(eps, i, l);
        let mut level: Vec<VertexId> = above.clone().unwrap_or_default();
        for p in 0..x.n() {
            if level.contains(&p) {
                continue;
            }
            if level.iter().all(|&q| *x.dist(p, q) > radius) {
                level.push(p);
            }
        }
        level.sort_unstable();
        above = Some(level.clone());
        stack.push(level);
    }
    // stack holds Y_L .. Y_1; levels wants Y_0 .. Y_L.
    stack.reverse();
    levels.extend(stack);
    Ok(HubHierarchy { levels, epsilon: eps.clone() })
}

/// Re-verifies the four hierarchy invariants: nesting, Y_0 = X, covering,
/// and pairwise separation above half the covering radius.
pub fn hierarchy_invariants(x: &FiniteMetric, h: &HubHierarchy) -> std::result::Result<(), String> {
    let l = h.top_level();
    if h.levels[0] != (0..x.n()).collect::<Vec<_>>() {
        return Err("level 0 must contain every point".into());
    }
    for i in 1..=l {
        for v in &h.levels[i] {
            if !h.levels[i - 1].contains(v) {
                return Err(format!("nesting fails: {v} in Y_{i} but not Y_{}", i - 1));
            }
        }
    }
    if l == 0 {
        return Ok(());
    }
    let half = rat(1, 2);
    for i in 1..=l {
        let radius = covering_radius(&h.epsilon, i, l);
        for p in 0..x.n() {
            if !h.levels[i].iter().any(|&q| x.dist(p, q) <= &radius) {
                return Err(format!("covering fails at level {i} for point {p}"));
            }
        }
        let sep = &radius * &half;
        for (a, &p) in h.levels[i].iter().enumerate() {
            for &q in h.levels[i].iter().skip(a + 1) {
                if *x.dist(p, q) <= sep {
                    return Err(format!("separation fails at level {i} for ({p}, {q})"));
                }
            }
        }
    }
    Ok(())
}

/// The embedding output: the pruned graph G, the unpruned graph H, the
/// hierarchy, the rescaled source metric, and each kept edge's level.
#[derive(Debug, Clone)]
pub struct EmbeddedGraph {
    pub graph: WeightedGraph,
    pub unpruned: WeightedGraph,
    pub hierarchy: HubHierarchy,
    pub metric: FiniteMetric,
    /// (u, v, level) for every kept edge, in graph edge order.
    pub edge_levels: Vec<(VertexId, VertexId, usize)>,
}

/// Builds the level-weighted graph over the rescaled metric. A pair at
/// level i gets weight (1 + eps(1 - i/L)) * dist(u, v) and is pruned when
/// dist(u, v) > 2^(i+1).
pub fn build_embedded_graph(x: &FiniteMetric, eps: &Rat) -> Result<EmbeddedGraph> {
    let metric = x.rescaled_min_one();
    let hierarchy = build_hub_hierarchy(&metric, eps)?;
    let l = hierarchy.top_level();
    let mut kept: Vec<(usize, usize, Rat)> = Vec::new();
    let mut all: Vec<(usize, usize, Rat)> = Vec::new();
    let mut edge_levels = Vec::new();
    for u in 0..metric.n() {
        for v in (u + 1)..metric.n() {
            let i = hierarchy.pair_level(u, v);
            let factor = if l == 0 {
                Rat::one()
            } else {
                Rat::one() + eps * (Rat::one() - rat(i as i64, l as i64))
            };
            let w = &factor * metric.dist(u, v);
            all.push((u, v, w.clone()));
            if *metric.dist(u, v) <= pow2(i as i64 + 1) {
                kept.push((u, v, w));
                edge_levels.push((u, v, i));
            }
        }
    }
    let graph = WeightedGraph::from_dense(metric.n(), &kept)?;
    let unpruned = WeightedGraph::from_dense(metric.n(), &all)?;
    Ok(EmbeddedGraph { graph, unpruned, hierarchy, metric, edge_levels })
}

#[derive(Debug, Clone)]
pub struct DistortionReport {
    pub ok: bool,
    pub max_stretch: Rat,
    pub pairs_checked: usize,
    pub failure: Option<(VertexId, VertexId)>,
}

/// Verifies dist_X <= dist_G <= (1 + eps) dist_X over every pair of the
/// rescaled metric, exactly, and reports the largest stretch attained.
pub fn verify_distortion(x: &FiniteMetric, g: &WeightedGraph, eps: &Rat) -> DistortionReport {
    let trees = g.all_trees();
    let bound = Rat::one() + eps;
    let mut max_stretch = Rat::one();
    let mut pairs = 0usize;
    for u in 0..x.n() {
        for v in (u + 1)..x.n() {
            pairs += 1;
            let dg = match trees[u].dist(v) {
                Some(d) => d.clone(),
                None => {
                    return DistortionReport {
                        ok: false,
                        max_stretch,
                        pairs_checked: pairs,
                        failure: Some((u, v)),
                    }
                }
            };
            let stretch = &dg / x.dist(u, v);
            if stretch < Rat::one() || stretch > bound {
                return DistortionReport {
                    ok: false,
                    max_stretch: stretch,
                    pairs_checked: pairs,
                    failure: Some((u, v)),
                };
            }
            if stretch > max_stretch {
                max_stretch = stretch;
            }
        }
    }
    DistortionReport { ok: true, max_stretch, pairs_checked: pairs, failure: None }
}

/// Pruning safety: the pruned and unpruned graphs agree on every pairwise
/// distance.
pub fn verify_pruning(e: &EmbeddedGraph) -> bool {
    let pruned = e.graph.all_trees();
    let full = e.unpruned.all_trees();
    let n = e.metric.n();
    for u in 0..n {
        for v in 0..n {
            if pruned[u].dist(v) != full[u].dist(v) {
                return false;
            }
        }
    }
    true
}

/// Long-edge hub membership: every kept edge of weight above 2^i has both
/// endpoints in Y_{i-1}, for each 1 <= i <= L.
pub fn verify_long_edge_hubs(e: &EmbeddedGraph) -> bool {
    let l = e.hierarchy.top_level();
    for (idx, edge) in e.graph.edges().iter().enumerate() {
        let (u, v, _) = e.edge_levels[idx];
        debug_assert_eq!((edge.u, edge.v), (u, v));
        for i in 1..=l {
            if edge.weight > pow2(i as i64)
                && !(e.hierarchy.in_level(i - 1, u) && e.hierarchy.in_level(i - 1, v))
            {
                return false;
            }
        }
    }
    true
}

/// The proof's cut bound (2^12 L / eps)^ceil(ddim); `doubling_d` is the
/// doubling constant d of the source metric (its dimension is log2 d).
/// Returns (bound, holds). Degenerate single-scale metrics (L = 0) carry
/// no bound and return None.
pub fn kappa_bound_check(
    e: &EmbeddedGraph,
    kappa: usize,
    doubling_d: usize,
) -> Option<(Rat, bool)> {
    let l = e.hierarchy.top_level();
    if l == 0 {
        return None;
    }
    let base = rat_int(1 << 12) * rat_int(l as i64) / &e.hierarchy.epsilon;
    let exponent = ceil_log2_int(doubling_d.max(1));
    let bound = num::pow::pow(base, exponent.max(1));
    let holds = rat_int(kappa as i64) <= bound;
    Some((bound, holds))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_metric(points: &[i64]) -> FiniteMetric {
        let n = points.len();
        let dist: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| rat_int((points[i] - points[j]).abs())).collect())
            .collect();
        FiniteMetric::new(dist).unwrap()
    }

    #[test]
    fn aspect_ratio_examples() {
        let two = line_metric(&[0, 1]);
        assert_eq!(two.aspect_ratio().unwrap(), rat_int(1));
        let k4 = FiniteMetric::from_graph(&crate::build::complete_graph(4)).unwrap();
        assert_eq!(k4.aspect_ratio().unwrap(), rat_int(1));
        let line = line_metric(&[1, 2, 4]);
        assert_eq!(line.aspect_ratio().unwrap(), rat_int(3));
    }

    #[test]
    fn metric_validation() {
        assert!(FiniteMetric::new(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(2), rat_int(0)],
        ])
        .is_err());
        // Triangle violation: d(0,2) = 5 > 1 + 1.
        assert!(FiniteMetric::new(vec![
            vec![rat_int(0), rat_int(1), rat_int(5)],
            vec![rat_int(1), rat_int(0), rat_int(1)],
            vec![rat_int(5), rat_int(1), rat_int(0)],
        ])
        .is_err());
    }

    #[test]
    fn single_scale_hierarchy() {
        let x = line_metric(&[0, 1]);
        let h = build_hub_hierarchy(&x, &rat(1, 2)).unwrap();
        assert_eq!(h.top_level(), 0);
        assert_eq!(h.levels[0], vec![0, 1]);
        hierarchy_invariants(&x, &h).unwrap();
    }

    #[test]
    fn uniform_metric_invariants() {
        let x = FiniteMetric::from_graph(&crate::build::complete_graph(4)).unwrap();
        let h = build_hub_hierarchy(&x, &rat(1, 2)).unwrap();
        hierarchy_invariants(&x, &h).unwrap();
    }

    #[test]
    fn line_hierarchy_invariants() {
        let x = line_metric(&[0, 1, 3, 7, 12, 20]);
        for eps in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            let h = build_hub_hierarchy(&x, &eps).unwrap();
            hierarchy_invariants(&x, &h).unwrap();
        }
    }

    #[test]
    fn epsilon_range_enforced() {
        let x = line_metric(&[0, 1, 3]);
        assert!(build_hub_hierarchy(&x, &rat_int(1)).is_err());
        assert!(build_hub_hierarchy(&x, &rat_int(0)).is_err());
        assert!(build_hub_hierarchy(&x, &rat(-1, 2)).is_err());
    }

    #[test]
    fn two_point_embedding_is_single_unit_edge() {
        let x = line_metric(&[0, 7]);
        let e = build_embedded_graph(&x, &rat(1, 2)).unwrap();
        // Rescaled to min distance 1; aspect ratio 1 means L = 0 and the
        // weight factor is exactly one.
        assert_eq!(e.graph.m(), 1);
        assert_eq!(e.graph.edge(0).weight, rat_int(1));
    }

    #[test]
    fn embedding_checks_on_a_line() {
        let x = line_metric(&[0, 1, 3, 7, 12]);
        for eps in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            let e = build_embedded_graph(&x, &eps).unwrap();
            let rep = verify_distortion(&e.metric, &e.graph, &eps);
            assert!(rep.ok, "distortion failed at eps {eps}");
            assert!(verify_pruning(&e));
            assert!(verify_long_edge_hubs(&e));
        }
    }

    #[test]
    fn kappa_bound_is_generous() {
        let x = line_metric(&[0, 1, 3, 7]);
        let e = build_embedded_graph(&x, &rat(1, 2)).unwrap();
        let kappa = crate::skeleton::skeleton_dimension(&e.graph).kappa;
        let (bound, holds) = kappa_bound_check(&e, kappa, 4).unwrap();
        assert!(holds, "kappa {kappa} exceeded bound {bound}");
    }
}
