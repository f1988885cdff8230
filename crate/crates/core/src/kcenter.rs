//! k-center baselines: the greedy farthest-point 2-approximation and an
//! exact solver by subset enumeration.

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::rational::Rat;

pub const EXACT_KCENTER_CAP: usize = 18;

#[derive(Debug, Clone)]
pub struct CenterSolution {
    pub centers: Vec<VertexId>,
    pub radius: Rat,
}

/// Greedy farthest-point: the first center is vertex 0, every further
/// center the vertex farthest from the chosen set (ties to the smallest
/// id). Radius at most twice the optimum.
pub fn hochbaum_shmoys(g: &WeightedGraph, k: usize) -> Result<CenterSolution> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!("k = {k} out of range 1..={}", g.n())));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut centers = vec![0usize];
    let tree = g.shortest_path_tree(0);
    let mut closest: Vec<Rat> = (0..g.n()).map(|v| tree.dist(v).unwrap().clone()).collect();
    while centers.len() < k {
        let farthest = (0..g.n())
            .max_by(|&a, &b| closest[a].cmp(&closest[b]).then(b.cmp(&a)))
            .unwrap();
        centers.push(farthest);
        let t = g.shortest_path_tree(farthest);
        for v in 0..g.n() {
            let d = t.dist(v).unwrap();
            if *d < closest[v] {
                closest[v] = d.clone();
            }
        }
    }
    let radius = closest.into_iter().max().unwrap();
    centers.sort_unstable();
    Ok(CenterSolution { centers, radius })
}

/// Optimal k-center by enumeration over k-subsets with radius pruning;
/// among optimal solutions returns the lexicographically first.
pub fn exact_kcenter(g: &WeightedGraph, k: usize) -> Result<CenterSolution> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!("k = {k} out of range 1..={}", g.n())));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > EXACT_KCENTER_CAP {
        return Err(Error::CapExceeded { what: "exact k-center", n: g.n(), cap: EXACT_KCENTER_CAP });
    }
    let trees = g.all_trees();
    let n = g.n();
    let mut best: Option<CenterSolution> = None;

    let mut subset: Vec<usize> = Vec::with_capacity(k);
    fn go(
        n: usize,
        k: usize,
        start: usize,
        subset: &mut Vec<usize>,
        trees: &[crate::graph::ShortestPathTree],
        best: &mut Option<CenterSolution>,
    ) {
        if subset.len() == k {
            let mut radius = Rat::from_integer(0.into());
            for v in 0..n {
                let d = subset
                    .iter()
                    .map(|&c| trees[c].dist(v).unwrap().clone())
                    .min()
                    .unwrap();
                if d > radius {
                    radius = d;
                    if let Some(b) = best {
                        if radius >= b.radius {
                            return;
                        }
                    }
                }
            }
            let better = best.as_ref().is_none_or(|b| radius < b.radius);
            if better {
                *best = Some(CenterSolution { centers: subset.clone(), radius });
            }
            return;
        }
        let remaining = k - subset.len();
        for v in start..=(n - remaining) {
            subset.push(v);
            go(n, k, v + 1, subset, trees, best);
            subset.pop();
        }
    }
    go(n, k, 0, &mut subset, &trees, &mut best);
    Ok(best.expect("some subset exists"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{complete_graph, cycle_graph, path_graph, star_graph};
    use crate::rational::rat_int;

    #[test]
    fn k_equals_n_radius_zero() {
        let g = cycle_graph(5);
        assert_eq!(hochbaum_shmoys(&g, 5).unwrap().radius, rat_int(0));
        assert_eq!(exact_kcenter(&g, 5).unwrap().radius, rat_int(0));
    }

    #[test]
    fn path_center() {
        let g = path_graph(5);
        let exact = exact_kcenter(&g, 1).unwrap();
        assert_eq!(exact.radius, rat_int(2));
        assert_eq!(exact.centers, vec![2]);
    }

    #[test]
    fn star_center() {
        let g = star_graph(6);
        let exact = exact_kcenter(&g, 1).unwrap();
        assert_eq!(exact.radius, rat_int(1));
        let greedy = hochbaum_shmoys(&g, 1).unwrap();
        assert!(greedy.radius <= rat_int(2) * &exact.radius);
    }

    #[test]
    fn greedy_within_twice_optimal() {
        let graphs = vec![path_graph(7), cycle_graph(6), star_graph(6), complete_graph(5)];
        for g in graphs {
            for k in 1..=3 {
                let greedy = hochbaum_shmoys(&g, k).unwrap();
                let exact = exact_kcenter(&g, k).unwrap();
                assert!(
                    greedy.radius <= rat_int(2) * &exact.radius,
                    "greedy {} > 2 * {} at k = {k}",
                    greedy.radius,
                    exact.radius
                );
            }
        }
    }

    #[test]
    fn exact_radius_non_increasing_in_k() {
        let g = cycle_graph(7);
        let mut prev: Option<Rat> = None;
        for k in 1..=4 {
            let r = exact_kcenter(&g, k).unwrap().radius;
            if let Some(p) = &prev {
                assert!(r <= *p);
            }
            prev = Some(r);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let g = path_graph(4);
        assert!(hochbaum_shmoys(&g, 0).is_err());
        assert!(exact_kcenter(&g, 5).is_err());
        let disconnected = crate::build::unit_from_pairs(&[(0, 1), (2, 3)]);
        assert!(hochbaum_shmoys(&disconnected, 1).is_err());
        assert!(exact_kcenter(&disconnected, 1).is_err());
    }
}
