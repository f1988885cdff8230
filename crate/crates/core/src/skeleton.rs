//! Exact skeleton dimension via an interval sweep over the geometric
//! realization of each canonical shortest-path tree.
//!
//! A point p on tree edge (u, v) at source distance t belongs to the
//! skeleton iff its farthest descendant is at least half as far from p as p
//! is from the source. Writing F(v) = dist(s, v) + reach(v), the farthest
//! descendant of p sits at distance F(v) - t, so the condition
//! F(v) - t >= t/2 is exactly t <= (2/3) F(v). Each tree edge therefore
//! carries the skeleton on the closed interval
//! [dist(s, u), min(dist(s, v), (2/3) F(v))].
//!
//! |Cut_s^r| is piecewise constant in r between interval endpoints, so the
//! sweep evaluates every endpoint plus one midpoint per gap. A radius that
//! lands exactly on a vertex counts that vertex once, no matter how many
//! incident intervals touch it; interior points are distinct per edge.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, ShortestPathTree, VertexId, WeightedGraph};
use crate::rational::{rat, Rat};

/// Default size cap for the brute-force oracle.
pub const BRUTE_FORCE_CAP: usize = 64;

/// The radius window of one tree edge during which it carries a skeleton
/// point. `child_dist` is dist(s, child); `hi <= child_dist` always.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonInterval {
    pub edge: EdgeId,
    pub parent: VertexId,
    pub child: VertexId,
    pub lo: Rat,
    pub hi: Rat,
    pub child_dist: Rat,
}

/// One interval per tree edge; empty intervals (lo > hi) are omitted.
pub fn skeleton_intervals(t: &ShortestPathTree) -> Vec<SkeletonInterval> {
    let two_thirds = rat(2, 3);
    let mut out = Vec::new();
    for &v in t.order() {
        let Some((u, e)) = t.parent(v) else { continue };
        let lo = t.dist(u).unwrap().clone();
        let dv = t.dist(v).unwrap().clone();
        let f = &dv + t.reach(v).unwrap();
        let cutoff = &two_thirds * &f;
        let hi = if dv <= cutoff { dv.clone() } else { cutoff };
        if lo <= hi {
            out.push(SkeletonInterval { edge: e, parent: u, child: v, lo, hi, child_dist: dv });
        }
    }
    out
}

/// Cut profile of one source: the distinct interval endpoints, the largest
/// cut and a radius realizing it (the smallest such evaluation radius).
#[derive(Debug, Clone)]
pub struct CutProfile {
    pub source: VertexId,
    pub breakpoints: Vec<Rat>,
    pub max_cut: usize,
    pub argmax_radius: Rat,
}

fn cut_size_at(r: &Rat, intervals: &[SkeletonInterval]) -> usize {
    let mut interior = 0usize;
    let mut vertices: Vec<VertexId> = Vec::new();
    for iv in intervals {
        if *r < iv.lo || *r > iv.hi {
            continue;
        }
        if *r == iv.lo {
            vertices.push(iv.parent);
        } else if *r == iv.child_dist {
            vertices.push(iv.child);
        } else {
            interior += 1;
        }
    }
    vertices.sort_unstable();
    vertices.dedup();
    interior + vertices.len()
}

/// Evaluates |Cut_s^r| at every interval endpoint and at the midpoint of
/// every gap between consecutive distinct endpoints.
pub fn max_cut(source: VertexId, intervals: &[SkeletonInterval]) -> CutProfile {
    let mut breakpoints: Vec<Rat> = intervals
        .iter()
        .flat_map(|iv| [iv.lo.clone(), iv.hi.clone()])
        .collect();
    breakpoints.sort();
    breakpoints.dedup();

    if breakpoints.is_empty() {
        return CutProfile {
            source,
            breakpoints,
            max_cut: 0,
            argmax_radius: Rat::from_integer(0.into()),
        };
    }

    let half = rat(1, 2);
    let mut eval = Vec::with_capacity(2 * breakpoints.len());
    for (i, b) in breakpoints.iter().enumerate() {
        eval.push(b.clone());
        if let Some(next) = breakpoints.get(i + 1) {
            eval.push((b + next) * &half);
        }
    }

    let mut best = 0usize;
    let mut best_r = eval[0].clone();
    for r in eval {
        let c = cut_size_at(&r, intervals);
        if c > best {
            best = c;
            best_r = r;
        }
    }
    CutProfile { source, breakpoints, max_cut: best, argmax_radius: best_r }
}

#[derive(Debug, Clone)]
pub struct SkeletonWitness {
    pub kappa: usize,
    pub source: VertexId,
    pub radius: Rat,
    pub had_ties: bool,
}

/// Skeleton dimension: the maximum cut over all sources and radii.
pub fn skeleton_dimension(g: &WeightedGraph) -> SkeletonWitness {
    let profiles: Vec<(CutProfile, bool)> = (0..g.n())
        .into_par_iter()
        .map(|s| {
            let t = g.shortest_path_tree(s);
            let iv = skeleton_intervals(&t);
            (max_cut(s, &iv), t.had_ties())
        })
        .collect();
    let had_ties = profiles.iter().any(|(_, t)| *t);
    let mut best: Option<&CutProfile> = None;
    for (p, _) in &profiles {
        if best.map_or(true, |b| p.max_cut > b.max_cut) {
            best = Some(p);
        }
    }
    match best {
        Some(p) => SkeletonWitness {
            kappa: p.max_cut,
            source: p.source,
            radius: p.argmax_radius.clone(),
            had_ties,
        },
        None => SkeletonWitness {
            kappa: 0,
            source: 0,
            radius: Rat::from_integer(0.into()),
            had_ties: false,
        },
    }
}

/// Skeleton dimension straight from the definition.
///
/// For every source and candidate radius this enumerates the geometric
/// point at that radius on every tree edge and tests the half-descendant
/// condition pointwise, with farthest-descendant distances recomputed by
/// explicit subtree enumeration (no reuse of the sweep's interval algebra).
pub fn brute_force_skeleton_dimension(g: &WeightedGraph, cap: usize) -> Result<usize> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "brute-force skeleton dimension", n: g.n(), cap });
    }
    let two_thirds = rat(2, 3);
    let half = rat(1, 2);
    let mut best = 0usize;
    for s in 0..g.n() {
        let t = g.shortest_path_tree(s);

        // Farthest source-distance in each vertex's subtree, by direct
        // descendant enumeration.
        let mut far: Vec<Option<Rat>> = vec![None; g.n()];
        for &v in t.order() {
            let mut max_d = t.dist(v).unwrap().clone();
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                let dx = t.dist(x).unwrap();
                if *dx > max_d {
                    max_d = dx.clone();
                }
                stack.extend_from_slice(t.children(x));
            }
            far[v] = Some(max_d);
        }

        let mut candidates: Vec<Rat> = Vec::new();
        for &v in t.order() {
            if t.parent(v).is_some() {
                candidates.push(t.dist(v).unwrap().clone());
                candidates.push(t.dist(t.parent(v).unwrap().0).unwrap().clone());
                candidates.push(&two_thirds * far[v].as_ref().unwrap());
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut radii = Vec::with_capacity(2 * candidates.len());
        for (i, c) in candidates.iter().enumerate() {
            radii.push(c.clone());
            if let Some(next) = candidates.get(i + 1) {
                radii.push((c + next) * &half);
            }
        }

        for r in &radii {
            let mut count = 0usize;
            // Vertex points at distance exactly r, deduplicated by identity.
            for &v in t.order() {
                if t.dist(v).unwrap() == r {
                    let slack = far[v].as_ref().unwrap() - r;
                    if slack >= &half * r {
                        count += 1;
                    }
                }
            }
            // Interior points, one per edge straddling r.
            for &v in t.order() {
                let Some((u, _)) = t.parent(v) else { continue };
                let du = t.dist(u).unwrap();
                let dv = t.dist(v).unwrap();
                if du < r && r < dv {
                    let slack = far[v].as_ref().unwrap() - r;
                    if slack >= &half * r {
                        count += 1;
                    }
                }
            }
            if count > best {
                best = count;
            }
        }
    }
    Ok(best)
}
