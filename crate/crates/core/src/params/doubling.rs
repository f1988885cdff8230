//! Exact doubling constant and doubling dimension.
//!
//! The smallest d such that every ball of radius r is covered by d balls of
//! radius r/2 with vertex centers. Ball contents only change when r crosses
//! a pairwise distance, and shrinking r within one such step only shrinks
//! the covering balls, so testing r at every pairwise distance is exact.
//! Each (center, radius) instance is a minimum set cover, solved through
//! the hitting-set solver on its dual.

use std::collections::BTreeSet;
use num::Signed;

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::hitting::{min_hitting_set, HittingSetInstance};
use crate::rational::{rat, Rat};

pub const DOUBLING_CAP: usize = 16;

#[derive(Debug, Clone)]
pub struct DoublingWitness {
    /// Smallest d such that the graph is d-doubling.
    pub d: usize,
    /// log2(d), for display only.
    pub ddim_log2: f64,
    pub witness_center: VertexId,
    pub witness_radius: Rat,
}

pub fn doubling_dimension(g: &WeightedGraph, cap: usize) -> Result<DoublingWitness> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "doubling dimension", n: g.n(), cap });
    }
    let n = g.n();
    if n == 0 {
        return Ok(DoublingWitness {
            d: 1,
            ddim_log2: 0.0,
            witness_center: 0,
            witness_radius: Rat::from_integer(0.into()),
        });
    }
    let trees = g.all_trees();
    let dist = |u: usize, v: usize| trees[u].dist(v);

    let mut radii: BTreeSet<Rat> = BTreeSet::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if let Some(d) = dist(u, v) {
                if d.is_positive() {
                    radii.insert(d.clone());
                }
            }
        }
    }

    let half = rat(1, 2);
    let mut best = DoublingWitness {
        d: 1,
        ddim_log2: 0.0,
        witness_center: 0,
        witness_radius: Rat::from_integer(0.into()),
    };
    for u in 0..n {
        for r in &radii {
            let ball: Vec<VertexId> = (0..n)
                .filter(|&v| dist(u, v).is_some_and(|d| d <= r))
                .collect();
            if ball.len() <= best.d {
                continue;
            }
            let half_r = r * &half;
            // Dual hitting set: for each ball element, the set of centers
            // whose half-radius ball contains it; a minimum hitting set of
            // those center sets is a minimum cover.
            let family: Vec<Vec<VertexId>> = ball
                .iter()
                .map(|&e| {
                    (0..n)
                        .filter(|&c| dist(c, e).is_some_and(|d| *d <= half_r))
                        .collect()
                })
                .collect();
            let cover = min_hitting_set(&HittingSetInstance {
                family,
                candidates: (0..n).collect(),
                cap: None,
            })?;
            if cover.len() > best.d {
                best = DoublingWitness {
                    d: cover.len(),
                    ddim_log2: (cover.len() as f64).log2(),
                    witness_center: u,
                    witness_radius: r.clone(),
                };
            }
        }
    }
    Ok(best)
}
