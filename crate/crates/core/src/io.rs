//! Text formats for graphs and finite metrics.
//!
//! Graph format, one graph per file:
//!
//! ```text
//! # optional comment lines
//! n m
//! u v w        (m lines; w is a decimal or p/q rational)
//! ```
//!
//! DIMACS-gr style input is also accepted: a `p sp n m` header and `a u v w`
//! arc lines, with `c` comment lines. Duplicate arc pairs (both directions)
//! collapse into one undirected edge; duplicates with different weights are
//! rejected.
//!
//! Metric format: a line `n`, then `n` rows of `n` rationals forming a
//! symmetric matrix with zero diagonal.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::embed::FiniteMetric;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::rational::{fmt_rat, parse_rat, Rat};

/// Parses either the plain edge-list format or DIMACS-gr content.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.iter().any(|l| l.starts_with("p ") || l.starts_with("a ") || l.starts_with("c ")) {
        return parse_dimacs(&lines);
    }
    let mut it = lines.into_iter();
    let header = it.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let mut hp = header.split_whitespace();
    let n: usize = hp
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("bad header".into()))?;
    let m: usize = hp
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("bad header".into()))?;
    let mut list = Vec::with_capacity(m);
    for _ in 0..m {
        let line = it.next().ok_or_else(|| Error::Parse("missing edge line".into()))?;
        let mut t = line.split_whitespace();
        let u: u64 = t
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?;
        let v: u64 = t
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?;
        let w = parse_rat(t.next().ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?)?;
        list.push((u, v, w));
    }
    let g = WeightedGraph::from_edge_list(&list)?;
    if g.n() > n {
        return Err(Error::Parse(format!(
            "header declares {n} vertices but edges mention {}",
            g.n()
        )));
    }
    if g.n() < n {
        // Trailing isolated vertices allowed by the header.
        let dense: Vec<(usize, usize, Rat)> = list
            .iter()
            .map(|(u, v, w)| (*u as usize, *v as usize, w.clone()))
            .collect();
        return WeightedGraph::from_dense(n, &dense);
    }
    Ok(g)
}

fn parse_dimacs(lines: &[&str]) -> Result<WeightedGraph> {
    let mut arcs: BTreeMap<(u64, u64), Rat> = BTreeMap::new();
    let mut declared_n: Option<usize> = None;
    for line in lines {
        let mut t = line.split_whitespace();
        match t.next() {
            Some("c") | None => {}
            Some("p") => {
                // `p sp n m`
                let _kind = t.next();
                declared_n = t.next().and_then(|x| x.parse().ok());
            }
            Some("a") => {
                let u: u64 = t
                    .next()
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad arc `{line}`")))?;
                let v: u64 = t
                    .next()
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad arc `{line}`")))?;
                let w = parse_rat(
                    t.next().ok_or_else(|| Error::Parse(format!("bad arc `{line}`")))?,
                )?;
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                let key = (u.min(v), u.max(v));
                match arcs.get(&key) {
                    None => {
                        arcs.insert(key, w);
                    }
                    Some(prev) if *prev == w => {}
                    Some(_) => return Err(Error::InconsistentDuplicate { u, v }),
                }
            }
            Some(other) => {
                return Err(Error::Parse(format!("unexpected DIMACS line kind `{other}`")))
            }
        }
    }
    let list: Vec<(u64, u64, Rat)> = arcs.into_iter().map(|((u, v), w)| (u, v, w)).collect();
    let g = WeightedGraph::from_edge_list(&list)?;
    if let Some(n) = declared_n {
        if g.n() > n {
            return Err(Error::Parse(format!(
                "DIMACS header declares {n} vertices but arcs mention {}",
                g.n()
            )));
        }
    }
    Ok(g)
}

/// Writes the plain edge-list format using original vertex labels.
pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", g.label(e.u), g.label(e.v), fmt_rat(&e.weight));
    }
    out
}

/// Parses the `n` + matrix metric format.
pub fn parse_metric(text: &str) -> Result<FiniteMetric> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut it = lines.into_iter();
    let n: usize = it
        .next()
        .and_then(|t| t.split_whitespace().next())
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("bad metric header".into()))?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let line = it.next().ok_or_else(|| Error::Parse("missing metric row".into()))?;
        let row: Result<Vec<Rat>> = line.split_whitespace().map(parse_rat).collect();
        let row = row?;
        if row.len() != n {
            return Err(Error::Parse(format!("metric row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    FiniteMetric::new(rows)
}

pub fn write_metric(x: &FiniteMetric) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", x.n());
    for i in 0..x.n() {
        let row: Vec<String> = (0..x.n()).map(|j| fmt_rat(x.dist(i, j))).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
