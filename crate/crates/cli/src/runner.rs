//! Runs every parameter on one graph under caps and timeouts, then
//! evaluates the relationship checklist over whatever was computable.

use std::collections::BTreeMap;
use std::sync::mpsc;
use std::time::Duration;

use atlas_core::gadgets::Rel;
use atlas_core::graph::WeightedGraph;
use atlas_core::highway::{highway_dimension_capped, HdTag};
use atlas_core::params;
use atlas_core::rational::fmt_rat;
use atlas_core::skeleton::skeleton_dimension;
use atlas_core::Error;
use serde_json::json;

use crate::config::Config;
use crate::report::{ParamEntry, ParameterReport, RelCheck};

/// A parameter computation in flight. Without a timeout the closure runs
/// inline; with one it runs on its own thread and is abandoned (left to
/// finish in the background) once the deadline passes.
enum Pending<T> {
    Ready(T),
    Waiting(mpsc::Receiver<T>),
}

fn launch<T: Send + 'static>(
    timeout: Option<Duration>,
    f: impl FnOnce() -> T + Send + 'static,
) -> Pending<T> {
    match timeout {
        None => Pending::Ready(f()),
        Some(_) => {
            let (tx, rx) = mpsc::channel();
            std::thread::spawn(move || {
                let _ = tx.send(f());
            });
            Pending::Waiting(rx)
        }
    }
}

impl<T> Pending<T> {
    fn settle(self, timeout: Option<Duration>) -> Option<T> {
        match self {
            Pending::Ready(t) => Some(t),
            Pending::Waiting(rx) => rx.recv_timeout(timeout.expect("waiting implies a deadline")).ok(),
        }
    }
}

/// CapExceeded (or a timeout, reported as `None`) becomes skipped-cap;
/// ties flag the entry; anything else is a hard error.
fn entry_from<T>(
    result: Option<Result<T, Error>>,
    render: impl FnOnce(T) -> (i64, Option<serde_json::Value>, bool),
) -> ParamEntry {
    match result {
        None => ParamEntry::skipped(),
        Some(Err(Error::CapExceeded { .. })) => ParamEntry::skipped(),
        Some(Err(e)) => ParamEntry {
            status: format!("error: {e}"),
            value: None,
            witness: None,
        },
        Some(Ok(t)) => {
            let (value, witness, ties) = render(t);
            if ties {
                ParamEntry::tie_flagged(value, witness)
            } else {
                ParamEntry::ok(value, witness)
            }
        }
    }
}

fn labels(g: &WeightedGraph, vs: &[usize]) -> Vec<u64> {
    vs.iter().map(|&v| g.label(v)).collect()
}

/// Max leaf number with the per-component rule: the max over components
/// with at least two vertices, zero when none exist.
fn max_leaf_combined(g: &WeightedGraph, cap: usize) -> Result<(usize, Option<Vec<(u64, u64)>>), Error> {
    if g.is_connected() && g.n() >= 1 {
        let (ml, tree) = params::max_leaf_number(g, cap)?;
        let edges = tree
            .iter()
            .map(|&e| (g.label(g.edge(e).u), g.label(g.edge(e).v)))
            .collect();
        return Ok((ml, Some(edges)));
    }
    let mut best = 0usize;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        if comp.len() > cap {
            return Err(Error::CapExceeded { what: "max leaf number", n: comp.len(), cap });
        }
        let sub: Vec<(u64, u64, atlas_core::Rat)> = g
            .edges()
            .iter()
            .filter(|e| comp.contains(&e.u))
            .map(|e| (g.label(e.u), g.label(e.v), e.weight.clone()))
            .collect();
        let subgraph = WeightedGraph::from_edge_list(&sub)?;
        let (ml, _) = params::max_leaf_number(&subgraph, cap)?;
        best = best.max(ml);
    }
    Ok((best, None))
}

/// Computes every parameter of one graph. Parameter keys: kappa, ml, bw,
/// pw, tw, dl, hindex, mindeg, maxdeg, doubling, hd1, hd2, hd3.
///
/// All workers start before any deadline is awaited, so the wall-clock
/// cost of one graph is bounded by the slowest parameter (or the timeout).
pub fn compute_parameters(
    g: &WeightedGraph,
    config: &Config,
) -> (BTreeMap<String, ParamEntry>, bool) {
    let timeout = config.effective_timeout();
    let caps = config.caps.clone();
    let mut entries: BTreeMap<String, ParamEntry> = BTreeMap::new();

    let kappa_pending = {
        let owned = g.clone();
        launch(timeout, move || {
            let w = skeleton_dimension(&owned);
            (w.kappa, w.source, w.radius, w.had_ties)
        })
    };
    let ml_pending = {
        let owned = g.clone();
        let cap = caps.max_leaf;
        launch(timeout, move || max_leaf_combined(&owned, cap))
    };
    let bw_pending = {
        let owned = g.clone();
        let cap = caps.bandwidth;
        launch(timeout, move || params::bandwidth(&owned, cap))
    };
    let pw_pending = {
        let owned = g.clone();
        let cap = caps.pathwidth;
        launch(timeout, move || params::pathwidth(&owned, cap))
    };
    let tw_pending = {
        let owned = g.clone();
        let cap = caps.treewidth;
        launch(timeout, move || params::treewidth(&owned, cap))
    };
    let dl_pending = {
        let owned = g.clone();
        let cap = caps.linear_forest;
        launch(timeout, move || params::distance_to_linear_forest(&owned, cap))
    };
    let doubling_pending = {
        let owned = g.clone();
        let cap = caps.doubling;
        launch(timeout, move || params::doubling_dimension(&owned, cap))
    };
    let hd_pendings: Vec<(HdTag, Pending<Result<atlas_core::highway::HighwayWitness, Error>>)> =
        [HdTag::Hd1, HdTag::Hd2, HdTag::Hd3]
            .into_iter()
            .map(|tag| {
                let owned = g.clone();
                let cap = match tag {
                    HdTag::Hd3 => caps.hd3,
                    _ => caps.hd12,
                };
                (tag, launch(timeout, move || highway_dimension_capped(&owned, tag, cap)))
            })
            .collect();

    let kappa_result = kappa_pending.settle(timeout);
    let kappa_ties = kappa_result.as_ref().map(|t| t.3).unwrap_or(false);
    entries.insert(
        "kappa".into(),
        entry_from(kappa_result.map(Ok), |(kappa, source, radius, had_ties)| {
            let witness = (source < g.n()).then(|| {
                json!({
                    "source": g.label(source),
                    "radius": fmt_rat(&radius),
                })
            });
            (kappa as i64, witness, had_ties)
        }),
    );
    entries.insert(
        "ml".into(),
        entry_from(ml_pending.settle(timeout), |(ml, edges)| {
            (ml as i64, edges.map(|e| json!({ "tree_edges": e })), false)
        }),
    );
    entries.insert(
        "bw".into(),
        entry_from(bw_pending.settle(timeout), |(bw, positions)| {
            let by_label: Vec<(u64, usize)> = positions
                .iter()
                .enumerate()
                .map(|(v, &pos)| (g.label(v), pos))
                .collect();
            (bw as i64, Some(json!({ "positions": by_label })), false)
        }),
    );
    entries.insert(
        "pw".into(),
        entry_from(pw_pending.settle(timeout), |(pw, d)| {
            let bags: Vec<Vec<u64>> = d.bags.iter().map(|b| labels(g, b)).collect();
            (pw as i64, Some(json!({ "bags": bags })), false)
        }),
    );
    entries.insert(
        "tw".into(),
        entry_from(tw_pending.settle(timeout), |(tw, d)| {
            let bags: Vec<Vec<u64>> = d.bags.iter().map(|b| labels(g, b)).collect();
            (tw as i64, Some(json!({ "bags": bags, "bag_edges": d.edges })), false)
        }),
    );
    entries.insert(
        "dl".into(),
        entry_from(dl_pending.settle(timeout), |(dl, set)| {
            (dl as i64, Some(json!({ "deleted": labels(g, &set) })), false)
        }),
    );

    entries.insert("hindex".into(), ParamEntry::ok(params::h_index(g) as i64, None));
    let (min_deg, max_deg) = params::degree_stats(g);
    entries.insert("mindeg".into(), ParamEntry::ok(min_deg as i64, None));
    entries.insert("maxdeg".into(), ParamEntry::ok(max_deg as i64, None));

    entries.insert(
        "doubling".into(),
        entry_from(doubling_pending.settle(timeout), |w| {
            let witness = (w.witness_center < g.n()).then(|| {
                json!({
                    "ddim_log2": w.ddim_log2,
                    "center": g.label(w.witness_center),
                    "radius": fmt_rat(&w.witness_radius),
                })
            });
            (w.d as i64, witness, false)
        }),
    );

    let mut hd_ties = false;
    for (tag, pending) in hd_pendings {
        let r = pending.settle(timeout);
        if let Some(Ok(w)) = &r {
            hd_ties |= w.had_ties;
        }
        entries.insert(
            tag.as_str().into(),
            entry_from(r, |w| {
                let witness = json!({
                    "anchor": w.anchor.map(|a| g.label(a)),
                    "radius": w.radius.as_ref().map(fmt_rat),
                    "hitting_set": labels(g, &w.hitting_set),
                });
                (w.value as i64, Some(witness), w.had_ties)
            }),
        );
    }

    (entries, kappa_ties || hd_ties)
}

/// The relationship checklist. Rows whose sides were skipped are omitted.
pub fn relationship_checks(entries: &BTreeMap<String, ParamEntry>) -> Vec<RelCheck> {
    let value = |key: &str| entries.get(key).and_then(|e| e.computed_value());
    let mut checks = Vec::new();
    let mut push = |name: &str, lhs: Option<i64>, rel: Rel, rhs: Option<i64>| {
        if let (Some(lhs), Some(rhs)) = (lhs, rhs) {
            checks.push(RelCheck {
                name: name.to_string(),
                lhs,
                relation: rel.as_str().to_string(),
                rhs,
                pass: rel.holds(lhs, rhs),
            });
        }
    };

    let kappa = value("kappa");
    let ml = value("ml");
    let bw = value("bw");
    let pw = value("pw");
    let tw = value("tw");
    let dl = value("dl");
    let h = value("hindex");
    let mindeg = value("mindeg");
    let maxdeg = value("maxdeg");
    let d = value("doubling");
    let hd1 = value("hd1");
    let hd2 = value("hd2");
    let hd3 = value("hd3");

    push("kappa<=ml", kappa, Rel::Le, ml);
    push("bw<=ml", bw, Rel::Le, ml);
    push("pw<=bw", pw, Rel::Le, bw);
    push("tw<=pw", tw, Rel::Le, pw);
    push("maxdeg<=2bw", maxdeg, Rel::Le, bw.map(|b| 2 * b));
    push("dl<=ml-1", dl, Rel::Le, ml.map(|m| m - 1));
    push("pw<=dl+1", pw, Rel::Le, dl.map(|d| d + 1));
    push("hindex<=maxdeg", h, Rel::Le, maxdeg);
    push("mindeg<=tw", mindeg, Rel::Le, tw);
    push("hd2<=hd1", hd2, Rel::Le, hd1);
    push("hd1<=hd3(hd3+1)", hd1, Rel::Le, hd3.map(|x| x * (x + 1)));
    push("hd2<=hd3", hd2, Rel::Le, hd3);
    push("kappa<=hd3", kappa, Rel::Le, hd3);
    push("doubling<=2kappa+1", d, Rel::Le, kappa.map(|k| 2 * k + 1));
    checks
}

/// Full report for one graph.
pub fn report_for(graph_id: &str, g: &WeightedGraph, config: &Config) -> ParameterReport {
    let (parameters, had_ties) = compute_parameters(g, config);
    let relationship_checks = relationship_checks(&parameters);
    ParameterReport {
        graph_id: graph_id.to_string(),
        n: g.n(),
        m: g.m(),
        had_ties,
        error: None,
        parameters,
        relationship_checks,
    }
}
