//! Corpus verification: one report per graph file (or in-memory graph),
//! with graph-level parallelism and a stable output order.
//!
//! Graph-level workers are plain scoped threads, not rayon tasks: the
//! per-parameter timeout guards block their callers, and a blocked rayon
//! worker would starve the pool the inner computations run on.

use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use atlas_core::graph::WeightedGraph;
use atlas_core::io::parse_graph;

use crate::config::Config;
use crate::report::ParameterReport;
use crate::runner::report_for;

/// Runs `f(0..count)` on up to `rayon::current_num_threads()` scoped
/// threads, returning results in index order.
fn run_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let workers = rayon::current_num_threads().max(1).min(count.max(1));
    let next = AtomicUsize::new(0);
    let collected: Mutex<Vec<(usize, T)>> = Mutex::new(Vec::with_capacity(count));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= count {
                    break;
                }
                let result = f(i);
                collected.lock().unwrap().push((i, result));
            });
        }
    });
    let mut items = collected.into_inner().unwrap();
    items.sort_by_key(|(i, _)| *i);
    items.into_iter().map(|(_, t)| t).collect()
}

/// Reports for a set of in-memory graphs, in input order.
pub fn verify_graphs(graphs: &[(String, WeightedGraph)], config: &Config) -> Vec<ParameterReport> {
    run_indexed(graphs.len(), |i| report_for(&graphs[i].0, &graphs[i].1, config))
}

/// Reads every regular file of a directory (sorted by name) as a graph and
/// verifies it; unreadable files become error entries and the run
/// continues.
pub fn verify_corpus(dir: &Path, config: &Config) -> anyhow::Result<Vec<ParameterReport>> {
    let mut files: Vec<std::path::PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let reports = run_indexed(files.len(), |i| {
        let path = &files[i];
        let id = path
            .file_name()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_else(|| path.display().to_string());
        match std::fs::read_to_string(path) {
            Err(e) => ParameterReport::error_entry(&id, e.to_string()),
            Ok(text) => match parse_graph(&text) {
                Err(e) => ParameterReport::error_entry(&id, e.to_string()),
                Ok(g) => report_for(&id, &g, config),
            },
        }
    });
    Ok(reports)
}

/// Exit-code contract: zero iff every executed check passed.
pub fn all_pass(reports: &[ParameterReport]) -> bool {
    reports.iter().all(|r| r.all_checks_pass())
}
