//! Exact pathwidth and treewidth with reconstructed decompositions.
//!
//! Pathwidth is computed as vertex separation by dynamic programming over
//! subsets: f(S) = max(boundary(S), min over v in S of f(S - v)). Treewidth
//! uses the elimination-ordering DP g(S) = min over v of
//! max(g(S - v), q(S - v, v)) where q counts the vertices outside reachable
//! from v through the already-eliminated set.
//!
//! Forests bypass the subset DPs: treewidth is 1 whenever an edge exists,
//! and tree pathwidth follows the path characterization pw(T) <= k iff some
//! leaf-to-leaf path P leaves only components of pathwidth <= k - 1. The
//! geometric binary tree gadget needs this at sizes far above the 2^n DP
//! range.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};

use super::{adjacency_masks, full_mask};

pub const WIDTH_CAP: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    Tree,
    Path,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub bags: Vec<Vec<VertexId>>,
    /// Edges between bag indices; for `Path` these are consecutive pairs.
    pub edges: Vec<(usize, usize)>,
}

impl Decomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).max(1) - 1
    }
}

/// Checks the three tree-decomposition properties, plus path shape for
/// `Path` decompositions.
pub fn validate_decomposition(g: &WeightedGraph, d: &Decomposition) -> std::result::Result<(), String> {
    let b = d.bags.len();
    if b == 0 {
        return Err("no bags".into());
    }
    for &(x, y) in &d.edges {
        if x >= b || y >= b {
            return Err("bag edge out of range".into());
        }
    }
    if d.edges.len() + 1 != b {
        return Err(format!("{} bags need {} edges, found {}", b, b - 1, d.edges.len()));
    }
    // The bag graph must be a tree: b-1 edges + connected.
    let mut nbrs = vec![Vec::new(); b];
    for &(x, y) in &d.edges {
        nbrs[x].push(y);
        nbrs[y].push(x);
    }
    let mut seen = vec![false; b];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &nbrs[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err("bag graph is disconnected".into());
    }
    if d.kind == DecompositionKind::Path && nbrs.iter().any(|l| l.len() > 2) {
        return Err("path decomposition has a branching bag".into());
    }

    let mut covered = vec![false; g.n()];
    for bag in &d.bags {
        for &v in bag {
            if v >= g.n() {
                return Err("bag vertex out of range".into());
            }
            covered[v] = true;
        }
    }
    if covered.iter().any(|&c| !c) {
        return Err("some vertex appears in no bag".into());
    }
    for e in g.edges() {
        if !d.bags.iter().any(|bag| bag.contains(&e.u) && bag.contains(&e.v)) {
            return Err(format!("edge ({}, {}) in no bag", e.u, e.v));
        }
    }
    // Bags containing each vertex must induce a connected subtree.
    for v in 0..g.n() {
        let holding: Vec<usize> =
            (0..b).filter(|&i| d.bags[i].contains(&v)).collect();
        if holding.is_empty() {
            continue;
        }
        let inset = |i: usize| holding.contains(&i);
        let mut seen = vec![false; b];
        let mut stack = vec![holding[0]];
        seen[holding[0]] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &nbrs[x] {
                if inset(y) && !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count != holding.len() {
            return Err(format!("bags of vertex {v} are not connected"));
        }
    }
    Ok(())
}

fn is_forest(g: &WeightedGraph) -> bool {
    g.m() + g.components().len() == g.n()
}

/// Exact pathwidth with a realizing path decomposition.
pub fn pathwidth(g: &WeightedGraph, cap: usize) -> Result<(usize, Decomposition)> {
    if g.m() == 0 {
        let bags: Vec<Vec<VertexId>> = (0..g.n().max(1)).map(|v| if v < g.n() { vec![v] } else { vec![] }).collect();
        let bags = if g.n() == 0 { vec![vec![]] } else { bags };
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        return Ok((0, Decomposition { kind: DecompositionKind::Path, bags, edges }));
    }
    if is_forest(g) {
        return forest_pathwidth(g);
    }
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "pathwidth", n: g.n(), cap });
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let full = full_mask(n);
    let size = 1usize << n;
    let mut f = vec![0u8; size];
    for s in 1..size {
        let sm = s as u64;
        let mut boundary = 0u8;
        let mut it = sm;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            if adj[v] & !sm != 0 {
                boundary += 1;
            }
        }
        let mut best = u8::MAX;
        let mut it = sm;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            best = best.min(f[s & !(1usize << v)]);
        }
        f[s] = best.max(boundary);
    }
    let pw = f[full as usize] as usize;

    // Reconstruct an optimal ordering back to front.
    let mut order_rev = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut pick = None;
        let mut it = s;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            if f[(s & !(1u64 << v)) as usize] <= f[s as usize] {
                pick = Some(v);
                break;
            }
        }
        let v = pick.expect("some removal attains the DP value");
        order_rev.push(v);
        s &= !(1u64 << v);
    }
    order_rev.reverse();
    let order = order_rev;

    // Bags: X_i = {v_i} + all earlier vertices with a neighbor at or after
    // position i.
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    for (i, &vi) in order.iter().enumerate() {
        let mut bag = vec![vi];
        for &u in order.iter().take(i) {
            let mut nb = adj[u];
            let mut keep = false;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if pos[w] >= i {
                    keep = true;
                    break;
                }
            }
            if keep {
                bag.push(u);
            }
        }
        bag.sort_unstable();
        bags.push(bag);
    }
    let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
    let d = Decomposition { kind: DecompositionKind::Path, bags, edges };
    debug_assert!(d.width() == pw);
    Ok((pw, d))
}

/// Exact treewidth with a realizing tree decomposition.
pub fn treewidth(g: &WeightedGraph, cap: usize) -> Result<(usize, Decomposition)> {
    if is_forest(g) {
        return forest_treewidth(g);
    }
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "treewidth", n: g.n(), cap });
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let full = full_mask(n);
    let size = 1usize << n;

    let q = |r: u64, v: usize| -> u8 {
        // Vertices outside r reachable from v through r.
        let mut c = adj[v];
        loop {
            let mut nxt = c;
            let mut inner = c & r;
            while inner != 0 {
                let x = inner.trailing_zeros() as usize;
                inner &= inner - 1;
                nxt |= adj[x];
            }
            if nxt == c {
                break;
            }
            c = nxt;
        }
        (c & !r & !(1u64 << v)).count_ones() as u8
    };

    let mut gdp = vec![0u8; size];
    for s in 1..size {
        let sm = s as u64;
        let mut best = u8::MAX;
        let mut it = sm;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let rest = sm & !(1u64 << v);
            let cand = gdp[rest as usize].max(q(rest, v));
            if cand < best {
                best = cand;
            }
        }
        gdp[s] = best;
    }
    let tw = gdp[full as usize] as usize;

    // Elimination order, last-eliminated first during reconstruction.
    let mut elim_rev = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut pick = None;
        let mut it = s;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let rest = s & !(1u64 << v);
            if gdp[rest as usize].max(q(rest, v)) <= gdp[s as usize] {
                pick = Some(v);
                break;
            }
        }
        let v = pick.expect("some elimination attains the DP value");
        elim_rev.push(v);
        s &= !(1u64 << v);
    }
    elim_rev.reverse();
    let order = elim_rev;

    // Simulate the elimination on a filling adjacency to produce bags.
    let mut cur = adj.clone();
    let mut alive = full;
    let mut bags: Vec<Vec<VertexId>> = Vec::with_capacity(n);
    let mut elim_pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        elim_pos[v] = i;
        let nbrs = cur[v] & alive;
        let mut bag = vec![v];
        let mut it = nbrs;
        while it != 0 {
            let w = it.trailing_zeros() as usize;
            it &= it - 1;
            bag.push(w);
        }
        bag.sort_unstable();
        bags.push(bag);
        let mut a = nbrs;
        while a != 0 {
            let x = a.trailing_zeros() as usize;
            a &= a - 1;
            cur[x] |= nbrs & !(1u64 << x);
        }
        alive &= !(1u64 << v);
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (i, &v) in order.iter().enumerate() {
        let later: Option<usize> = bags[i]
            .iter()
            .filter(|&&w| w != v)
            .map(|&w| elim_pos[w])
            .min();
        match later {
            Some(j) => edges.push((i, j)),
            None => {
                if i + 1 < n {
                    edges.push((i, i + 1));
                }
            }
        }
    }
    let d = Decomposition { kind: DecompositionKind::Tree, bags, edges };
    debug_assert!(d.width() == tw);
    Ok((tw, d))
}

// ---- forest special cases ----

fn forest_treewidth(g: &WeightedGraph) -> Result<(usize, Decomposition)> {
    if g.m() == 0 {
        let bags: Vec<Vec<VertexId>> = if g.n() == 0 {
            vec![vec![]]
        } else {
            (0..g.n()).map(|v| vec![v]).collect()
        };
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        return Ok((0, Decomposition { kind: DecompositionKind::Tree, bags, edges }));
    }
    // One bag per edge, linked along a DFS; isolated vertices become
    // singleton bags; components are chained to keep the bag graph a tree.
    let n = g.n();
    let mut bags: Vec<Vec<VertexId>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = vec![false; n];
    let mut comp_roots: Vec<usize> = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        if g.degree(s) == 0 {
            bags.push(vec![s]);
            comp_roots.push(bags.len() - 1);
            continue;
        }
        // DFS from s; bag per tree edge; parent bag shares the upper vertex.
        let mut vertex_bag: Vec<Option<usize>> = vec![None; n];
        let mut stack = vec![s];
        let mut root_bag: Option<usize> = None;
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                let mut bag = vec![v, w];
                bag.sort_unstable();
                bags.push(bag);
                let id = bags.len() - 1;
                match vertex_bag[v] {
                    Some(pb) => edges.push((pb, id)),
                    None => {
                        if let Some(rb) = root_bag {
                            edges.push((rb, id));
                        }
                    }
                }
                if root_bag.is_none() {
                    root_bag = Some(id);
                }
                vertex_bag[w] = Some(id);
                if vertex_bag[v].is_none() {
                    vertex_bag[v] = Some(id);
                }
                stack.push(w);
            }
        }
        comp_roots.push(root_bag.unwrap());
    }
    for pair in comp_roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    Ok((1, Decomposition { kind: DecompositionKind::Tree, bags, edges }))
}

fn forest_pathwidth(g: &WeightedGraph) -> Result<(usize, Decomposition)> {
    let n = g.n();
    assert!(n <= 64, "forest pathwidth uses u64 masks");
    let adj = adjacency_masks(g);
    let mut memo: HashMap<u64, usize> = HashMap::new();
    let mut pw = 0usize;
    let mut all_bags: Vec<Vec<VertexId>> = Vec::new();
    for comp in g.components() {
        let mask = comp.iter().fold(0u64, |m, &v| m | (1 << v));
        let k = tree_pw(&adj, mask, &mut memo);
        pw = pw.max(k);
        let bags = build_tree_pd(&adj, mask, &mut memo);
        all_bags.extend(bags);
    }
    if all_bags.is_empty() {
        all_bags.push(vec![]);
    }
    let edges = (1..all_bags.len()).map(|i| (i - 1, i)).collect();
    Ok((pw, Decomposition { kind: DecompositionKind::Path, bags: all_bags, edges }))
}

fn mask_vertices64(m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut it = m;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        out.push(v);
    }
    out
}

fn tree_leaves(adj: &[u64], mask: u64) -> Vec<usize> {
    mask_vertices64(mask)
        .into_iter()
        .filter(|&v| (adj[v] & mask).count_ones() <= 1)
        .collect()
}

fn tree_path(adj: &[u64], mask: u64, u: usize, v: usize) -> Vec<usize> {
    // BFS parents within the component mask.
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::from([u]);
    let mut seen = 1u64 << u;
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        let mut nb = adj[x] & mask & !seen;
        while nb != 0 {
            let y = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            seen |= 1 << y;
            parent.insert(y, x);
            queue.push_back(y);
        }
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[&cur];
        path.push(cur);
    }
    path.reverse();
    path
}

fn components_of(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v] & rest & !comp;
            }
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Pathwidth of the tree induced by `mask`: the smallest k such that some
/// leaf-to-leaf path leaves only components of pathwidth <= k - 1.
fn tree_pw(adj: &[u64], mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if mask.count_ones() <= 1 {
        return 0;
    }
    if let Some(&k) = memo.get(&mask) {
        return k;
    }
    let leaves = tree_leaves(adj, mask);
    let mut k = 1usize;
    let answer = 'outer: loop {
        for (i, &u) in leaves.iter().enumerate() {
            for &v in leaves.iter().skip(i + 1) {
                let path = tree_path(adj, mask, u, v);
                let pmask = path.iter().fold(0u64, |m, &x| m | (1 << x));
                let ok = components_of(adj, mask & !pmask)
                    .into_iter()
                    .all(|c| tree_pw(adj, c, memo) <= k - 1);
                if ok {
                    break 'outer k;
                }
            }
        }
        k += 1;
    };
    memo.insert(mask, answer);
    answer
}

/// Path decomposition of the tree induced by `mask`, width tree_pw(mask).
fn build_tree_pd(adj: &[u64], mask: u64, memo: &mut HashMap<u64, usize>) -> Vec<Vec<VertexId>> {
    if mask == 0 {
        return Vec::new();
    }
    if mask.count_ones() == 1 {
        return vec![vec![mask.trailing_zeros() as usize]];
    }
    let k = tree_pw(adj, mask, memo);
    let leaves = tree_leaves(adj, mask);
    for (i, &u) in leaves.iter().enumerate() {
        for &v in leaves.iter().skip(i + 1) {
            let path = tree_path(adj, mask, u, v);
            let pmask = path.iter().fold(0u64, |m, &x| m | (1 << x));
            let comps = components_of(adj, mask & !pmask);
            if !comps.iter().all(|&c| tree_pw(adj, c, memo) <= k - 1) {
                continue;
            }
            let mut bags: Vec<Vec<VertexId>> = Vec::new();
            for (pi, &p) in path.iter().enumerate() {
                for &c in &comps {
                    // Components hanging off p.
                    if adj[p] & c == 0 {
                        continue;
                    }
                    for mut sub in build_tree_pd(adj, c, memo) {
                        sub.push(p);
                        sub.sort_unstable();
                        bags.push(sub);
                    }
                }
                if pi + 1 < path.len() {
                    let mut bag = vec![p, path[pi + 1]];
                    bag.sort_unstable();
                    bags.push(bag);
                }
            }
            if bags.is_empty() {
                bags.push(vec![path[0]]);
            }
            return bags;
        }
    }
    unreachable!("tree_pw found a feasible path")
}
