//! Weighted undirected graphs with exact rational weights and canonical
//! unique shortest paths.
//!
//! Shortest paths are made unique by a deterministic tie-break: distances
//! compare first by exact rational length, then by hop count, and the parent
//! edge of every vertex is the smallest-id edge consistent with that key.
//! The resulting tree is a pure function of the graph, independent of any
//! heap ordering, so repeated runs produce identical parent maps. Inputs
//! whose shortest paths are genuinely tied are reported via `had_ties`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num::Zero;
use num::Signed;

use crate::error::{Error, Result};
use crate::rational::Rat;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Rat,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeightedGraph {
    edges: Vec<Edge>,
    adj: Vec<Vec<EdgeId>>,
    labels: Vec<u64>,
}

impl WeightedGraph {
    /// Builds a graph from an edge list over arbitrary `u64` vertex labels.
    ///
    /// Labels are densely re-indexed in increasing order; the original label
    /// of internal vertex `v` is available as [`WeightedGraph::label`].
    /// Rejects self-loops, duplicate unordered pairs and non-positive
    /// weights.
    pub fn from_edge_list(list: &[(u64, u64, Rat)]) -> Result<Self> {
        let mut labels: Vec<u64> = list.iter().flat_map(|&(u, v, _)| [u, v]).collect();
        labels.sort_unstable();
        labels.dedup();
        let index = |l: u64| labels.binary_search(&l).unwrap();

        let mut seen = std::collections::BTreeSet::new();
        let mut edges = Vec::with_capacity(list.len());
        let mut adj = vec![Vec::new(); labels.len()];
        for (raw_u, raw_v, w) in list {
            if raw_u == raw_v {
                return Err(Error::SelfLoop(*raw_u));
            }
            if !w.is_positive() {
                return Err(Error::NonPositiveWeight { u: *raw_u, v: *raw_v });
            }
            let (u, v) = (index(*raw_u), index(*raw_v));
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u: *raw_u, v: *raw_v });
            }
            let id = edges.len();
            edges.push(Edge { u, v, weight: w.clone() });
            adj[u].push(id);
            adj[v].push(id);
        }
        Ok(WeightedGraph { edges, adj, labels })
    }

    /// Graph over vertices `0..n` from already-dense indices.
    pub fn from_dense(n: usize, list: &[(usize, usize, Rat)]) -> Result<Self> {
        let mut raw: Vec<(u64, u64, Rat)> = list
            .iter()
            .map(|(u, v, w)| (*u as u64, *v as u64, w.clone()))
            .collect();
        // Isolated vertices survive dense construction via a label pass.
        if raw.iter().any(|&(u, v, _)| u as usize >= n || v as usize >= n) {
            return Err(Error::Parse("edge endpoint out of range".into()));
        }
        raw.sort_by_key(|&(u, v, _)| (u, v));
        let g = Self::from_edge_list(&raw)?;
        if g.n() == n {
            return Ok(g);
        }
        // Re-add isolated vertices that appear in no edge.
        let mut edges = g.edges;
        let mut adj = vec![Vec::new(); n];
        let mut relabel = vec![0usize; g.labels.len()];
        for (i, l) in g.labels.iter().enumerate() {
            relabel[i] = *l as usize;
        }
        for (id, e) in edges.iter_mut().enumerate() {
            e.u = relabel[e.u];
            e.v = relabel[e.v];
            adj[e.u].push(id);
            adj[e.v].push(id);
        }
        Ok(WeightedGraph { edges, adj, labels: (0..n as u64).collect() })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v]
    }

    /// Internal id for an original label.
    pub fn vertex_by_label(&self, label: u64) -> Result<VertexId> {
        self.labels
            .binary_search(&label)
            .map_err(|_| Error::UnknownVertex(label))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(move |&e| self.edges[e].other(v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Connected components, each sorted by vertex id.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut comp = Vec::new();
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Canonical single-source shortest-path tree (see module docs).
    pub fn shortest_path_tree(&self, s: VertexId) -> ShortestPathTree {
        let n = self.n();
        let mut dist: Vec<Option<Rat>> = vec![None; n];
        let mut hops: Vec<usize> = vec![usize::MAX; n];
        let mut settled = vec![false; n];
        let mut heap: BinaryHeap<Reverse<(Rat, usize, VertexId)>> = BinaryHeap::new();
        dist[s] = Some(Rat::zero());
        hops[s] = 0;
        heap.push(Reverse((Rat::zero(), 0, s)));
        while let Some(Reverse((d, h, v))) = heap.pop() {
            if settled[v] || dist[v].as_ref() != Some(&d) || hops[v] != h {
                continue;
            }
            settled[v] = true;
            for &e in &self.adj[v] {
                let edge = &self.edges[e];
                let w = edge.other(v);
                if settled[w] {
                    continue;
                }
                let nd = &d + &edge.weight;
                let nh = h + 1;
                let better = match &dist[w] {
                    None => true,
                    Some(cur) => (&nd, nh) < (cur, hops[w]),
                };
                if better {
                    dist[w] = Some(nd.clone());
                    hops[w] = nh;
                    heap.push(Reverse((nd, nh, w)));
                }
            }
        }

        // Canonical parent assignment: among distance-tight incoming edges
        // take those also tight in hop count, then the smallest edge id.
        let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
        let mut had_ties = false;
        for v in 0..n {
            if v == s || dist[v].is_none() {
                continue;
            }
            let dv = dist[v].clone().unwrap();
            let mut tight_count = 0usize;
            let mut best: Option<EdgeId> = None;
            for &e in &self.adj[v] {
                let edge = &self.edges[e];
                let u = edge.other(v);
                let du = match &dist[u] {
                    Some(d) => d,
                    None => continue,
                };
                if du + &edge.weight == dv {
                    tight_count += 1;
                    if hops[u] + 1 == hops[v] && best.map_or(true, |b| e < b) {
                        best = Some(e);
                    }
                }
            }
            if tight_count >= 2 {
                had_ties = true;
            }
            let e = best.expect("reachable vertex must have a tight parent edge");
            parent[v] = Some((self.edges[e].other(v), e));
        }

        let mut children: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for v in 0..n {
            if let Some((u, _)) = parent[v] {
                children[u].push(v);
            }
        }
        for c in &mut children {
            c.sort_unstable();
        }

        // Vertices of the component ordered by (dist, id); a reverse pass
        // over this order visits children before parents.
        let mut order: Vec<VertexId> = (0..n).filter(|&v| dist[v].is_some()).collect();
        order.sort_by(|&a, &b| {
            dist[a]
                .as_ref()
                .unwrap()
                .cmp(dist[b].as_ref().unwrap())
                .then(a.cmp(&b))
        });

        let mut reach: Vec<Option<Rat>> = (0..n)
            .map(|v| dist[v].as_ref().map(|_| Rat::zero()))
            .collect();
        for &v in order.iter().rev() {
            if let Some((u, e)) = parent[v] {
                let candidate = &self.edges[e].weight + reach[v].as_ref().unwrap();
                let r = reach[u].as_mut().unwrap();
                if candidate > *r {
                    *r = candidate;
                }
            }
        }

        ShortestPathTree { source: s, parent, children, dist, hops, reach, order, had_ties }
    }

    /// Exact shortest-path distance; `None` when disconnected.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Option<Rat> {
        self.shortest_path_tree(u).dist(v).cloned()
    }

    /// Closed ball `{ v : dist(u, v) <= r }`, sorted by vertex id.
    pub fn ball(&self, u: VertexId, r: &Rat) -> Vec<VertexId> {
        let t = self.shortest_path_tree(u);
        (0..self.n())
            .filter(|&v| t.dist(v).is_some_and(|d| d <= r))
            .collect()
    }

    /// A weighted graph is metric when every edge is a shortest path between
    /// its endpoints; returns the first violating edge otherwise.
    /// Errors on disconnected input.
    pub fn is_metric(&self) -> Result<MetricCheck> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let trees: Vec<ShortestPathTree> = (0..self.n())
            .map(|s| self.shortest_path_tree(s))
            .collect();
        for (id, e) in self.edges.iter().enumerate() {
            let d = trees[e.u].dist(e.v).expect("connected");
            if *d != e.weight {
                return Ok(MetricCheck { is_metric: false, violation: Some(id) });
            }
        }
        Ok(MetricCheck { is_metric: true, violation: None })
    }

    /// All canonical trees, one per source, computed in parallel.
    pub fn all_trees(&self) -> Vec<ShortestPathTree> {
        use rayon::prelude::*;
        (0..self.n())
            .into_par_iter()
            .map(|s| self.shortest_path_tree(s))
            .collect()
    }

    /// Same vertex set and adjacency with all weights replaced by one.
    pub fn unit_weights(&self) -> WeightedGraph {
        let list: Vec<(usize, usize, Rat)> = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, Rat::from_integer(1.into())))
            .collect();
        WeightedGraph::from_dense(self.n(), &list).expect("valid by construction")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricCheck {
    pub is_metric: bool,
    pub violation: Option<EdgeId>,
}

/// A recorded path: consecutive vertices are adjacent and the vertex
/// sequence is the canonical shortest path between its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRecord {
    pub vertices: Vec<VertexId>,
    pub length: Rat,
}

impl PathRecord {
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn is_single_vertex(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// Canonical shortest-path tree of one source.
#[derive(Debug, Clone)]
pub struct ShortestPathTree {
    pub source: VertexId,
    parent: Vec<Option<(VertexId, EdgeId)>>,
    children: Vec<Vec<VertexId>>,
    dist: Vec<Option<Rat>>,
    hops: Vec<usize>,
    reach: Vec<Option<Rat>>,
    /// Component vertices ordered by (dist, id).
    order: Vec<VertexId>,
    had_ties: bool,
}

impl ShortestPathTree {
    pub fn parent(&self, v: VertexId) -> Option<(VertexId, EdgeId)> {
        self.parent[v]
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v]
    }

    pub fn dist(&self, v: VertexId) -> Option<&Rat> {
        self.dist[v].as_ref()
    }

    pub fn hops(&self, v: VertexId) -> Option<usize> {
        (self.hops[v] != usize::MAX).then_some(self.hops[v])
    }

    /// Max distance from `v` down to any descendant in the tree; zero at
    /// leaves, `None` for vertices outside the source component.
    pub fn reach(&self, v: VertexId) -> Option<&Rat> {
        self.reach[v].as_ref()
    }

    pub fn had_ties(&self) -> bool {
        self.had_ties
    }

    /// Component vertices in (dist, id) order, source first.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn in_component(&self, v: VertexId) -> bool {
        self.dist[v].is_some()
    }

    /// Canonical path from the source to `v`.
    pub fn path_to(&self, v: VertexId) -> Option<PathRecord> {
        self.dist[v].as_ref()?;
        let mut rev = vec![v];
        let mut cur = v;
        while let Some((p, _)) = self.parent[cur] {
            rev.push(p);
            cur = p;
        }
        rev.reverse();
        Some(PathRecord { vertices: rev, length: self.dist[v].clone().unwrap() })
    }

    /// Tree leaves (no children) within the source component.
    pub fn leaf_count(&self) -> usize {
        self.order
            .iter()
            .filter(|&&v| self.children[v].is_empty())
            .count()
    }
}
