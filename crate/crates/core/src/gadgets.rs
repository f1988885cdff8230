//! Deterministic generators for the gadget graphs, each tagged with the
//! machine-checkable claims it witnesses.

use std::collections::BTreeMap;

use num::One;

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::highway::HdTag;
use crate::hitting::min_vertex_cover;
use crate::params::max_leaf_number;
use crate::rational::{rat, rat_int, Rat};

/// Parameters a gadget claim can reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Kappa,
    MaxLeaf,
    Bandwidth,
    Pathwidth,
    Treewidth,
    LinearForest,
    HIndex,
    DoublingConst,
    Hd1,
    Hd2,
    Hd3,
}

impl ParamKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParamKind::Kappa => "kappa",
            ParamKind::MaxLeaf => "ml",
            ParamKind::Bandwidth => "bw",
            ParamKind::Pathwidth => "pw",
            ParamKind::Treewidth => "tw",
            ParamKind::LinearForest => "dl",
            ParamKind::HIndex => "hindex",
            ParamKind::DoublingConst => "doubling",
            ParamKind::Hd1 => "hd1",
            ParamKind::Hd2 => "hd2",
            ParamKind::Hd3 => "hd3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Le,
    Ge,
}

impl Rel {
    pub fn as_str(self) -> &'static str {
        match self {
            Rel::Eq => "=",
            Rel::Le => "<=",
            Rel::Ge => ">=",
        }
    }

    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Rel::Eq => lhs == rhs,
            Rel::Le => lhs <= rhs,
            Rel::Ge => lhs >= rhs,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Claim {
    /// `param rel value` on this gadget.
    Param { param: ParamKind, rel: Rel, value: i64 },
    IsMetric { expected: bool },
    /// The minimum hitting set of one anchored highway instance.
    AnchoredHittingSet { tag: HdTag, anchor: VertexId, radius: Rat, rel: Rel, value: i64 },
}

#[derive(Debug, Clone)]
pub struct GadgetSpec {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub variant: Option<String>,
    pub claims: Vec<Claim>,
}

#[derive(Debug, Clone)]
pub struct Gadget {
    pub graph: WeightedGraph,
    pub spec: GadgetSpec,
}

fn spec(family: &str, params: &[(&str, String)], variant: Option<&str>, claims: Vec<Claim>) -> GadgetSpec {
    GadgetSpec {
        family: family.to_string(),
        params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        variant: variant.map(str::to_string),
        claims,
    }
}

/// Star on `n` vertices (center 0, unit weights).
pub fn star(n: usize) -> Result<Gadget> {
    if n < 2 {
        return Err(Error::InvalidParameter("star needs n >= 2".into()));
    }
    let edges: Vec<(usize, usize, Rat)> = (1..n).map(|v| (0, v, Rat::one())).collect();
    let graph = WeightedGraph::from_dense(n, &edges)?;
    let mut claims = vec![
        Claim::Param { param: ParamKind::Kappa, rel: Rel::Eq, value: (n - 1) as i64 },
        Claim::Param { param: ParamKind::Treewidth, rel: Rel::Eq, value: 1 },
        Claim::Param { param: ParamKind::Bandwidth, rel: Rel::Eq, value: (n / 2) as i64 },
        Claim::Param { param: ParamKind::Hd1, rel: Rel::Eq, value: 1 },
    ];
    if n >= 4 {
        claims.push(Claim::Param { param: ParamKind::LinearForest, rel: Rel::Eq, value: 1 });
    }
    Ok(Gadget { graph, spec: spec("star", &[("n", n.to_string())], None, claims) })
}

/// Star with `l` spokes, every spoke subdivided once, unit weights.
pub fn subdivided_star(l: usize) -> Result<Gadget> {
    if l < 1 {
        return Err(Error::InvalidParameter("subdivided star needs l >= 1".into()));
    }
    let mut edges: Vec<(usize, usize, Rat)> = Vec::with_capacity(2 * l);
    for i in 0..l {
        let mid = 1 + 2 * i;
        let leaf = 2 + 2 * i;
        edges.push((0, mid, Rat::one()));
        edges.push((mid, leaf, Rat::one()));
    }
    let graph = WeightedGraph::from_dense(2 * l + 1, &edges)?;
    let mut claims = vec![Claim::Param { param: ParamKind::Hd2, rel: Rel::Eq, value: l as i64 }];
    if l >= 3 {
        claims.push(Claim::Param { param: ParamKind::LinearForest, rel: Rel::Eq, value: 1 });
    }
    Ok(Gadget { graph, spec: spec("subdivided-star", &[("l", l.to_string())], None, claims) })
}

/// Complete graph on vertices 1..n (stored as 0..n-1) with edge weights
/// 4^max(i, j) in the 1-based numbering.
pub fn complete_graph_exp_weights(n: usize) -> Result<Gadget> {
    if n < 2 {
        return Err(Error::InvalidParameter("complete graph needs n >= 2".into()));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = num::pow::pow(rat_int(4), j + 1);
            edges.push((i, j, w));
        }
    }
    let graph = WeightedGraph::from_dense(n, &edges)?;
    let mut claims = vec![
        Claim::Param { param: ParamKind::Hd1, rel: Rel::Eq, value: 1 },
        Claim::Param { param: ParamKind::Treewidth, rel: Rel::Eq, value: (n - 1) as i64 },
        Claim::Param { param: ParamKind::Bandwidth, rel: Rel::Eq, value: (n - 1) as i64 },
    ];
    if n >= 3 {
        claims.push(Claim::Param { param: ParamKind::MaxLeaf, rel: Rel::Eq, value: (n - 1) as i64 });
    }
    Ok(Gadget {
        graph,
        spec: spec("complete-exp", &[("n", n.to_string())], None, claims),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaterpillarVariant {
    /// Backbone edges 1/n, other edges 1: linear hd2 lower bound.
    Hd2LowerBound,
    /// Backbone edges 1, remaining weights equalizing leaf distances:
    /// skeleton dimension equals the leaf count.
    SkeletonBandwidth,
    /// Backbone edges 2, other edges 1: skeleton dimension three.
    SkeletonThree,
    /// Backbone edges 5, other edges 1: constant hd1.
    Hd1Constant,
}

impl CaterpillarVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            CaterpillarVariant::Hd2LowerBound => "hd2-lb",
            CaterpillarVariant::SkeletonBandwidth => "skel-bw",
            CaterpillarVariant::SkeletonThree => "skel-3",
            CaterpillarVariant::Hd1Constant => "hd1-const",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "hd2-lb" => Ok(Self::Hd2LowerBound),
            "skel-bw" => Ok(Self::SkeletonBandwidth),
            "skel-3" => Ok(Self::SkeletonThree),
            "hd1-const" => Ok(Self::Hd1Constant),
            other => Err(Error::InvalidParameter(format!("unknown caterpillar variant `{other}`"))),
        }
    }
}

/// Caterpillar on b backbone vertices of degree three: a spine
/// e0 c_1 ... c_b e1 with one pendant leaf per c_i; n = 2b + 2.
///
/// Vertex ids: e0 = 0, c_i = i (1..=b), e1 = b + 1, leaf of c_i = b + 1 + i.
/// "Backbone edges" are the spine edges between two backbone vertices
/// c_i c_{i+1}; spine-end and leaf edges count as non-backbone.
pub fn caterpillar(b: usize, variant: CaterpillarVariant) -> Result<Gadget> {
    if b < 1 {
        return Err(Error::InvalidParameter("caterpillar needs b >= 1".into()));
    }
    let n = 2 * b + 2;
    let e0 = 0usize;
    let e1 = b + 1;
    let c = |i: usize| i; // 1-based
    let leaf = |i: usize| b + 1 + i;

    let backbone_weight = match variant {
        CaterpillarVariant::Hd2LowerBound => rat(1, n as i64),
        CaterpillarVariant::SkeletonBandwidth => Rat::one(),
        CaterpillarVariant::SkeletonThree => rat_int(2),
        CaterpillarVariant::Hd1Constant => rat_int(5),
    };
    // Off-backbone weights: for skel-bw all leaves of the tree must end up
    // at one common distance d from c_1; the cut radius must clear every
    // branching point, so d is twice the deepest attachment distance plus
    // two. Elsewhere they are unit.
    let attach_dist = |i: usize| -> Rat {
        // Distance from c_1 to c_i along unit backbone edges.
        rat_int(i as i64 - 1)
    };
    let d_eq = rat_int(2 * b as i64);
    let off_weight = |attach: usize| -> Rat {
        match variant {
            CaterpillarVariant::SkeletonBandwidth => &d_eq - attach_dist(attach),
            _ => Rat::one(),
        }
    };

    let mut edges: Vec<(usize, usize, Rat)> = Vec::new();
    edges.push((e0, c(1), off_weight(1)));
    for i in 1..b {
        edges.push((c(i), c(i + 1), backbone_weight.clone()));
    }
    edges.push((c(b), e1, off_weight(b)));
    for i in 1..=b {
        edges.push((c(i), leaf(i), off_weight(i)));
    }
    let graph = WeightedGraph::from_dense(n, &edges)?;

    let mut claims = vec![Claim::Param { param: ParamKind::Bandwidth, rel: Rel::Eq, value: 2 }];
    match variant {
        CaterpillarVariant::Hd2LowerBound => {
            claims.push(Claim::Param { param: ParamKind::Hd2, rel: Rel::Ge, value: b as i64 });
        }
        CaterpillarVariant::SkeletonBandwidth => {
            claims.push(Claim::Param {
                param: ParamKind::Kappa,
                rel: Rel::Eq,
                value: (b + 2) as i64,
            });
        }
        CaterpillarVariant::SkeletonThree => {
            claims.push(Claim::Param { param: ParamKind::Kappa, rel: Rel::Eq, value: 3 });
        }
        CaterpillarVariant::Hd1Constant => {
            claims.push(Claim::Param { param: ParamKind::Hd1, rel: Rel::Le, value: 7 });
        }
    }
    Ok(Gadget {
        graph,
        spec: spec(
            "caterpillar",
            &[("b", b.to_string())],
            Some(variant.as_str()),
            claims,
        ),
    })
}

/// Complete binary tree with 2d+1 levels; an edge between level j and
/// level j+1 weighs 3^-j. Heap indexing: children of v are 2v+1, 2v+2.
pub fn binary_tree_geometric(d: usize) -> Result<Gadget> {
    if d < 1 {
        return Err(Error::InvalidParameter("geometric binary tree needs d >= 1".into()));
    }
    let levels = 2 * d + 1;
    let n = (1usize << levels) - 1;
    let mut edges = Vec::with_capacity(n - 1);
    for v in 1..n {
        let parent = (v - 1) / 2;
        let level_of_parent = (usize::BITS - (parent + 1).leading_zeros() - 1) as usize;
        let w = num::pow::pow(rat(1, 3), level_of_parent);
        edges.push((parent, v, w));
    }
    let graph = WeightedGraph::from_dense(n, &edges)?;
    let claims = vec![
        Claim::Param { param: ParamKind::Kappa, rel: Rel::Le, value: 3 },
        Claim::Param { param: ParamKind::Pathwidth, rel: Rel::Eq, value: d as i64 },
        Claim::Param { param: ParamKind::Treewidth, rel: Rel::Eq, value: 1 },
    ];
    Ok(Gadget { graph, spec: spec("binary-tree", &[("d", d.to_string())], None, claims) })
}

/// The q x q grid with every grid edge subdivided twice and a row-major
/// path P over the original grid vertices. P edges weigh 1; a subdivided
/// grid edge u x y v carries weights 1, dist_P(u, v) + 1/2, 1.
pub fn subdivided_grid(q: usize) -> Result<Gadget> {
    if q < 2 {
        return Err(Error::InvalidParameter("subdivided grid needs q >= 2".into()));
    }
    let gid = |r: usize, c: usize| r * q + c;
    let mut edges: Vec<(usize, usize, Rat)> = Vec::new();
    for k in 0..(q * q - 1) {
        edges.push((k, k + 1, Rat::one()));
    }
    let mut next = q * q;
    let mut grid_edges: Vec<(usize, usize)> = Vec::new();
    for r in 0..q {
        for c in 0..q {
            if c + 1 < q {
                grid_edges.push((gid(r, c), gid(r, c + 1)));
            }
            if r + 1 < q {
                grid_edges.push((gid(r, c), gid(r + 1, c)));
            }
        }
    }
    for &(u, v) in &grid_edges {
        let x = next;
        let y = next + 1;
        next += 2;
        let dist_p = rat_int((v as i64 - u as i64).abs());
        edges.push((u, x, Rat::one()));
        edges.push((x, y, dist_p + rat(1, 2)));
        edges.push((y, v, Rat::one()));
    }
    let graph = WeightedGraph::from_dense(next, &edges)?;
    let claims = vec![
        Claim::IsMetric { expected: true },
        Claim::Param { param: ParamKind::Kappa, rel: Rel::Le, value: 10 },
        Claim::Param { param: ParamKind::Hd2, rel: Rel::Ge, value: q as i64 },
        Claim::AnchoredHittingSet {
            tag: HdTag::Hd2,
            anchor: 0,
            radius: rat_int(q as i64),
            rel: Rel::Ge,
            value: q as i64,
        },
    ];
    Ok(Gadget { graph, spec: spec("subdivided-grid", &[("q", q.to_string())], None, claims) })
}

/// Weights a connected unweighted graph so that its skeleton dimension
/// matches its max leaf number: tree edges weigh 2 at tree leaves and 1/n
/// inside; non-tree edges weigh 5, or dist_T - epsilon in the metric
/// variant. Distinct epsilons keep every non-tree edge a strict shortest
/// path:  epsilon = (h^2 + k/J) * delta for tree-hop count h, edge index k,
/// which dominates the epsilon sum of any proper tiling by shorter
/// shortcuts.
pub fn spanning_tree_tight_weights(g: &WeightedGraph, metric: bool) -> Result<Gadget> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter("tight weighting needs n >= 3".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n() as i64;
    let m = g.m() as i64;
    let (ml, tree) = max_leaf_number(g, crate::params::MAX_LEAF_CAP)?;

    let mut tree_deg = vec![0usize; g.n()];
    let mut in_tree = vec![false; g.m()];
    for &e in &tree {
        in_tree[e] = true;
        tree_deg[g.edge(e).u] += 1;
        tree_deg[g.edge(e).v] += 1;
    }
    let is_leaf = |v: VertexId| tree_deg[v] == 1;

    let tree_weight = |e: usize| -> Rat {
        let edge = g.edge(e);
        if is_leaf(edge.u) || is_leaf(edge.v) {
            rat_int(2)
        } else {
            rat(1, n)
        }
    };

    // Weighted tree distances and hop counts via BFS on the tree.
    let tree_adj: Vec<Vec<(VertexId, usize)>> = {
        let mut adj = vec![Vec::new(); g.n()];
        for &e in &tree {
            let edge = g.edge(e);
            adj[edge.u].push((edge.v, e));
            adj[edge.v].push((edge.u, e));
        }
        adj
    };
    let tree_dist_hops = |s: VertexId| -> (Vec<Rat>, Vec<usize>) {
        let mut dist = vec![Rat::one(); g.n()];
        let mut hops = vec![0usize; g.n()];
        let mut seen = vec![false; g.n()];
        let mut queue = std::collections::VecDeque::from([s]);
        seen[s] = true;
        dist[s] = rat_int(0);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &tree_adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    dist[w] = &dist[v] + &tree_weight(e);
                    hops[w] = hops[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        (dist, hops)
    };

    let delta = rat(1, n.pow(4) * (m + 1));
    let j_scale = rat_int(m * (m + 1) / 2 + 1);

    let mut edges: Vec<(usize, usize, Rat)> = Vec::with_capacity(g.m());
    let mut nontree_index = 0i64;
    for (id, edge) in g.edges().iter().enumerate() {
        let w = if in_tree[id] {
            tree_weight(id)
        } else if !metric {
            rat_int(5)
        } else {
            nontree_index += 1;
            let (dist, hops) = tree_dist_hops(edge.u);
            let h = rat_int(hops[edge.v] as i64);
            let eps = (&h * &h + rat_int(nontree_index) / &j_scale) * &delta;
            &dist[edge.v] - &eps
        };
        edges.push((edge.u, edge.v, w));
    }
    let graph = WeightedGraph::from_dense(g.n(), &edges)?;

    let mut claims =
        vec![Claim::Param { param: ParamKind::Kappa, rel: Rel::Eq, value: ml as i64 }];
    if metric {
        claims.push(Claim::IsMetric { expected: true });
    } else if g.m() > g.n() - 1 {
        claims.push(Claim::IsMetric { expected: false });
    }
    Ok(Gadget {
        graph,
        spec: spec(
            "tight-weights",
            &[("n", g.n().to_string()), ("ml", ml.to_string())],
            Some(if metric { "metric" } else { "plain" }),
            claims,
        ),
    })
}

/// The hd3 hardness reduction: add a hub x and a pendant v* per original
/// vertex, edges {v, v*} weight 1 and {v*, x} weight 5; original edges
/// weigh 1. Requires max degree <= 3. Vertex ids: originals keep 0..n-1,
/// v* = n + v, x = 2n.
pub fn vc_reduction(g: &WeightedGraph) -> Result<Gadget> {
    if g.max_degree() > 3 {
        return Err(Error::InvalidParameter("vc reduction needs max degree <= 3".into()));
    }
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter("vc reduction needs n >= 2".into()));
    }
    let cover = min_vertex_cover(g, 24)?;
    let mut edges: Vec<(usize, usize, Rat)> = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v, Rat::one()))
        .collect();
    for v in 0..n {
        edges.push((v, n + v, Rat::one()));
        edges.push((n + v, 2 * n, rat_int(5)));
    }
    let graph = WeightedGraph::from_dense(2 * n + 1, &edges)?;
    let expected = (cover.len() + n + 1) as i64;
    let claims = vec![Claim::AnchoredHittingSet {
        tag: HdTag::Hd3,
        anchor: 2 * n,
        radius: rat(5, 2),
        rel: Rel::Eq,
        value: expected,
    }];
    Ok(Gadget {
        graph,
        spec: spec(
            "vc-reduction",
            &[("n", n.to_string()), ("min_vc", cover.len().to_string())],
            None,
            claims,
        ),
    })
}
