//! Vertex cover: exact branching, breadth-first search over cover-weight
//! floors under a density promise, and greedy completion.
//!
//! Vertices are `0..n` internally; the DIMACS edge format is 1-based.

use std::fmt::Write as _;

use log::debug;
use serde::Serialize;
use thiserror::Error;

use crate::analysis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph input: {0}")]
    MalformedGraph(String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoverError {
    #[error("no cover of size ≤ {k} found: the promise ε = {epsilon} does not hold")]
    PromiseViolated { k: usize, epsilon: f64 },
    #[error("epsilon {0} must lie in (0, 1]")]
    InvalidEpsilon(f64),
    #[error("node cap of {0} exceeded")]
    NodeCapExceeded(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    num_edges: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            num_edges: 0,
        }
    }

    /// Builds a graph from 0-based edges; duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.num_vertices();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
            self.num_edges += 1;
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn is_cover(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.num_vertices()];
        for &v in set {
            inside[v] = true;
        }
        self.edges().iter().all(|&(u, v)| inside[u] || inside[v])
    }
}

/// Parses `p edge n m` / `e u v` text with `c` comment lines.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    for (lineno, line) in text.lines().enumerate() {
        let mut tok = line.split_whitespace();
        let bad = |what: &str| GraphError::MalformedGraph(format!("line {}: {what}", lineno + 1));
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return Err(bad("duplicate header"));
                }
                if tok.next() != Some("edge") {
                    return Err(bad("expected `p edge n m`"));
                }
                let n: usize = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad("vertex count"))?;
                tok.next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| bad("edge count"))?;
                graph = Some(Graph::new(n));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or_else(|| bad("edge before header"))?;
                let mut end = || -> Result<usize, GraphError> {
                    match tok.next().and_then(|t| t.parse::<usize>().ok()) {
                        Some(v) if v >= 1 => Ok(v - 1),
                        _ => Err(bad("expected 1-based vertex")),
                    }
                };
                let (u, v) = (end()?, end()?);
                g.add_edge(u, v)?;
            }
            Some(other) => return Err(bad(&format!("unexpected token `{other}`"))),
        }
    }
    graph.ok_or_else(|| GraphError::MalformedGraph("missing `p edge` header".into()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.num_vertices(), g.num_edges());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("string write");
    }
    out
}

/// `ρ = τ(1, 3)`.
pub fn vc_branching_number() -> f64 {
    analysis::branching_number(&[1.0, 3.0]).expect("valid vector")
}

/// A residual graph: the original minus removed vertices.
#[derive(Debug, Clone)]
struct Residual<'g> {
    g: &'g Graph,
    removed: Vec<bool>,
}

impl<'g> Residual<'g> {
    fn new(g: &'g Graph) -> Self {
        Residual {
            g,
            removed: vec![false; g.num_vertices()],
        }
    }

    fn degree(&self, v: usize) -> usize {
        if self.removed[v] {
            return 0;
        }
        self.g.adj[v].iter().filter(|&&u| !self.removed[u]).count()
    }

    fn live_neighbors(&self, v: usize) -> Vec<usize> {
        self.g.adj[v]
            .iter()
            .copied()
            .filter(|&u| !self.removed[u])
            .collect()
    }

    /// Max-degree vertex, lowest index on ties.
    fn max_degree(&self) -> (usize, usize) {
        (0..self.g.num_vertices())
            .map(|v| (v, self.degree(v)))
            .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best })
    }

    fn remove(&mut self, v: usize) {
        self.removed[v] = true;
    }

    /// Exact minimum cover when every degree is at most 2.
    fn solve_paths_and_cycles(&self) -> Vec<usize> {
        let n = self.g.num_vertices();
        let mut seen = vec![false; n];
        let mut cover = Vec::new();
        let walk = |start: usize, seen: &mut Vec<bool>| -> Vec<usize> {
            let mut order = vec![start];
            seen[start] = true;
            let mut cur = start;
            loop {
                let next = self
                    .live_neighbors(cur)
                    .into_iter()
                    .find(|&u| !seen[u]);
                match next {
                    Some(u) => {
                        seen[u] = true;
                        order.push(u);
                        cur = u;
                    }
                    None => return order,
                }
            }
        };
        // Paths first, from their lower endpoint.
        for v in 0..n {
            if !seen[v] && self.degree(v) == 1 {
                let path = walk(v, &mut seen);
                cover.extend(path.iter().skip(1).step_by(2));
            }
        }
        for v in 0..n {
            if !seen[v] && self.degree(v) == 2 {
                let cycle = walk(v, &mut seen);
                cover.extend(cycle.iter().step_by(2));
            }
        }
        cover.sort_unstable();
        cover
    }
}

/// Search statistics for [`vc_branch_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BranchStats {
    pub nodes: u64,
}

/// A vertex cover of size at most `k`, or `None`.
pub fn vc_branch(g: &Graph, k: usize) -> Option<Vec<usize>> {
    vc_branch_with_stats(g, k).0
}

pub fn vc_branch_with_stats(g: &Graph, k: usize) -> (Option<Vec<usize>>, BranchStats) {
    let mut stats = BranchStats::default();
    let r = Residual::new(g);
    let out = branch(&r, k, &mut stats).map(|mut c| {
        c.sort_unstable();
        c
    });
    if let Some(c) = &out {
        assert!(g.is_cover(c) && c.len() <= k);
    }
    (out, stats)
}

fn branch(r: &Residual<'_>, budget: usize, stats: &mut BranchStats) -> Option<Vec<usize>> {
    stats.nodes += 1;
    let (v, d) = r.max_degree();
    if d == 0 {
        return Some(Vec::new());
    }
    if budget == 0 {
        return None;
    }
    if d <= 2 {
        let c = r.solve_paths_and_cycles();
        return (c.len() <= budget).then_some(c);
    }
    let mut take_v = r.clone();
    take_v.remove(v);
    if let Some(mut c) = branch(&take_v, budget - 1, stats) {
        c.push(v);
        return Some(c);
    }
    let ns = r.live_neighbors(v);
    if ns.len() > budget {
        return None;
    }
    let mut take_n = r.clone();
    take_n.remove(v);
    ns.iter().for_each(|&u| take_n.remove(u));
    branch(&take_n, budget - ns.len(), stats).map(|mut c| {
        c.extend(ns);
        c
    })
}

/// A minimum vertex cover, by increasing the budget.
pub fn vc_min(g: &Graph) -> Vec<usize> {
    (0..=g.num_vertices())
        .find_map(|k| vc_branch(g, k))
        .expect("all vertices form a cover")
}

/// Completes `partial` by repeatedly adding a maximum-degree endpoint of an
/// uncovered edge. Fails when the result would exceed `k`.
pub fn greedy_complete(g: &Graph, partial: &[usize], k: usize) -> Option<Vec<usize>> {
    let mut r = Residual::new(g);
    let mut cover = partial.to_vec();
    partial.iter().for_each(|&v| r.remove(v));
    loop {
        let (v, d) = r.max_degree();
        if d == 0 {
            break;
        }
        if cover.len() >= k {
            return None;
        }
        r.remove(v);
        cover.push(v);
    }
    cover.sort_unstable();
    assert!(g.is_cover(&cover));
    (cover.len() <= k).then_some(cover)
}

#[derive(Debug, Clone)]
struct CoverNode<'g> {
    residual: Residual<'g>,
    chosen: Vec<usize>,
    /// Solved exactly; no further branching.
    terminal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PromiseReport {
    pub cover: Vec<usize>,
    /// Floor at which the search returned.
    pub floor: usize,
    pub census: Vec<usize>,
    pub greedy: bool,
    /// `ln(1/ε)/ln(n/(ρk))`, when defined.
    pub l_star: Option<f64>,
    pub rho: f64,
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

/// `ℓ* = ln(1/ε) / ln(n/(ρk))` if `k < n/ρ`.
pub fn l_star(n: usize, k: usize, epsilon: f64) -> Option<f64> {
    let rho = vc_branching_number();
    let ratio = n as f64 / (rho * k as f64);
    (k > 0 && ratio > 1.0).then(|| (1.0 / epsilon).ln() / ratio.ln())
}

/// Breadth-first search over cover-weight floors, stopping once
/// `ρ^ℓ·C(n−ℓ, k−ℓ) < ε·C(n, k)` and completing the open nodes greedily.
pub fn vc_bfs_promise(g: &Graph, k: usize, epsilon: f64) -> Result<PromiseReport, CoverError> {
    vc_bfs_promise_capped(g, k, epsilon, usize::MAX)
}

pub fn vc_bfs_promise_capped(
    g: &Graph,
    k: usize,
    epsilon: f64,
    node_cap: usize,
) -> Result<PromiseReport, CoverError> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(CoverError::InvalidEpsilon(epsilon));
    }
    let n = g.num_vertices();
    let rho = vc_branching_number();
    let target = epsilon.ln() + ln_binomial(n, k);
    let mut floors: Vec<Vec<CoverNode<'_>>> = vec![Vec::new(); k + 1];
    floors[0].push(CoverNode {
        residual: Residual::new(g),
        chosen: Vec::new(),
        terminal: false,
    });
    let mut stored = 1usize;
    let mut census = Vec::new();
    let report = |cover: Vec<usize>, floor: usize, census: &[usize], greedy: bool| {
        let mut cover = cover;
        cover.sort_unstable();
        assert!(g.is_cover(&cover) && cover.len() <= k);
        PromiseReport {
            cover,
            floor,
            census: census.to_vec(),
            greedy,
            l_star: l_star(n, k, epsilon),
            rho,
        }
    };
    for l in 0..=k {
        let floor = std::mem::take(&mut floors[l]);
        census.push(floor.len());
        assert!(
            floor.len() as f64 <= rho.powi(l as i32) * (1.0 + 1e-9),
            "floor {l} holds {} nodes",
            floor.len()
        );
        if let Some(node) = floor.iter().find(|nd| nd.residual.max_degree().1 == 0) {
            return Ok(report(node.chosen.clone(), l, &census, false));
        }
        let remaining = l as f64 * rho.ln() + ln_binomial(n - l.min(n), k - l);
        if remaining < target {
            debug!("stopping at floor {l}: remaining-cover bound below promise");
            let open = floor.iter().chain(floors[l + 1..].iter().flatten());
            for node in open {
                if let Some(c) = greedy_complete(g, &node.chosen, k) {
                    return Ok(report(c, l, &census, true));
                }
            }
            return Err(CoverError::PromiseViolated { k, epsilon });
        }
        for node in floor {
            if node.terminal {
                continue;
            }
            let (v, d) = node.residual.max_degree();
            let mut children = Vec::new();
            if d <= 2 {
                let extra = node.residual.solve_paths_and_cycles();
                let mut residual = node.residual.clone();
                extra.iter().for_each(|&u| residual.remove(u));
                let mut chosen = node.chosen.clone();
                chosen.extend(extra);
                children.push(CoverNode {
                    residual,
                    chosen,
                    terminal: true,
                });
            } else {
                let mut with_v = node.residual.clone();
                with_v.remove(v);
                let mut chosen = node.chosen.clone();
                chosen.push(v);
                children.push(CoverNode {
                    residual: with_v,
                    chosen,
                    terminal: false,
                });
                let ns = node.residual.live_neighbors(v);
                let mut with_n = node.residual.clone();
                with_n.remove(v);
                ns.iter().for_each(|&u| with_n.remove(u));
                let mut chosen = node.chosen.clone();
                chosen.extend(ns);
                children.push(CoverNode {
                    residual: with_n,
                    chosen,
                    terminal: false,
                });
            }
            for child in children {
                let w = child.chosen.len();
                if w <= k {
                    stored += 1;
                    if stored > node_cap {
                        return Err(CoverError::NodeCapExceeded(node_cap));
                    }
                    floors[w].push(child);
                }
            }
        }
    }
    Err(CoverError::PromiseViolated { k, epsilon })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn branch_examples() {
        assert_eq!(vc_branch(&triangle(), 1), None);
        let c = vc_branch(&triangle(), 2).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(vc_branch(&star(4), 1), Some(vec![0]));
        assert_eq!(vc_branch(&Graph::new(3), 0), Some(vec![]));
    }

    #[test]
    fn paths_and_cycles() {
        for p in 2..9 {
            let path: Vec<_> = (0..p - 1).map(|i| (i, i + 1)).collect();
            let g = Graph::from_edges(p, &path).unwrap();
            assert_eq!(vc_min(&g).len(), p / 2);
            let mut cyc = path.clone();
            if p >= 3 {
                cyc.push((p - 1, 0));
                let g = Graph::from_edges(p, &cyc).unwrap();
                assert_eq!(vc_min(&g).len(), p.div_ceil(2));
            }
        }
    }

    #[test]
    fn rho_value() {
        assert!((vc_branching_number() - 1.465571).abs() < 1e-6);
    }

    #[test]
    fn parse_and_write() {
        let g = parse_graph("c path\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert!(matches!(parse_graph("e 1 2"), Err(GraphError::MalformedGraph(_))));
        assert_eq!(parse_graph("p edge 2 1\ne 1 1"), Err(GraphError::SelfLoop(0)));
        assert!(matches!(
            parse_graph("p edge 2 1\ne 1 3"),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_complete(&star(5), &[], 1), Some(vec![0]));
        assert_eq!(greedy_complete(&triangle(), &[], 1), None);
        assert_eq!(greedy_complete(&triangle(), &[2], 2).map(|c| c.len()), Some(2));
    }

    #[test]
    fn promise_on_empty_graph() {
        let r = vc_bfs_promise(&Graph::new(5), 2, 1.0).unwrap();
        assert!(r.cover.is_empty());
        assert_eq!(r.floor, 0);
        assert_eq!(l_star(5, 2, 1.0), Some(0.0));
    }

    #[test]
    fn promise_on_star() {
        // every 2-set containing the center: 5 of C(6,2) = 15
        let r = vc_bfs_promise(&star(5), 2, 5.0 / 15.0).unwrap();
        assert!(star(5).is_cover(&r.cover));
        assert!(r.cover.len() <= 2);
    }

    #[test]
    fn promise_violation_reported() {
        assert!(matches!(
            vc_bfs_promise(&triangle(), 1, 0.5),
            Err(CoverError::PromiseViolated { .. })
        ));
        assert!(vc_bfs_promise(&triangle(), 1, 0.0).is_err());
    }
}
