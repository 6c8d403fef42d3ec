//! Deterministic generators for the graph families used throughout the crate.
//!
//! Vertex numbering is part of each generator's contract:
//!
//! * `path(n)`: `0 - 1 - ... - (n-1)`.
//! * `cycle(n)`: the path plus the edge `0 - (n-1)`.
//! * `star(n)`: `K_{1,n}` with center `0` and leaves `1..=n`.
//! * `complete_multipartite(sizes)`: parts are consecutive index ranges in
//!   the order given.
//! * `perfect_mary_tree(m, h)`: breadth-first by level, root `0`; the
//!   children of `v` are `m*v + 1 ..= m*v + m`.
//! * `hypercube(d)`: vertex `x` is the binary label with value `x`.
//! * `cartesian_product(g, h)`: vertex `(a, b)` is `a * |h| + b`.
//! * `grid(r, c)`: row-major, `(i, j)` (0-based) is `i * c + j`.
//! * `fig2_h()`: root `0`, middle vertices `1, 2, 3`, their children
//!   `4, 5, 6`, leaves `7..=12` (`4 -> 7, 8`, `5 -> 9, 10`, `6 -> 11, 12`).
//! * `random_tree(n, seed)`: decoded from a seeded Prüfer sequence.
//! * `interval_graph(intervals)`: vertex `i` is interval `i`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: &'static str, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GenError {
    GenError::InvalidParams { family, reason: reason.into() }
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(invalid("path", "n must be at least 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(invalid("cycle", "n must be at least 3"));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Ok(Graph::from_edges(n, &edges)?)
}

/// `K_{1,n}`.
pub fn star(leaves: usize) -> Result<Graph, GenError> {
    if leaves == 0 {
        return Err(invalid("star", "need at least one leaf"));
    }
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Ok(Graph::from_edges(leaves + 1, &edges)?)
}

pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GenError> {
    if sizes.len() < 2 || sizes.contains(&0) {
        return Err(invalid("complete_multipartite", "need at least two non-empty parts"));
    }
    let mut part = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let n = part.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Number of vertices of the perfect `m`-ary tree of height `h`.
pub fn mary_tree_order(m: usize, h: usize) -> usize {
    (0..=h).map(|i| m.pow(i as u32)).sum()
}

pub fn perfect_mary_tree(m: usize, h: usize) -> Result<Graph, GenError> {
    if m < 1 {
        return Err(invalid("perfect_mary_tree", "m must be at least 1"));
    }
    let n = mary_tree_order(m, h);
    if n > 1 << 16 {
        return Err(invalid("perfect_mary_tree", format!("{n} vertices is too large")));
    }
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / m, v)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn hypercube(d: usize) -> Result<Graph, GenError> {
    if d > 12 {
        return Err(invalid("hypercube", "dimension must be at most 12"));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for x in 0..n {
        for b in 0..d {
            let y = x ^ (1 << b);
            if x < y {
                edges.push((x, y));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GenError> {
    let (gn, hn) = (g.n(), h.n());
    let mut edges = Vec::new();
    for a in 0..gn {
        for (b1, b2) in h.edges() {
            edges.push((a * hn + b1, a * hn + b2));
        }
    }
    for (a1, a2) in g.edges() {
        for b in 0..hn {
            edges.push((a1 * hn + b, a2 * hn + b));
        }
    }
    Ok(Graph::from_edges(gn * hn, &edges)?)
}

pub fn grid(rows: usize, cols: usize) -> Result<Graph, GenError> {
    if rows == 0 || cols == 0 {
        return Err(invalid("grid", "both sides must be positive"));
    }
    cartesian_product(&path(rows)?, &path(cols)?)
}

/// The 13-vertex tree with capture time 3 for one cop: a root with three
/// pendant paths of length two, each ending in a vertex with two leaves.
pub fn fig2_h() -> Graph {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 4),
        (2, 5),
        (3, 6),
        (4, 7),
        (4, 8),
        (5, 9),
        (5, 10),
        (6, 11),
        (6, 12),
    ];
    Graph::from_edges(13, &edges).expect("static tree is valid")
}

/// Decodes a Prüfer sequence over `0..n` into tree edges.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    assert_eq!(seq.len() + 2, n.max(2), "Prüfer sequence length must be n - 2");
    if n == 1 {
        return Vec::new();
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(invalid("random_tree", "n must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    let edges = if n == 1 { Vec::new() } else { prufer_decode(n, &seq) };
    Ok(Graph::from_edges(n, &edges)?)
}

/// A random spanning tree plus each remaining pair as an edge with
/// probability `p`; always connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return Err(invalid("random_connected", "need n >= 1 and 0 <= p <= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    let mut edges = if n == 1 { Vec::new() } else { prufer_decode(n, &seq) };
    let mut present = vec![false; n * n];
    for &(u, v) in &edges {
        present[u * n + v] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u * n + v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_edges(n, &edges)?)
}

/// A connected vertex set of the given size grown from a random start by
/// repeatedly adding a random neighbor of the set.
pub fn random_connected_subset(g: &Graph, size: usize, seed: u64) -> Result<VertexSet, GenError> {
    if size == 0 || size > g.n() || !g.is_connected_within(&g.all_vertices()) {
        return Err(invalid("random_connected_subset", "need a connected graph and 1 <= size <= n"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut set = VertexSet::singleton(g.n(), rng.gen_range(0..g.n()));
    while set.len() < size {
        let mut frontier = VertexSet::empty(g.n());
        for v in set.iter() {
            frontier.union_with(g.closed_neighborhood(v));
        }
        frontier.difference_with(&set);
        let choices = frontier.to_vec();
        set.insert(choices[rng.gen_range(0..choices.len())]);
    }
    Ok(set)
}

/// Canonical string of a tree: the nested-parenthesis code of the tree
/// rooted at its center, least over both centers when there are two.
pub fn tree_code(g: &Graph) -> String {
    fn code(g: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = g.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| code(g, w, v)).collect();
        kids.sort_unstable();
        format!("({})", kids.concat())
    }
    let ecc: Vec<u32> = (0..g.n()).map(|v| g.eccentricity(v)).collect();
    let r = ecc.iter().copied().min().unwrap_or(0);
    (0..g.n()).filter(|&v| ecc[v] == r).map(|c| code(g, c, usize::MAX)).min().unwrap_or_default()
}

/// One representative of every isomorphism class of trees on `n`
/// vertices, each built by attaching leaves in turn, ordered by code.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::from([(String::from("()"), Vec::new())]);
    for size in 1..n {
        let mut next = BTreeMap::new();
        for edges in level.values() {
            for v in 0..size {
                let mut e = edges.clone();
                e.push((v, size));
                let t = Graph::from_edges(size + 1, &e).expect("valid tree");
                next.entry(tree_code(&t)).or_insert(e);
            }
        }
        level = next;
    }
    level.values().map(|e| Graph::from_edges(n, e).expect("valid tree")).collect()
}

/// A closed interval `[left, right]` on the integer line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Interval {
    pub left: i64,
    pub right: i64,
}

impl Interval {
    pub fn new(left: i64, right: i64) -> Self {
        Interval { left: left.min(right), right: left.max(right) }
    }

    pub fn meets(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

pub fn interval_graph(intervals: &[Interval]) -> Result<Graph, GenError> {
    if intervals.is_empty() {
        return Err(invalid("interval_graph", "need at least one interval"));
    }
    let mut edges = Vec::new();
    for i in 0..intervals.len() {
        for j in i + 1..intervals.len() {
            if intervals[i].meets(&intervals[j]) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(intervals.len(), &edges)?)
}

/// A named family plus parameters; `build` is the single entry point used
/// by the command-line tool.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    PerfectMaryTree { m: usize, h: usize },
    Hypercube(usize),
    CartesianProduct(Box<Family>, Box<Family>),
    Grid(usize, usize),
    RandomTree { n: usize, seed: u64 },
    RandomConnected { n: usize, p: f64, seed: u64 },
    IntervalGraph(Vec<Interval>),
    Fig2H,
    /// Incidence graph of the prime-order projective plane `PG(2, q)`.
    Pg2(u64),
}

impl Family {
    pub fn build(&self) -> Result<Graph, GenError> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Star(n) => star(*n),
            Family::CompleteMultipartite(sizes) => complete_multipartite(sizes),
            Family::PerfectMaryTree { m, h } => perfect_mary_tree(*m, *h),
            Family::Hypercube(d) => hypercube(*d),
            Family::CartesianProduct(a, b) => cartesian_product(&a.build()?, &b.build()?),
            Family::Grid(r, c) => grid(*r, *c),
            Family::RandomTree { n, seed } => random_tree(*n, *seed),
            Family::RandomConnected { n, p, seed } => random_connected(*n, *p, *seed),
            Family::IntervalGraph(iv) => interval_graph(iv),
            Family::Fig2H => Ok(fig2_h()),
            Family::Pg2(q) => {
                let plane = crate::designs::build_pg2(*q).map_err(|e| invalid("pg2", e.to_string()))?;
                Ok(plane.incidence_graph())
            }
        }
    }

    /// Parses a family name and its textual parameters, e.g.
    /// `("star", ["5"])`, `("mary", ["3", "2"])`,
    /// `("cartesian_product", ["path:3", "cycle:4"])`,
    /// `("interval", ["0:1", "1:2"])`. Randomized families take `seed`.
    pub fn parse(name: &str, params: &[String], seed: Option<u64>) -> Result<Family, GenError> {
        let fam: &'static str = match name {
            "path" => "path",
            "cycle" => "cycle",
            "star" => "star",
            "complete_multipartite" | "kpartite" => "complete_multipartite",
            "perfect_mary_tree" | "mary" => "perfect_mary_tree",
            "hypercube" => "hypercube",
            "cartesian_product" | "product" => "cartesian_product",
            "grid" => "grid",
            "random_tree" => "random_tree",
            "random_connected" => "random_connected",
            "interval_graph" | "interval" => "interval_graph",
            "fig2_h" | "fig2" => "fig2_h",
            "pg2" | "projective" => "pg2",
            "heawood" => return Ok(Family::Pg2(2)),
            other => return Err(invalid("family", format!("unknown family `{other}`"))),
        };
        let ints = || -> Result<Vec<usize>, GenError> {
            params
                .iter()
                .map(|p| p.parse::<usize>().map_err(|_| invalid(fam, format!("not a non-negative integer: `{p}`"))))
                .collect()
        };
        let arity = |want: usize| -> Result<Vec<usize>, GenError> {
            let v = ints()?;
            if v.len() != want {
                return Err(invalid(fam, format!("expected {want} parameter(s), got {}", v.len())));
            }
            Ok(v)
        };
        let need_seed = || seed.ok_or_else(|| invalid(fam, "randomized family needs --seed"));
        Ok(match fam {
            "path" => Family::Path(arity(1)?[0]),
            "cycle" => Family::Cycle(arity(1)?[0]),
            "star" => Family::Star(arity(1)?[0]),
            "complete_multipartite" => Family::CompleteMultipartite(ints()?),
            "perfect_mary_tree" => {
                let v = arity(2)?;
                Family::PerfectMaryTree { m: v[0], h: v[1] }
            }
            "hypercube" => Family::Hypercube(arity(1)?[0]),
            "grid" => {
                let v = arity(2)?;
                Family::Grid(v[0], v[1])
            }
            "random_tree" => Family::RandomTree { n: arity(1)?[0], seed: need_seed()? },
            "random_connected" => {
                if params.len() != 2 {
                    return Err(invalid(fam, "expected `n p`"));
                }
                let n = params[0].parse().map_err(|_| invalid(fam, "bad n"))?;
                let p = params[1].parse().map_err(|_| invalid(fam, "bad p"))?;
                Family::RandomConnected { n, p, seed: need_seed()? }
            }
            "fig2_h" => {
                arity(0)?;
                Family::Fig2H
            }
            "pg2" => Family::Pg2(arity(1)?[0] as u64),
            "cartesian_product" => {
                if params.len() != 2 {
                    return Err(invalid(fam, "expected two factors like `path:3 cycle:4`"));
                }
                let factor = |s: &str| -> Result<Family, GenError> {
                    let mut parts = s.split(':');
                    let name = parts.next().unwrap_or("");
                    let rest: Vec<String> = parts.map(str::to_owned).collect();
                    Family::parse(name, &rest, seed)
                };
                Family::CartesianProduct(Box::new(factor(&params[0])?), Box::new(factor(&params[1])?))
            }
            "interval_graph" => {
                let iv = params
                    .iter()
                    .map(|p| {
                        let (l, r) = p.split_once(':').ok_or_else(|| invalid(fam, format!("expected `l:r`, got `{p}`")))?;
                        let l = l.parse().map_err(|_| invalid(fam, format!("bad endpoint `{l}`")))?;
                        let r = r.parse().map_err(|_| invalid(fam, format!("bad endpoint `{r}`")))?;
                        Ok(Interval::new(l, r))
                    })
                    .collect::<Result<Vec<_>, GenError>>()?;
                Family::IntervalGraph(iv)
            }
            _ => unreachable!(),
        })
    }
}
