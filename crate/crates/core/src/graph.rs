//! Simple connected graphs with a dense all-pairs distance table.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge endpoint {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex set is not a special subgraph")]
    NotSpecial,
}

impl GraphError {
    /// Stable short code, one per error kind.
    pub fn code(&self) -> &'static str {
        match self {
            GraphError::Empty => "empty",
            GraphError::VertexOutOfRange { .. } => "vertex_out_of_range",
            GraphError::SelfLoop(_) => "self_loop",
            GraphError::DuplicateEdge(..) => "duplicate_edge",
            GraphError::Disconnected { .. } => "disconnected",
            GraphError::Parse { .. } => "parse",
            GraphError::NotSpecial => "not_special",
        }
    }
}

/// An immutable simple, undirected, connected graph on vertices `0..n`.
///
/// Hop distances between every pair of vertices are computed once at
/// construction; `dist(u, v)` is a table lookup.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    dist: Vec<u32>,
    closed: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }

        let mut dist = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in &adj[u] {
                    if row[w] == u32::MAX {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        if dist[..n].contains(&u32::MAX) {
            return Err(GraphError::Disconnected { components: count_components(&adj) });
        }

        let closed = (0..n)
            .map(|v| VertexSet::from_vertices(n, adj[v].iter().copied().chain([v])))
            .collect();
        let edge_count = edges.len();
        Ok(Graph { n, adj, dist, closed, edge_count })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Row of the distance table: distances from `u` to every vertex.
    #[inline]
    pub fn dist_row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn closed_neighborhood(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.dist(u, v) == 1
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.dist_row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    pub fn radius(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).min().unwrap_or(0)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.n
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Whether the subgraph induced by `set` is connected (false for the empty set).
    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        let Some(start) = set.first() else { return false };
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if set.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == set.len()
    }

    /// The subgraph induced by `set`, relabelled `0..|set|` in increasing
    /// vertex order, together with the new-to-old vertex map.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        let old: Vec<usize> = set.to_vec();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .map(|(u, v)| (new_of[u], new_of[v]))
            .collect();
        Ok((Graph::from_edges(old.len(), &edges)?, old))
    }

    /// Parses the edge-list text format: a header line `n m`, then `m`
    /// lines `u v` with `u < v`. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_err = |line: usize, message: String| GraphError::Parse { line, message };

        let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n m`".into()))?;
        let nums = parse_pair(header).map_err(|m| parse_err(hline, m))?;
        let (n, m) = nums;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let (u, v) = parse_pair(l).map_err(|msg| parse_err(line, msg))?;
            if u >= v {
                return Err(parse_err(line, format!("expected u < v, got {u} {v}")));
            }
            if v >= n {
                return Err(parse_err(line, format!("vertex {v} out of range (n = {n})")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(parse_err(hline, format!("header declares {m} edges, found {}", edges.len())));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(format!("expected two integers, got `{line}`"));
    }
    let a = fields[0].parse().map_err(|_| format!("not a non-negative integer: `{}`", fields[0]))?;
    let b = fields[1].parse().map_err(|_| format!("not a non-negative integer: `{}`", fields[1]))?;
    Ok((a, b))
}

fn count_components(adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut components = 0;
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    components
}

/// Components of `G` after deleting the edges of `G[H]`, each returned
/// as its vertex set.
fn components_without_inner_edges(g: &Graph, h: &VertexSet) -> Vec<VertexSet> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut set = VertexSet::empty(n);
        comp[s] = id;
        set.insert(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if h.contains(u) && h.contains(w) {
                    continue;
                }
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    set.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(set);
    }
    out
}

/// Whether `h` induces a special subgraph of `g`: `G[H]` is connected and
/// every path in `G` between two vertices of `H` stays inside `H`.
///
/// Checked via the equivalent condition that deleting the edges of `G[H]`
/// leaves components each holding exactly one vertex of `H`.
pub fn is_special_subgraph(g: &Graph, h: &VertexSet) -> bool {
    if h.is_empty() || !g.is_connected_within(h) {
        return false;
    }
    components_without_inner_edges(g, h).iter().all(|c| c.intersection_len(h) == 1)
}

/// A map from `V(G)` onto a special subgraph, fixing the subgraph pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Retraction {
    map: Vec<usize>,
}

impl Retraction {
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// Sends every vertex to the unique subgraph vertex of its component once
/// the subgraph's internal edges are deleted.
pub fn special_retraction(g: &Graph, h: &VertexSet) -> Result<Retraction, GraphError> {
    if !is_special_subgraph(g, h) {
        return Err(GraphError::NotSpecial);
    }
    let mut map = vec![0; g.n()];
    for comp in components_without_inner_edges(g, h) {
        let mut anchor = comp.clone();
        anchor.intersect_with(h);
        let a = anchor.first().expect("special components hold one subgraph vertex");
        for v in comp.iter() {
            map[v] = a;
        }
    }
    Ok(Retraction { map })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn single_edge_and_path_distances() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.dist(0, 1), 1);
        let p = path(4);
        assert_eq!(p.dist(0, 3), 3);
        assert_eq!(p.neighbors(1), &[0, 2]);
        assert_eq!(p.diameter(), 3);
        assert!(p.is_tree());
    }

    #[test]
    fn construction_errors_are_distinct() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]).unwrap_err(), GraphError::SelfLoop(0));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap_err(), GraphError::DuplicateEdge(0, 1));
        assert_eq!(
            Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap_err(),
            GraphError::Disconnected { components: 2 }
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 2, n: 2 }
        );
        assert_eq!(Graph::from_edges(0, &[]).unwrap_err(), GraphError::Empty);
        let codes: std::collections::HashSet<_> = [
            GraphError::SelfLoop(0).code(),
            GraphError::DuplicateEdge(0, 1).code(),
            GraphError::Disconnected { components: 2 }.code(),
        ]
        .into_iter()
        .collect();
        assert_eq!(codes.len(), 3);
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = path(4);
        let text = g.to_edge_list();
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        let back = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());

        let err = Graph::parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err:?}");
        let err = Graph::parse_edge_list("3 2\n0 1\n2 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }));
        let err = Graph::parse_edge_list("3 3\n0 1\n1 2\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
    }

    #[test]
    fn special_subgraphs() {
        // C4: two adjacent vertices are not special.
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!is_special_subgraph(&c4, &VertexSet::from_vertices(4, [0, 1])));
        assert!(is_special_subgraph(&c4, &c4.all_vertices()));
        assert_eq!(special_retraction(&c4, &VertexSet::from_vertices(4, [0, 1])), Err(GraphError::NotSpecial));

        // Star: the center alone is special and every leaf retracts onto it.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let center = VertexSet::singleton(4, 0);
        let f = special_retraction(&star, &center).unwrap();
        assert_eq!(f.as_slice(), &[0, 0, 0, 0]);

        // Path 0-1-2-3-4 with subtree {1,2}: pendant vertices go to the nearest end.
        let p = path(5);
        let h = VertexSet::from_vertices(5, [1, 2]);
        let f = special_retraction(&p, &h).unwrap();
        assert_eq!(f.as_slice(), &[1, 1, 2, 2, 2]);
        // Disconnected subsets are never special.
        assert!(!is_special_subgraph(&p, &VertexSet::from_vertices(5, [0, 2])));
    }
}
