//! Tree and path decompositions: validation, statistics, construction.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::generators::{interval_graph, GenError, Interval};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TdKind {
    Tree,
    Path,
}

/// Bags (sorted vertex lists) joined by tree edges over bag indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
    pub kind: TdKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TdViolation {
    #[error("decomposition has no bags")]
    NoBags,
    #[error("bag {bag} holds vertex {vertex}, out of range")]
    VertexOutOfRange { bag: usize, vertex: usize },
    #[error("tree edge {0:?} names a missing bag")]
    BagOutOfRange((usize, usize)),
    #[error("bag edges do not form a tree")]
    NotTree,
    #[error("bag edges do not form a path")]
    NotPath,
    #[error("vertex {0} is in no bag")]
    Uncovered(usize),
    #[error("edge {0}-{1} is in no bag")]
    EdgeUncovered(usize, usize),
    #[error("bags holding vertex {0} are not connected")]
    RunningIntersection(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TdStats {
    pub width: usize,
    pub radius: usize,
    pub center: usize,
    pub leaves: usize,
}

impl TreeDecomposition {
    pub fn new(mut bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>, kind: TdKind) -> Self {
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        TreeDecomposition { bags, edges, kind }
    }

    /// Bags joined in the given order.
    pub fn path(bags: Vec<Vec<usize>>) -> Self {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        Self::new(bags, edges, TdKind::Path)
    }

    pub fn bag_set(&self, i: usize, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.bags[i].iter().copied())
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1) - 1
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Hop distances between bags from `from`.
    pub fn bag_distances(&self, from: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.bags.len()];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if dist[b] == usize::MAX {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        dist
    }

    /// Bag order along the path for a path decomposition, starting from the
    /// lower-indexed end.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let adj = self.adjacency();
        if adj.iter().any(|a| a.len() > 2) {
            return None;
        }
        let start = (0..self.bags.len()).find(|&i| adj[i].len() <= 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&b| b != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == self.bags.len()).then_some(order)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serializes")
    }
}

fn is_tree(nodes: usize, edges: &[(usize, usize)]) -> bool {
    if edges.len() + 1 != nodes {
        return false;
    }
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Checks the decomposition against `g`, reporting the first violation.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    let n = g.n();
    let m = td.bags.len();
    if m == 0 {
        return Err(TdViolation::NoBags);
    }
    for (i, bag) in td.bags.iter().enumerate() {
        if let Some(&v) = bag.iter().find(|&&v| v >= n) {
            return Err(TdViolation::VertexOutOfRange { bag: i, vertex: v });
        }
    }
    if let Some(&e) = td.edges.iter().find(|&&(a, b)| a >= m || b >= m) {
        return Err(TdViolation::BagOutOfRange(e));
    }
    if !is_tree(m, &td.edges) {
        return Err(TdViolation::NotTree);
    }
    let sets: Vec<VertexSet> = (0..m).map(|i| td.bag_set(i, n)).collect();
    if let Some(v) = (0..n).find(|&v| !sets.iter().any(|b| b.contains(v))) {
        return Err(TdViolation::Uncovered(v));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !sets.iter().any(|b| b.contains(u) && b.contains(v))) {
        return Err(TdViolation::EdgeUncovered(u, v));
    }
    let adj = td.adjacency();
    for v in 0..n {
        let holding: Vec<usize> = (0..m).filter(|&i| sets[i].contains(v)).collect();
        let mut seen = vec![false; m];
        let mut stack = vec![holding[0]];
        seen[holding[0]] = true;
        let mut reached = 1;
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !seen[b] && sets[b].contains(v) {
                    seen[b] = true;
                    reached += 1;
                    stack.push(b);
                }
            }
        }
        if reached != holding.len() {
            return Err(TdViolation::RunningIntersection(v));
        }
    }
    if td.kind == TdKind::Path && td.path_order().is_none() {
        return Err(TdViolation::NotPath);
    }
    Ok(())
}

/// Width, radius and center (least-index bag of minimum eccentricity) of
/// the bag tree, and its number of leaves (1 for a single bag).
pub fn td_stats(td: &TreeDecomposition) -> TdStats {
    let m = td.bags.len();
    let ecc: Vec<usize> = (0..m).map(|i| td.bag_distances(i).into_iter().max().unwrap_or(0)).collect();
    let radius = ecc.iter().copied().min().unwrap_or(0);
    let center = ecc.iter().position(|&e| e == radius).unwrap_or(0);
    let adj = td.adjacency();
    let leaves = if m == 1 { 1 } else { adj.iter().filter(|a| a.len() == 1).count() };
    TdStats { width: td.width(), radius, center, leaves }
}

/// Merges every bag contained in a tree neighbor into that neighbor.
fn contract_subset_bags(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> (Vec<Vec<usize>>, Vec<(usize, usize)>) {
    let m = bags.len();
    let mut alive = vec![true; m];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    loop {
        let mut merged = false;
        'scan: for i in 0..m {
            if !alive[i] {
                continue;
            }
            for &j in &adj[i] {
                if subset(&bags[i], &bags[j]) {
                    let others: Vec<usize> = adj[i].iter().copied().filter(|&x| x != j).collect();
                    for &o in &others {
                        adj[o].retain(|&x| x != i);
                        adj[o].push(j);
                        adj[j].push(o);
                    }
                    adj[j].retain(|&x| x != i);
                    adj[i].clear();
                    alive[i] = false;
                    merged = true;
                    break 'scan;
                }
            }
        }
        if !merged {
            break;
        }
    }
    let mut new_id = vec![usize::MAX; m];
    let mut out_bags = Vec::new();
    for i in 0..m {
        if alive[i] {
            new_id[i] = out_bags.len();
            out_bags.push(bags[i].clone());
        }
    }
    let mut out_edges = Vec::new();
    for i in 0..m {
        for &j in &adj[i] {
            if alive[i] && i < j {
                out_edges.push((new_id[i], new_id[j]));
            }
        }
    }
    out_edges.sort_unstable();
    (out_bags, out_edges)
}

/// Tree decomposition from a min-fill elimination order (ties broken by
/// least vertex). Each eliminated vertex contributes a bag of itself and its
/// remaining neighbors, attached to the bag of the first of those
/// neighbors to be eliminated later.
pub fn minfill_td(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| VertexSet::from_vertices(n, g.neighbors(v).iter().copied())).collect();
    let mut alive = VertexSet::full(n);
    let mut order = Vec::with_capacity(n);
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| {
                let nb = adj[v].to_vec();
                let mut fill = 0;
                for (i, &a) in nb.iter().enumerate() {
                    for &b in &nb[i + 1..] {
                        if !adj[a].contains(b) {
                            fill += 1;
                        }
                    }
                }
                (fill, v)
            })
            .expect("vertices remain");
        let nb = adj[v].to_vec();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nb {
            adj[a].remove(v);
        }
        alive.remove(v);
        let mut bag = nb.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        order.push(v);
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut edges = Vec::new();
    for (i, bag) in bags.iter().enumerate() {
        let v = order[i];
        if let Some(next) = bag.iter().copied().filter(|&x| x != v).min_by_key(|&x| position[x]) {
            edges.push((i, position[next]));
        }
    }
    let (bags, edges) = contract_subset_bags(bags, edges);
    TreeDecomposition::new(bags, edges, TdKind::Tree)
}

/// Width-1 decomposition of a tree with at least two vertices: one bag per
/// edge `{parent(v), v}` with the tree rooted at 0, joined to the bag of the
/// parent edge, or to the first root edge for the other root edges.
pub fn tree_edge_td(g: &Graph) -> Option<TreeDecomposition> {
    if !g.is_tree() || g.n() < 2 {
        return None;
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let bags: Vec<Vec<usize>> = (1..n).map(|v| vec![parent[v], v]).collect();
    let bag_of = |v: usize| v - 1;
    let first_root_edge = *g.neighbors(0).first()?;
    let edges = (1..n)
        .filter(|&v| v != first_root_edge)
        .map(|v| {
            let up = if parent[v] == 0 { first_root_edge } else { parent[v] };
            (bag_of(up).min(bag_of(v)), bag_of(up).max(bag_of(v)))
        })
        .collect();
    Some(TreeDecomposition::new(bags, edges, TdKind::Tree))
}

#[derive(Debug, Error)]
pub enum IntervalError {
    #[error("no intervals given")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GenError),
}

/// Intersection graph of the intervals together with its clique path: one
/// bag per distinct left endpoint (the intervals covering it), in order,
/// with bags contained in a neighbor removed.
pub fn interval_clique_path(intervals: &[Interval]) -> Result<(Graph, TreeDecomposition), IntervalError> {
    if intervals.is_empty() {
        return Err(IntervalError::Empty);
    }
    let g = interval_graph(intervals)?;
    let mut points: Vec<i64> = intervals.iter().map(|iv| iv.left).collect();
    points.sort_unstable();
    points.dedup();
    let mut bags: Vec<Vec<usize>> = points
        .iter()
        .map(|&p| (0..intervals.len()).filter(|&i| intervals[i].left <= p && p <= intervals[i].right).collect())
        .collect();
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
    loop {
        let drop = (0..bags.len()).find(|&i| {
            (i > 0 && subset(&bags[i], &bags[i - 1])) || (i + 1 < bags.len() && subset(&bags[i], &bags[i + 1]))
        });
        match drop {
            Some(i) if bags.len() > 1 => {
                bags.remove(i);
            }
            _ => break,
        }
    }
    Ok((g, TreeDecomposition::path(bags)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, cycle, path, prufer_decode, star};

    fn p4_td() -> TreeDecomposition {
        TreeDecomposition::path(vec![vec![0, 1], vec![1, 2], vec![2, 3]])
    }

    #[test]
    fn validation_examples() {
        let g = path(4).unwrap();
        assert_eq!(validate_td(&g, &p4_td()), Ok(()));
        let missing = TreeDecomposition::path(vec![vec![0, 1], vec![1, 2], vec![3]]);
        assert_eq!(validate_td(&g, &missing), Err(TdViolation::EdgeUncovered(2, 3)));
        let shuffled = TreeDecomposition::path(vec![vec![0, 1], vec![2, 3], vec![1, 2]]);
        assert_eq!(validate_td(&g, &shuffled), Err(TdViolation::RunningIntersection(1)));
        let star_shaped = TreeDecomposition::new(
            vec![vec![1, 2], vec![0, 1], vec![2, 3], vec![1, 2]],
            vec![(0, 1), (0, 2), (0, 3)],
            TdKind::Path,
        );
        assert_eq!(validate_td(&g, &star_shaped), Err(TdViolation::NotPath));
        let cyclic = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]], vec![(0, 1), (1, 2), (2, 0)], TdKind::Tree);
        assert_eq!(validate_td(&g, &cyclic), Err(TdViolation::NotTree));
    }

    #[test]
    fn stats_examples() {
        assert_eq!(td_stats(&p4_td()), TdStats { width: 1, radius: 1, center: 1, leaves: 2 });
        let single = TreeDecomposition::path(vec![vec![0, 1, 2, 3]]);
        assert_eq!(td_stats(&single), TdStats { width: 3, radius: 0, center: 0, leaves: 1 });
        let spokes = TreeDecomposition::new(
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]],
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
            TdKind::Tree,
        );
        let s = td_stats(&spokes);
        assert_eq!((s.radius, s.leaves, s.center), (1, 4, 0));
    }

    fn all_trees(n: usize) -> Vec<Graph> {
        let mut out = Vec::new();
        let total = n.pow(n as u32 - 2);
        for code in 0..total {
            let mut seq = Vec::new();
            let mut c = code;
            for _ in 0..n - 2 {
                seq.push(c % n);
                c /= n;
            }
            out.push(Graph::from_edges(n, &prufer_decode(n, &seq)).unwrap());
        }
        out
    }

    #[test]
    fn minfill_examples() {
        for n in 3..=6 {
            for t in all_trees(n) {
                let td = minfill_td(&t);
                assert_eq!(validate_td(&t, &td), Ok(()));
                assert_eq!(td.width(), 1);
            }
        }
        let c4 = cycle(4).unwrap();
        let td = minfill_td(&c4);
        assert_eq!(validate_td(&c4, &td), Ok(()));
        assert_eq!(td.width(), 2);
        let k4 = complete_multipartite(&[1, 1, 1, 1]).unwrap();
        let td = minfill_td(&k4);
        assert_eq!(td.bags, vec![vec![0, 1, 2, 3]]);
        let s = star(4).unwrap();
        assert_eq!(validate_td(&s, &minfill_td(&s)), Ok(()));
    }

    #[test]
    fn edge_decompositions() {
        for n in 2..=6 {
            for t in all_trees(n) {
                let td = tree_edge_td(&t).unwrap();
                assert_eq!(validate_td(&t, &td), Ok(()));
                assert_eq!((td.width(), td.bags.len()), (1, n - 1));
            }
        }
        assert!(tree_edge_td(&cycle(4).unwrap()).is_none());
    }

    #[test]
    fn interval_examples() {
        let disjoint = [Interval::new(0, 1), Interval::new(3, 4)];
        assert!(matches!(interval_clique_path(&disjoint), Err(IntervalError::Graph(_))));
        assert!(matches!(interval_clique_path(&[]), Err(IntervalError::Empty)));
        let nested = [Interval::new(0, 10), Interval::new(1, 9), Interval::new(2, 8)];
        let (g, td) = interval_clique_path(&nested).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(td.bags, vec![vec![0, 1, 2]]);
        let stairs = [Interval::new(0, 1), Interval::new(1, 2), Interval::new(2, 3), Interval::new(3, 4)];
        let (g, td) = interval_clique_path(&stairs).unwrap();
        assert_eq!(g.diameter(), 3);
        assert_eq!(td.bags, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(validate_td(&g, &td), Ok(()));
        assert_eq!(td.kind, TdKind::Path);
    }

    #[test]
    fn json_shape() {
        let j = p4_td().to_json();
        assert_eq!(j, r#"{"bags":[[0,1],[1,2],[2,3]],"edges":[[0,1],[1,2]],"kind":"path"}"#);
        let back: TreeDecomposition = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p4_td());
    }
}
