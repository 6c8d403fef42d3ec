//! Strategies driven by a supplied tree decomposition, both anchored at its
//! center bag.

use super::{CopStrategy, Memory, StrategyError};
use crate::decomposition::{td_stats, validate_td, TdStats, TreeDecomposition};
use crate::game::{KnowledgeState, ProbeSet};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn checked_stats(g: &Graph, td: &TreeDecomposition) -> Result<TdStats, StrategyError> {
    validate_td(g, td).map_err(|e| StrategyError::Precondition(format!("invalid decomposition: {e}")))?;
    Ok(td_stats(td))
}

/// Parent of every bag with the tree hung from `root`.
fn bag_parents(adj: &[Vec<usize>], root: usize) -> Vec<Option<usize>> {
    let mut parent = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(a) = stack.pop() {
        for &b in &adj[a] {
            if !seen[b] {
                seen[b] = true;
                parent[b] = Some(a);
                stack.push(b);
            }
        }
    }
    parent
}

/// Occupies one center-to-leaf path of bags per round. Leaves are visited
/// in an order where each path shares as long a prefix as possible with the
/// previous one, so bags left behind are never adjacent to bags not yet
/// reached.
#[derive(Clone, Debug)]
pub struct TdLeafPaths {
    probes: Vec<Vec<usize>>,
    stats: TdStats,
}

impl TdLeafPaths {
    pub fn new(g: &Graph, td: &TreeDecomposition) -> Result<Self, StrategyError> {
        let stats = checked_stats(g, td)?;
        let adj = td.adjacency();
        let center = stats.center;
        let parent = bag_parents(&adj, center);
        let dist = td.bag_distances(center);
        let path_to = |leaf: usize| {
            let mut p = vec![leaf];
            while let Some(up) = parent[*p.last().unwrap()] {
                p.push(up);
            }
            p.reverse();
            p
        };
        let mut leaves: Vec<usize> = (0..td.bags.len()).filter(|&b| b != center && adj[b].len() == 1).collect();
        if leaves.is_empty() {
            leaves.push(center);
        }
        let first = *leaves.iter().max_by_key(|&&l| (dist[l], std::cmp::Reverse(l))).unwrap();
        let mut paths = vec![path_to(first)];
        leaves.retain(|&l| l != first);
        while !leaves.is_empty() {
            let last = paths.last().unwrap();
            let overlap = |p: &[usize]| p.iter().zip(last).take_while(|(a, b)| a == b).count();
            let (pos, _) = leaves
                .iter()
                .enumerate()
                .max_by_key(|&(_, &l)| (overlap(&path_to(l)), std::cmp::Reverse(l)))
                .unwrap();
            paths.push(path_to(leaves.remove(pos)));
        }
        let probes = paths
            .iter()
            .map(|p| {
                let mut vs: Vec<usize> = p.iter().flat_map(|&b| td.bags[b].iter().copied()).collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            })
            .collect();
        Ok(TdLeafPaths { probes, stats })
    }

    /// Number of leaves of the decomposition.
    pub fn bound(&self) -> u32 {
        self.stats.leaves as u32
    }

    pub fn stats(&self) -> TdStats {
        self.stats
    }
}

impl CopStrategy for TdLeafPaths {
    fn name(&self) -> String {
        "td_leafpaths".into()
    }

    fn cops(&self) -> usize {
        self.probes.iter().map(Vec::len).max().unwrap_or(1)
    }

    fn next_probe(&self, _g: &Graph, _s: &KnowledgeState, round: u32, _mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        self.probes.get(round as usize - 1).cloned().ok_or(StrategyError::Exhausted { round })
    }
}

/// Occupies a bag and every neighbor of its vertices, starting from the
/// center. The closest probed vertex identifies the branch of the
/// decomposition holding the robber, and the next round moves one bag into
/// that branch.
#[derive(Clone, Debug)]
pub struct TdCenterOut {
    bags: Vec<Vec<usize>>,
    adj: Vec<Vec<usize>>,
    probes: Vec<Vec<usize>>,
    stats: TdStats,
}

const LOST: usize = usize::MAX;

impl TdCenterOut {
    pub fn new(g: &Graph, td: &TreeDecomposition) -> Result<Self, StrategyError> {
        let stats = checked_stats(g, td)?;
        let probes = td
            .bags
            .iter()
            .map(|bag| {
                let mut vs = VertexSet::empty(g.n());
                for &v in bag {
                    vs.union_with(g.closed_neighborhood(v));
                }
                vs.to_vec()
            })
            .collect();
        Ok(TdCenterOut { bags: td.bags.clone(), adj: td.adjacency(), probes, stats })
    }

    /// Radius of the decomposition plus one.
    pub fn bound(&self) -> u32 {
        self.stats.radius as u32 + 1
    }

    /// Whether some bag holding `u` is reachable from `start` without
    /// passing through `cut`.
    fn branch_holds(&self, cut: usize, start: usize, u: usize) -> bool {
        let mut seen = vec![false; self.bags.len()];
        seen[cut] = true;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            if self.bags[a].binary_search(&u).is_ok() {
                return true;
            }
            for &b in &self.adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        false
    }
}

impl CopStrategy for TdCenterOut {
    fn name(&self) -> String {
        "td_center_out".into()
    }

    fn cops(&self) -> usize {
        self.probes.iter().map(Vec::len).max().unwrap_or(1)
    }

    fn init(&self, _g: &Graph) -> Memory {
        vec![self.stats.center]
    }

    fn next_probe(&self, _g: &Graph, _s: &KnowledgeState, round: u32, mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        match mem[0] {
            LOST => Err(StrategyError::Stuck { round, reason: "closest cop lies in no branch below the current bag".into() }),
            bag => Ok(self.probes[bag].clone()),
        }
    }

    fn observe(&self, _g: &Graph, probe: &ProbeSet, distances: &[u32], _class: &VertexSet, mem: &mut Memory) {
        let cur = mem[0];
        let Some((u, _)) = probe.vertices().iter().zip(distances).min_by_key(|&(_, &d)| d) else {
            mem[0] = LOST;
            return;
        };
        mem[0] = self.adj[cur].iter().copied().find(|&b| self.branch_holds(cur, b, *u)).unwrap_or(LOST);
    }
}
