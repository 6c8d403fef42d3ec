use super::{CopStrategy, Memory, StrategyError};
use crate::game::KnowledgeState;
use crate::graph::Graph;

/// Parts of a complete multipartite graph (classes of non-adjacency),
/// sorted by size then by least vertex. `None` if `g` is not complete
/// multipartite.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let idx = parts.len();
        let members: Vec<usize> = (v..n).filter(|&u| u == v || !g.has_edge(u, v)).collect();
        for &u in &members {
            if part_of[u] != usize::MAX {
                return None;
            }
            part_of[u] = idx;
        }
        parts.push(members);
    }
    for u in 0..n {
        for w in u + 1..n {
            if g.has_edge(u, w) != (part_of[u] != part_of[w]) {
                return None;
            }
        }
    }
    parts.sort_by_key(|p| (p.len(), p[0]));
    Some(parts)
}

/// Stationary cops on all but one vertex of each smaller part (and on all
/// but one singleton part), plus one cop walking the largest part.
#[derive(Clone, Debug)]
pub struct KPartite {
    stationary: Vec<usize>,
    largest: Vec<usize>,
}

impl KPartite {
    pub fn new(g: &Graph) -> Result<Self, StrategyError> {
        let parts = multipartite_parts(g).ok_or_else(|| StrategyError::Precondition("graph is not complete multipartite".into()))?;
        let (largest, rest) = parts.split_last().expect("nonempty graph");
        if largest.len() < 2 {
            return Err(StrategyError::Precondition("largest part must have at least two vertices".into()));
        }
        let singletons: Vec<usize> = rest.iter().filter(|p| p.len() == 1).map(|p| p[0]).collect();
        let mut stationary: Vec<usize> = singletons.iter().skip(1).copied().collect();
        for p in rest.iter().filter(|p| p.len() > 1) {
            stationary.extend_from_slice(&p[..p.len() - 1]);
        }
        stationary.sort_unstable();
        Ok(KPartite { stationary, largest: largest.clone() })
    }

    /// `|X_k| − 1`.
    pub fn bound(&self) -> u32 {
        self.largest.len() as u32 - 1
    }

    /// The cop count from the part sizes: `n − χ − |X_k| + ρ + 1` with `ρ`
    /// singleton parts, or `n − χ − |X_k| + 2` when there are none.
    pub fn formula(parts: &[Vec<usize>]) -> usize {
        let n: usize = parts.iter().map(Vec::len).sum();
        let chi = parts.len();
        let xk = parts.iter().map(Vec::len).max().unwrap_or(0);
        let rho = parts.iter().filter(|p| p.len() == 1).count();
        if rho >= 1 {
            n + rho + 1 - chi - xk
        } else {
            n + 2 - chi - xk
        }
    }
}

impl CopStrategy for KPartite {
    fn name(&self) -> String {
        "kpartite".into()
    }

    fn cops(&self) -> usize {
        self.stationary.len() + 1
    }

    fn next_probe(&self, _g: &Graph, s: &KnowledgeState, round: u32, _mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        let mover = self
            .largest
            .iter()
            .copied()
            .find(|&v| s.candidates.contains(v))
            .ok_or(StrategyError::Stuck { round, reason: "no candidate left in the largest part".into() })?;
        let mut probe = self.stationary.clone();
        probe.push(mover);
        Ok(probe)
    }
}
