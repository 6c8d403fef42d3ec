//! Strategies for perfect m-ary trees in the numbering of
//! [`perfect_mary_tree`]: root 0, children of `v` are `m·v+1 ..= m·v+m`.

use super::{CopStrategy, Memory, Rooted, StrategyError};
use crate::game::KnowledgeState;
use crate::generators::perfect_mary_tree;
use crate::graph::Graph;

fn check_numbering(g: &Graph, m: usize, h: usize) -> Result<Rooted, StrategyError> {
    let expected = perfect_mary_tree(m, h).map_err(|e| StrategyError::Precondition(e.to_string()))?;
    if g.n() != expected.n() || !expected.edges().all(|(u, v)| g.has_edge(u, v)) {
        return Err(StrategyError::Precondition(format!("graph is not the numbered perfect {m}-ary tree of height {h}")));
    }
    Ok(Rooted::new(g, 0))
}

fn floor_log(m: usize, k: usize) -> u32 {
    let mut i = 0;
    let mut p = m;
    while p <= k {
        i += 1;
        p *= m;
    }
    i
}

/// Fewer cops than children (`2 <= k < m`): probe up to `k` child subtrees
/// of the candidates' lowest common ancestor each round, narrowing down the
/// subtree that holds the robber, then descend.
#[derive(Clone, Debug)]
pub struct MaryLow {
    m: usize,
    h: usize,
    k: usize,
    rooted: Rooted,
}

impl MaryLow {
    pub fn new(g: &Graph, m: usize, h: usize, k: usize) -> Result<Self, StrategyError> {
        if !(2 <= k && k < m) {
            return Err(StrategyError::Precondition(format!("need 2 <= k < m, got k={k}, m={m}")));
        }
        let rooted = check_numbering(g, m, h)?;
        Ok(MaryLow { m, h, k, rooted })
    }

    /// `h·⌈(m−1)/k⌉`.
    pub fn bound(&self) -> u32 {
        (self.h * (self.m - 1).div_ceil(self.k)) as u32
    }
}

impl CopStrategy for MaryLow {
    fn name(&self) -> String {
        format!("mary_low(m={},h={},k={})", self.m, self.h, self.k)
    }

    fn cops(&self) -> usize {
        self.k
    }

    fn next_probe(&self, _g: &Graph, s: &KnowledgeState, round: u32, _mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        let s = &s.candidates;
        let a = self.rooted.lca_of(s).ok_or(StrategyError::Stuck { round, reason: "no candidates".into() })?;
        let kids = &self.rooted.children[a];
        let mut probe: Vec<usize> = kids.iter().copied().filter(|&c| self.rooted.subtree_meets(c, s)).take(self.k).collect();
        for &c in kids {
            if probe.len() >= 2 {
                break;
            }
            if !probe.contains(&c) {
                probe.push(c);
            }
        }
        Ok(probe)
    }
}

/// At least as many cops as children (`m <= k < m^(h+1)`): with
/// `i = ⌊log_m k⌋`, probe all `m^i` vertices `i` levels below the deepest
/// vertex whose subtree (plus its parent) holds the candidates.
#[derive(Clone, Debug)]
pub struct MaryHigh {
    m: usize,
    h: usize,
    k: usize,
    i: u32,
    rooted: Rooted,
}

impl MaryHigh {
    pub fn new(g: &Graph, m: usize, h: usize, k: usize) -> Result<Self, StrategyError> {
        if m < 2 || k < m || (k as u128) >= (m as u128).pow(h as u32 + 1) {
            return Err(StrategyError::Precondition(format!("need m <= k < m^(h+1), got k={k}, m={m}, h={h}")));
        }
        let rooted = check_numbering(g, m, h)?;
        Ok(MaryHigh { m, h, k, i: floor_log(m, k), rooted })
    }

    /// `⌈h / ⌊log_m k⌋⌉`.
    pub fn bound(&self) -> u32 {
        (self.h as u32).div_ceil(self.i)
    }

    fn holds(&self, x: usize, s: &crate::vertex_set::VertexSet) -> bool {
        s.iter().all(|v| self.rooted.in_subtree(x, v) || Some(v) == self.rooted.parent[x])
    }
}

impl CopStrategy for MaryHigh {
    fn name(&self) -> String {
        format!("mary_high(m={},h={},k={})", self.m, self.h, self.k)
    }

    fn cops(&self) -> usize {
        self.k
    }

    fn next_probe(&self, _g: &Graph, s: &KnowledgeState, _round: u32, _mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        let s = &s.candidates;
        let mut x = 0;
        while let Some(&y) = self.rooted.children[x].iter().find(|&&y| self.holds(y, s)) {
            x = y;
        }
        let height = self.h as u32 - self.rooted.depth[x];
        let levels = self.i.min(height);
        let mut frontier = vec![x];
        for _ in 0..levels {
            frontier = frontier.iter().flat_map(|&v| self.rooted.children[v].iter().copied()).collect();
        }
        Ok(frontier)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve_capture_time, SolveOptions};
    use crate::strategy::{evaluate_strategy, replay_transcript};

    fn run(g: &Graph, s: &dyn CopStrategy) -> u32 {
        let r = evaluate_strategy(g, s, 50).unwrap();
        replay_transcript(g, &r).unwrap();
        r.worst_case.rounds().expect("captures")
    }

    #[test]
    fn floor_logs() {
        assert_eq!(floor_log(2, 4), 2);
        assert_eq!(floor_log(2, 3), 1);
        assert_eq!(floor_log(3, 8), 1);
        assert_eq!(floor_log(3, 9), 2);
    }

    #[test]
    fn low_regime_bounds() {
        for (m, h, k) in [(3, 2, 2), (3, 1, 2), (4, 2, 2), (4, 2, 3), (5, 2, 2), (7, 3, 3)] {
            let g = perfect_mary_tree(m, h).unwrap();
            let s = MaryLow::new(&g, m, h, k).unwrap();
            let worst = run(&g, &s);
            assert!(worst <= s.bound(), "m={m} h={h} k={k}: {worst} > {}", s.bound());
            if g.n() <= 40 {
                let opt = solve_capture_time(&g, k, &SolveOptions::fast_for(&g)).outcome.rounds().unwrap();
                assert!(opt <= worst);
            }
        }
    }

    #[test]
    fn high_regime_bounds() {
        for (m, h, k) in [(2, 4, 4), (2, 2, 4), (2, 3, 2), (3, 2, 3), (3, 3, 5), (2, 3, 7)] {
            let g = perfect_mary_tree(m, h).unwrap();
            let s = MaryHigh::new(&g, m, h, k).unwrap();
            let worst = run(&g, &s);
            assert!(worst <= s.bound(), "m={m} h={h} k={k}: {worst} > {}", s.bound());
        }
        let g = perfect_mary_tree(2, 2).unwrap();
        assert_eq!(run(&g, &MaryHigh::new(&g, 2, 2, 4).unwrap()), 1);
    }

    #[test]
    fn preconditions() {
        let g = perfect_mary_tree(3, 2).unwrap();
        assert!(MaryLow::new(&g, 3, 2, 3).is_err());
        assert!(MaryHigh::new(&g, 3, 2, 2).is_err());
        assert!(MaryHigh::new(&g, 3, 2, 27).is_err());
        assert!(MaryLow::new(&g, 4, 2, 2).is_err());
    }
}
