//! Fixed cop strategies and an exhaustive adversarial evaluator.
//!
//! A strategy sees exactly what the cops know: the current candidate set,
//! the round number, and whatever it chose to remember from earlier answers.
//! [`evaluate_strategy`] plays it against every robber choice and reports
//! the worst case.

mod evaluator;
mod kpartite;
mod mary;
mod projective;
mod scripted;
mod spec;
mod sweep;
mod tree;
mod treewidth;
mod witness;

use thiserror::Error;

use crate::game::{KnowledgeState, ProbeError, ProbeSet};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use evaluator::{evaluate_strategy, replay_transcript, EvalReport, RoundRecord, WorstCase};
pub use kpartite::{multipartite_parts, KPartite};
pub use mary::{MaryHigh, MaryLow};
pub use projective::ProjectiveTwoPhase;
pub use scripted::{LeafProbeAll, ScriptedProbes};
pub use spec::{parse_strategy, NamedStrategy, SpecError, STRATEGY_NAMES};
pub use sweep::PathwidthSweep;
pub use tree::TreeTwoCop;
pub use treewidth::{TdCenterOut, TdLeafPaths};
pub use witness::WitnessStrategy;

/// Private strategy state carried between rounds. Part of the evaluator's
/// memo key, so strategies should keep it small.
pub type Memory = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("strategy has no probe for round {round}")]
    Exhausted { round: u32 },
    #[error("round {round}: invalid probe {probe:?}: {source}")]
    InvalidProbe { round: u32, probe: Vec<usize>, source: ProbeError },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("round {round}: strategy cannot continue: {reason}")]
    Stuck { round: u32, reason: String },
}

pub trait CopStrategy {
    fn name(&self) -> String;

    /// Largest probe the strategy may emit.
    fn cops(&self) -> usize;

    fn init(&self, _g: &Graph) -> Memory {
        Vec::new()
    }

    /// Probe for `round` (1-based) given the pre-probe knowledge state.
    fn next_probe(
        &self,
        g: &Graph,
        state: &KnowledgeState,
        round: u32,
        mem: &mut Memory,
    ) -> Result<Vec<usize>, StrategyError>;

    /// Called with the answer when the robber survives a round.
    fn observe(&self, _g: &Graph, _probe: &ProbeSet, _distances: &[u32], _class: &VertexSet, _mem: &mut Memory) {}
}

/// Vertices of a tree rooted at a chosen vertex, with entry/exit times for
/// constant-time subtree tests.
#[derive(Clone, Debug)]
pub(crate) struct Rooted {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub depth: Vec<u32>,
    tin: Vec<usize>,
    tout: Vec<usize>,
}

impl Rooted {
    pub fn new(g: &Graph, root: usize) -> Self {
        let n = g.n();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut clock = 0;
        let mut stack = vec![(root, false)];
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some((v, done)) = stack.pop() {
            if done {
                tout[v] = clock;
                continue;
            }
            tin[v] = clock;
            clock += 1;
            stack.push((v, true));
            for &w in g.neighbors(v).iter().rev() {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    stack.push((w, false));
                }
            }
        }
        for (v, slot) in children.iter_mut().enumerate() {
            let mut kids: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| parent[w] == Some(v)).collect();
            kids.sort_unstable();
            *slot = kids;
        }
        Rooted { parent, children, depth, tin, tout }
    }

    /// Whether `v` lies in the subtree of `a`.
    pub fn in_subtree(&self, a: usize, v: usize) -> bool {
        self.tin[a] <= self.tin[v] && self.tin[v] < self.tout[a]
    }

    pub fn subtree_meets(&self, a: usize, s: &VertexSet) -> bool {
        s.iter().any(|v| self.in_subtree(a, v))
    }

    pub fn lca(&self, mut a: usize, mut b: usize) -> usize {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("deeper vertex has a parent");
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("deeper vertex has a parent");
        }
        while a != b {
            a = self.parent[a].expect("not root");
            b = self.parent[b].expect("not root");
        }
        a
    }

    pub fn lca_of(&self, s: &VertexSet) -> Option<usize> {
        let mut it = s.iter();
        let first = it.next()?;
        Some(it.fold(first, |acc, v| self.lca(acc, v)))
    }
}

pub(crate) fn require_tree(g: &Graph) -> Result<(), StrategyError> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(StrategyError::Precondition("graph is not a tree".into()))
    }
}
