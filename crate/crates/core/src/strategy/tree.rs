use super::{require_tree, CopStrategy, Memory, Rooted, StrategyError};
use crate::game::KnowledgeState;
use crate::graph::Graph;

/// Two cops on a tree rooted at vertex 0: one anchors at the lowest common
/// ancestor of the candidates, the other probes the first child subtree
/// still holding candidates. Each round either descends into that subtree
/// or rules it out for good.
#[derive(Clone, Debug)]
pub struct TreeTwoCop {
    rooted: Rooted,
}

impl TreeTwoCop {
    pub fn new(g: &Graph) -> Result<Self, StrategyError> {
        require_tree(g)?;
        if g.n() < 2 {
            return Err(StrategyError::Precondition("tree needs at least two vertices".into()));
        }
        Ok(TreeTwoCop { rooted: Rooted::new(g, 0) })
    }
}

impl CopStrategy for TreeTwoCop {
    fn name(&self) -> String {
        "tree_two_cop".into()
    }

    fn cops(&self) -> usize {
        2
    }

    fn next_probe(&self, _g: &Graph, s: &KnowledgeState, round: u32, _mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        let s = &s.candidates;
        let a = self.rooted.lca_of(s).ok_or(StrategyError::Stuck { round, reason: "no candidates".into() })?;
        let c = self.rooted.children[a]
            .iter()
            .copied()
            .find(|&c| self.rooted.subtree_meets(c, s))
            .ok_or(StrategyError::Stuck { round, reason: "candidates have no branching point".into() })?;
        Ok(vec![a, c])
    }
}
