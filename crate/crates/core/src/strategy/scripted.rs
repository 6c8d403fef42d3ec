use super::{require_tree, CopStrategy, Memory, StrategyError};
use crate::game::KnowledgeState;
use crate::graph::Graph;

/// Plays a fixed list of probes, one per round.
#[derive(Clone, Debug)]
pub struct ScriptedProbes {
    probes: Vec<Vec<usize>>,
}

impl ScriptedProbes {
    pub fn new(probes: Vec<Vec<usize>>) -> Result<Self, StrategyError> {
        if probes.is_empty() {
            return Err(StrategyError::Precondition("empty probe script".into()));
        }
        Ok(ScriptedProbes { probes })
    }
}

impl CopStrategy for ScriptedProbes {
    fn name(&self) -> String {
        "scripted".into()
    }

    fn cops(&self) -> usize {
        self.probes.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn next_probe(&self, _g: &Graph, _s: &KnowledgeState, round: u32, _mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        self.probes.get(round as usize - 1).cloned().ok_or(StrategyError::Exhausted { round })
    }
}

/// One cop on every leaf of a tree.
#[derive(Clone, Debug)]
pub struct LeafProbeAll {
    leaves: Vec<usize>,
}

impl LeafProbeAll {
    pub fn new(g: &Graph) -> Result<Self, StrategyError> {
        require_tree(g)?;
        let leaves = g.leaves();
        if leaves.len() < 2 {
            return Err(StrategyError::Precondition("tree needs at least two leaves".into()));
        }
        Ok(LeafProbeAll { leaves })
    }
}

impl CopStrategy for LeafProbeAll {
    fn name(&self) -> String {
        "leaf_probe_all".into()
    }

    fn cops(&self) -> usize {
        self.leaves.len()
    }

    fn next_probe(&self, _g: &Graph, _s: &KnowledgeState, _round: u32, _mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        Ok(self.leaves.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::fano_plane;
    use crate::generators::{cycle, path, star};
    use crate::strategy::{evaluate_strategy, replay_transcript, WorstCase};

    #[test]
    fn heawood_script_takes_two_rounds() {
        let g = fano_plane().incidence_graph();
        // Points 1,4,6 then 2,3,5 under the 0-based relabelling.
        let s = ScriptedProbes::new(vec![vec![0, 3, 5], vec![1, 2, 4]]).unwrap();
        let r = evaluate_strategy(&g, &s, 5).unwrap();
        assert_eq!(r.worst_case, WorstCase::Rounds(2));
        replay_transcript(&g, &r).unwrap();
    }

    #[test]
    fn short_scripts() {
        let k2 = path(2).unwrap();
        let r = evaluate_strategy(&k2, &ScriptedProbes::new(vec![vec![0]]).unwrap(), 3).unwrap();
        assert_eq!(r.worst_case, WorstCase::Rounds(1));
        let c4 = cycle(4).unwrap();
        let r = evaluate_strategy(&c4, &ScriptedProbes::new(vec![vec![0]]).unwrap(), 3).unwrap();
        assert_eq!(r.worst_case, WorstCase::Exceeded(3));
        replay_transcript(&c4, &r).unwrap();
        assert!(ScriptedProbes::new(vec![]).is_err());
    }

    #[test]
    fn leaves_resolve_trees() {
        let r = evaluate_strategy(&star(5).unwrap(), &LeafProbeAll::new(&star(5).unwrap()).unwrap(), 2).unwrap();
        assert_eq!(r.worst_case, WorstCase::Rounds(1));
        let p4 = path(4).unwrap();
        let s = LeafProbeAll::new(&p4).unwrap();
        assert_eq!(s.cops(), 2);
        assert_eq!(evaluate_strategy(&p4, &s, 2).unwrap().worst_case, WorstCase::Rounds(1));
        assert!(LeafProbeAll::new(&cycle(4).unwrap()).is_err());
    }
}
