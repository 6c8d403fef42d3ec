use super::{CopStrategy, Memory, StrategyError};
use crate::decomposition::{validate_td, TreeDecomposition};
use crate::game::KnowledgeState;
use crate::graph::Graph;

/// Sweeps a path decomposition from one end: round `r` occupies the whole
/// of bag `r`. A robber outside every earlier bag cannot reach one without
/// crossing the bag currently occupied.
#[derive(Clone, Debug)]
pub struct PathwidthSweep {
    bags: Vec<Vec<usize>>,
}

impl PathwidthSweep {
    pub fn new(g: &Graph, td: &TreeDecomposition) -> Result<Self, StrategyError> {
        validate_td(g, td).map_err(|e| StrategyError::Precondition(format!("invalid decomposition: {e}")))?;
        let order = td
            .path_order()
            .ok_or_else(|| StrategyError::Precondition("decomposition is not a path".into()))?;
        let mut bags: Vec<Vec<usize>> = order.into_iter().map(|i| td.bags[i].clone()).collect();
        let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
        while let Some(i) = (0..bags.len()).find(|&i| {
            bags.len() > 1
                && ((i > 0 && subset(&bags[i], &bags[i - 1])) || (i + 1 < bags.len() && subset(&bags[i], &bags[i + 1])))
        }) {
            bags.remove(i);
        }
        Ok(PathwidthSweep { bags })
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    /// Number of bags after dropping those contained in a neighbor; at most `n`.
    pub fn bound(&self) -> u32 {
        self.bags.len() as u32
    }
}

impl CopStrategy for PathwidthSweep {
    fn name(&self) -> String {
        "pathwidth_sweep".into()
    }

    fn cops(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1)
    }

    fn next_probe(&self, _g: &Graph, _s: &KnowledgeState, round: u32, _mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        self.bags
            .get(round as usize - 1)
            .cloned()
            .ok_or(StrategyError::Exhausted { round })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::interval_clique_path;
    use crate::generators::{path, Interval};
    use crate::strategy::{evaluate_strategy, replay_transcript};

    fn natural_path_td(n: usize) -> TreeDecomposition {
        TreeDecomposition::path((1..n).map(|i| vec![i - 1, i]).collect())
    }

    fn assert_never_reenters(g: &Graph, s: &PathwidthSweep) {
        let r = evaluate_strategy(g, s, g.n() as u32 + 1).unwrap();
        replay_transcript(g, &r).unwrap();
        assert!(r.worst_case.within(g.n() as u32), "{:?}", r.worst_case);
        let mut swept: Vec<usize> = Vec::new();
        for rec in &r.transcript {
            swept.extend_from_slice(&s.bags()[rec.round as usize - 1]);
            if !rec.captured {
                assert!(rec.class.iter().all(|v| !swept.contains(v)), "round {}: {:?}", rec.round, rec.class);
            }
        }
    }

    #[test]
    fn path_sweep() {
        let g = path(5).unwrap();
        let s = PathwidthSweep::new(&g, &natural_path_td(5)).unwrap();
        assert_eq!(s.cops(), 2);
        assert!(s.bound() <= 5);
        assert_never_reenters(&g, &s);
    }

    #[test]
    fn interval_sweeps() {
        let families = [
            vec![Interval::new(0, 2), Interval::new(1, 4), Interval::new(3, 5), Interval::new(3, 7), Interval::new(6, 8)],
            vec![Interval::new(0, 10), Interval::new(1, 2), Interval::new(3, 4), Interval::new(5, 6), Interval::new(7, 8)],
            vec![Interval::new(0, 1), Interval::new(1, 2), Interval::new(2, 3), Interval::new(3, 4), Interval::new(4, 5), Interval::new(0, 5)],
        ];
        for ivs in families {
            let (g, td) = interval_clique_path(&ivs).unwrap();
            let s = PathwidthSweep::new(&g, &td).unwrap();
            assert_eq!(s.cops(), td.width() + 1);
            assert_never_reenters(&g, &s);
        }
    }

    #[test]
    fn rejects_invalid() {
        let g = path(4).unwrap();
        let bad = TreeDecomposition::path(vec![vec![0, 1], vec![2, 3], vec![1, 2]]);
        assert!(PathwidthSweep::new(&g, &bad).is_err());
    }
}
