use super::{CopStrategy, Memory, StrategyError};
use crate::game::KnowledgeState;
use crate::graph::Graph;
use crate::solver::{solve_capture_time, Outcome, SolveOptions, Witness};

/// Plays the optimal probes recorded by an exact solve.
#[derive(Debug)]
pub struct WitnessStrategy {
    k: usize,
    capture_time: u32,
    witness: Witness,
}

impl WitnessStrategy {
    pub fn new(g: &Graph, k: usize, opts: &SolveOptions) -> Result<Self, StrategyError> {
        let result = solve_capture_time(g, k, opts);
        match (result.outcome, result.witness) {
            (Outcome::Finite(t), Some(witness)) => Ok(WitnessStrategy { k, capture_time: t, witness }),
            (outcome, _) => Err(StrategyError::Precondition(format!("solve with {k} cops gave {}", outcome.label()))),
        }
    }

    /// The solved capture time.
    pub fn capture_time(&self) -> u32 {
        self.capture_time
    }
}

impl CopStrategy for WitnessStrategy {
    fn name(&self) -> String {
        format!("witness(k={})", self.k)
    }

    fn cops(&self) -> usize {
        self.k
    }

    fn next_probe(&self, g: &Graph, s: &KnowledgeState, round: u32, _mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        self.witness
            .probe_for(g, &s.candidates)
            .map(|p| p.vertices().to_vec())
            .ok_or(StrategyError::Stuck { round, reason: "state not resolved by the solve".into() })
    }
}
