//! Worst case of a fixed strategy against an omniscient robber.

use std::collections::HashMap;

use serde::Serialize;

use super::{CopStrategy, Memory, StrategyError};
use crate::game::{partition_by_distance, spread, KnowledgeState, ProbeSet};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "rounds", rename_all = "snake_case")]
pub enum WorstCase {
    /// Capture is guaranteed within this many rounds, and the robber can
    /// delay it that long.
    Rounds(u32),
    /// Some robber survives the given round cap.
    Exceeded(u32),
}

impl WorstCase {
    pub fn rounds(&self) -> Option<u32> {
        match self {
            WorstCase::Rounds(r) => Some(*r),
            WorstCase::Exceeded(_) => None,
        }
    }

    /// True if capture is guaranteed within `bound` rounds.
    pub fn within(&self, bound: u32) -> bool {
        self.rounds().is_some_and(|r| r <= bound)
    }
}

/// One round of a recorded play.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundRecord {
    pub round: u32,
    /// Candidates before the probe.
    pub candidates: Vec<usize>,
    pub probe: Vec<usize>,
    /// The answer the robber gave.
    pub distances: Vec<u32>,
    /// Candidates consistent with that answer.
    pub class: Vec<usize>,
    pub captured: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvalReport {
    pub strategy: String,
    pub cops: usize,
    pub worst_case: WorstCase,
    /// A longest play: the robber always picks a class that delays capture most.
    pub transcript: Vec<RoundRecord>,
}

type Key = (VertexSet, u32, Memory);

struct Evaluator<'a> {
    g: &'a Graph,
    strat: &'a dyn CopStrategy,
    cap: u32,
    /// Rounds to capture from a state, `None` if the cap is exceeded.
    memo: HashMap<Key, Option<u32>>,
}

/// What happens in one round from a given position.
enum Round {
    Exhausted,
    Captured { probe: ProbeSet },
    Escapes { probe: ProbeSet, branches: Vec<(Vec<u32>, VertexSet, VertexSet, Memory)> },
}

impl<'a> Evaluator<'a> {
    fn play_round(&self, s: &VertexSet, round: u32, mem: &Memory) -> Result<(Round, Memory), StrategyError> {
        let mut mem = mem.clone();
        let state = KnowledgeState::pre_probe(s.clone());
        let raw = match self.strat.next_probe(self.g, &state, round, &mut mem) {
            Ok(p) => p,
            Err(StrategyError::Exhausted { .. }) => return Ok((Round::Exhausted, mem)),
            Err(e) => return Err(e),
        };
        let probe = ProbeSet::with_cops(raw.clone(), self.g.n(), self.strat.cops())
            .map_err(|source| StrategyError::InvalidProbe { round, probe: raw, source })?;
        let outcome = partition_by_distance(self.g, s, &probe);
        if outcome.all_singletons() {
            return Ok((Round::Captured { probe }, mem));
        }
        let mut branches = Vec::new();
        for (d, class) in outcome.classes {
            if class.len() < 2 {
                continue;
            }
            let mut m = mem.clone();
            self.strat.observe(self.g, &probe, &d, &class, &mut m);
            let next = spread(self.g, &class);
            branches.push((d, class, next, m));
        }
        Ok((Round::Escapes { probe, branches }, mem))
    }

    fn value(&mut self, s: &VertexSet, round: u32, mem: &Memory) -> Result<Option<u32>, StrategyError> {
        if round > self.cap {
            return Ok(None);
        }
        let key = (s.clone(), round, mem.clone());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let (r, _) = self.play_round(s, round, mem)?;
        let v = match r {
            Round::Exhausted => None,
            Round::Captured { .. } => Some(1),
            Round::Escapes { branches, .. } => {
                let mut worst = Some(0);
                for (_, _, next, m) in &branches {
                    match self.value(next, round + 1, m)? {
                        None => {
                            worst = None;
                            break;
                        }
                        Some(t) => worst = worst.map(|w: u32| w.max(t)),
                    }
                }
                worst.map(|w| w + 1)
            }
        };
        self.memo.insert(key, v);
        Ok(v)
    }
}

/// Plays `strat` against every robber choice for at most `cap` rounds.
pub fn evaluate_strategy(g: &Graph, strat: &dyn CopStrategy, cap: u32) -> Result<EvalReport, StrategyError> {
    assert!(cap >= 1, "round cap must be positive");
    let mut ev = Evaluator { g, strat, cap, memo: HashMap::new() };
    let start = g.all_vertices();
    let mem0 = strat.init(g);
    let total = ev.value(&start, 1, &mem0)?;
    let worst_case = match total {
        Some(t) => WorstCase::Rounds(t),
        None => WorstCase::Exceeded(cap),
    };

    let mut transcript = Vec::new();
    let (mut s, mut mem) = (start, mem0);
    for round in 1..=cap {
        let (r, _) = ev.play_round(&s, round, &mem)?;
        match r {
            Round::Exhausted => break,
            Round::Captured { probe } => {
                let outcome = partition_by_distance(g, &s, &probe);
                let (d, class) = outcome.classes.into_iter().next().expect("nonempty state");
                transcript.push(RoundRecord {
                    round,
                    candidates: s.to_vec(),
                    probe: probe.vertices().to_vec(),
                    distances: d,
                    class: class.to_vec(),
                    captured: true,
                });
                break;
            }
            Round::Escapes { probe, branches } => {
                let mut best: Option<(usize, Option<u32>)> = None;
                for (i, (_, _, next, m)) in branches.iter().enumerate() {
                    let v = ev.value(next, round + 1, m)?;
                    let better = match best {
                        None => true,
                        Some((_, None)) => false,
                        Some((_, Some(b))) => v.is_none_or(|x| x > b),
                    };
                    if better {
                        best = Some((i, v));
                    }
                }
                let (i, _) = best.expect("escaping round has a branch");
                let (d, class, next, m) = branches.into_iter().nth(i).expect("index in range");
                transcript.push(RoundRecord {
                    round,
                    candidates: s.to_vec(),
                    probe: probe.vertices().to_vec(),
                    distances: d,
                    class: class.to_vec(),
                    captured: false,
                });
                s = next;
                mem = m;
            }
        }
    }
    Ok(EvalReport { strategy: strat.name(), cops: strat.cops(), worst_case, transcript })
}

/// Re-derives every round of `report` from the game rules alone.
pub fn replay_transcript(g: &Graph, report: &EvalReport) -> Result<(), String> {
    let n = g.n();
    let mut expected = g.all_vertices();
    for rec in &report.transcript {
        if rec.candidates != expected.to_vec() {
            return Err(format!("round {}: candidates differ", rec.round));
        }
        let probe = ProbeSet::new(rec.probe.clone(), n).map_err(|e| format!("round {}: {e}", rec.round))?;
        let outcome = partition_by_distance(g, &expected, &probe);
        let class = outcome
            .class_of(&rec.distances)
            .ok_or_else(|| format!("round {}: answer not produced by probe", rec.round))?;
        if class.to_vec() != rec.class {
            return Err(format!("round {}: class differs", rec.round));
        }
        if rec.captured != outcome.all_singletons() {
            return Err(format!("round {}: capture flag differs", rec.round));
        }
        expected = spread(g, class);
    }
    Ok(())
}
