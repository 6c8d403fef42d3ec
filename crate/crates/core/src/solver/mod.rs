//! Exact capture times and localization numbers.
//!
//! The solver explores every knowledge state reachable from the full vertex
//! set, records for each state the distinct successor patterns its probes
//! produce, and then resolves values layer by layer: layer 1 holds the
//! states some probe captures outright, layer `t` the states with a probe
//! whose every surviving class spreads into layers `< t`. The start state's
//! layer is the capture time; if the layers stop growing without reaching
//! it, the robber wins.

mod metric;
mod search;
mod symmetry;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::game::ProbeSet;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use metric::{is_resolving, metric_dimension, MetricDimension};
pub use symmetry::RootedTree;

use search::{backward_induction, explore, Expander, Keying, StateKey, UNRESOLVED};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_states: usize,
    pub max_probe_evals: u64,
    pub max_rounds: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_states: 1 << 22, max_probe_evals: 1_000_000_000, max_rounds: 10_000 }
    }
}

/// Search reductions. All are off by default; each is exact for the
/// graphs it applies to except `leaf_probes`, which restricts cops to
/// leaves and is meant for comparing against the unrestricted value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pruning {
    /// Only probe with exactly `min(k, allowed)` cops. A larger probe
    /// refines the partition of a smaller one, so this never loses.
    pub full_size_probes: bool,
    /// Only probe leaves of the graph.
    pub leaf_probes: bool,
    /// On trees: key states up to automorphism, probe one representative
    /// per orbit, and only on the subtree spanning the candidates.
    pub tree_symmetry: bool,
    /// Skip options whose successors strictly contain another option's.
    pub dominated_options: bool,
}

impl Pruning {
    /// Every exact reduction that applies to `g`.
    pub fn fast_for(g: &Graph) -> Self {
        Pruning { full_size_probes: true, leaf_probes: false, tree_symmetry: g.is_tree(), dominated_options: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AbortReason {
    States,
    ProbeEvaluations,
    Rounds,
}

impl fmt::Display for AbortReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AbortReason::States => "state budget exhausted",
            AbortReason::ProbeEvaluations => "probe evaluation budget exhausted",
            AbortReason::Rounds => "round limit reached",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Finite(u32),
    RobberWins,
    Aborted(AbortReason),
}

impl Outcome {
    pub fn rounds(&self) -> Option<u32> {
        match self {
            Outcome::Finite(t) => Some(*t),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Finite(_) => "finite",
            Outcome::RobberWins => "robber_wins",
            Outcome::Aborted(_) => "aborted",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub states: usize,
    pub probes: u64,
}

/// Per-state values from a completed solve, able to name an optimal probe
/// for any state it resolved.
pub struct Witness {
    k: usize,
    pruning: Pruning,
    keying: Keying,
    index: HashMap<StateKey, u32>,
    values: Vec<u32>,
}

impl fmt::Debug for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Witness").field("k", &self.k).field("states", &self.values.len()).finish()
    }
}

impl Witness {
    /// Guaranteed capture time from candidate set `s`, if resolved.
    pub fn value_of(&self, s: &VertexSet) -> Option<u32> {
        let id = *self.index.get(&self.keying.key(s))?;
        let v = self.values[id as usize];
        (v != UNRESOLVED).then_some(v)
    }

    /// First probe (lexicographically least, or the first orbit
    /// representative on trees) achieving the value of `s`.
    pub fn probe_for(&self, g: &Graph, s: &VertexSet) -> Option<ProbeSet> {
        let target = self.value_of(s)?;
        let ex = Expander::new(g, self.k, self.pruning, self.keying.tree());
        let mut found = None;
        ex.for_each_probe(s, &mut |p| {
            let ok = match ex.successors(s, p) {
                None => true,
                Some(next) => next.iter().all(|t| self.value_of(t).is_some_and(|v| v < target)),
            };
            if ok {
                found = Some(ProbeSet::from_sorted_unchecked(p.to_vec()));
            }
            !ok
        });
        found
    }

    /// Every state reached when the cops follow [`Witness::probe_for`] from
    /// the full vertex set, with its probe and value, in discovery order.
    pub fn strategy_tree(&self, g: &Graph) -> Vec<(VertexSet, ProbeSet, u32)> {
        let ex = Expander::new(g, self.k, self.pruning, self.keying.tree());
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![g.all_vertices()];
        while let Some(s) = stack.pop() {
            if !seen.insert(s.clone()) {
                continue;
            }
            let (Some(p), Some(v)) = (self.probe_for(g, &s), self.value_of(&s)) else { continue };
            if let Some(next) = ex.successors(&s, p.vertices()) {
                stack.extend(next.into_iter().rev());
            }
            out.push((s, p, v));
        }
        out
    }
}

#[derive(Debug)]
pub struct SolveResult {
    pub k: usize,
    pub outcome: Outcome,
    pub stats: SolveStats,
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    schema_version: u32,
    graph: &'a str,
    k: usize,
    outcome: &'static str,
    capture_time: Option<u32>,
    states: usize,
    probes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    abort_reason: Option<AbortReason>,
}

pub const SCHEMA_VERSION: u32 = 1;

impl SolveResult {
    pub fn to_json(&self, graph_name: &str) -> serde_json::Value {
        let abort_reason = match self.outcome {
            Outcome::Aborted(r) => Some(r),
            _ => None,
        };
        serde_json::to_value(ResultJson {
            schema_version: SCHEMA_VERSION,
            graph: graph_name,
            k: self.k,
            outcome: self.outcome.label(),
            capture_time: self.outcome.rounds(),
            states: self.stats.states,
            probes: self.stats.probes,
            abort_reason,
        })
        .expect("result serializes")
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub budget: Budget,
    pub pruning: Pruning,
    /// Worker threads for state expansion; 0 means one per core.
    pub threads: usize,
}

impl SolveOptions {
    pub fn fast_for(g: &Graph) -> Self {
        SolveOptions { pruning: Pruning::fast_for(g), ..Default::default() }
    }
}

fn thread_pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}

/// Capture time with `k` cops against an omniscient robber.
pub fn solve_capture_time(g: &Graph, k: usize, opts: &SolveOptions) -> SolveResult {
    assert!(k >= 1, "at least one cop");
    let keying = match (opts.pruning.tree_symmetry, RootedTree::at_center(g)) {
        (true, Some(t)) => Keying::Tree(symmetry::Canonicalizer::new(t)),
        _ => Keying::Plain,
    };
    let pool = thread_pool(opts.threads);
    let ex = Expander::new(g, k, opts.pruning, keying.tree());
    let sg = match explore(&ex, &keying, g.all_vertices(), &opts.budget, &opts.pruning, &pool) {
        Ok(sg) => sg,
        Err((reason, states, probes)) => {
            return SolveResult {
                k,
                outcome: Outcome::Aborted(reason),
                stats: SolveStats { states, probes },
                witness: None,
            }
        }
    };
    let stats = SolveStats { states: sg.sets.len(), probes: sg.probes };
    let (values, hit_limit) = backward_induction(&sg, opts.budget.max_rounds);
    let outcome = match values[0] {
        UNRESOLVED if hit_limit => Outcome::Aborted(AbortReason::Rounds),
        UNRESOLVED => Outcome::RobberWins,
        t => Outcome::Finite(t),
    };
    let witness = Witness { k, pruning: opts.pruning, keying, index: sg.index, values };
    SolveResult { k, outcome, stats, witness: Some(witness) }
}

#[derive(Debug)]
pub struct LocalizationNumber {
    /// Least `k` with a finite capture time, if one was found before an abort.
    pub zeta: Option<usize>,
    pub per_k: Vec<SolveResult>,
}

/// Tries `k = 1, 2, …` until a solve is finite or aborts.
pub fn localization_number(g: &Graph, opts: &SolveOptions) -> LocalizationNumber {
    let mut per_k = Vec::new();
    for k in 1..=g.n() {
        let r = solve_capture_time(g, k, opts);
        let outcome = r.outcome;
        per_k.push(r);
        match outcome {
            Outcome::Finite(_) => return LocalizationNumber { zeta: Some(k), per_k },
            Outcome::Aborted(_) => return LocalizationNumber { zeta: None, per_k },
            Outcome::RobberWins => {}
        }
    }
    unreachable!("probing every vertex captures in one round")
}
