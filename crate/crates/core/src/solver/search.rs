//! State exploration and backward induction.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::symmetry::{probe_orbit_reps, Canonicalizer, RootedTree};
use super::{AbortReason, Budget, Pruning};
use crate::game::spread;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub(crate) const UNRESOLVED: u32 = u32::MAX;

/// How candidate sets are keyed in the state table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum StateKey {
    Set(VertexSet),
    Canon(u32),
}

pub(crate) enum Keying {
    Plain,
    Tree(Canonicalizer),
}

impl Keying {
    pub(crate) fn key(&self, s: &VertexSet) -> StateKey {
        match self {
            Keying::Plain => StateKey::Set(s.clone()),
            Keying::Tree(c) => StateKey::Canon(c.key(s)),
        }
    }

    pub(crate) fn tree(&self) -> Option<&RootedTree> {
        match self {
            Keying::Plain => None,
            Keying::Tree(c) => Some(c.tree()),
        }
    }
}

/// Probe generation and evaluation for one graph and cop count. Pure, so
/// states can be expanded concurrently.
pub(crate) struct Expander<'a> {
    g: &'a Graph,
    k: usize,
    pruning: Pruning,
    tree: Option<&'a RootedTree>,
    leaves: VertexSet,
    /// Mixed-radix base for packing a distance vector into a `u64`, or 0
    /// when the vector does not fit.
    base: u64,
}

pub(crate) struct Expansion {
    pub captured: bool,
    /// Distinct successor lists, one per useful probe class pattern.
    pub options: Vec<Vec<VertexSet>>,
    pub probes: u64,
}

impl<'a> Expander<'a> {
    pub(crate) fn new(g: &'a Graph, k: usize, pruning: Pruning, tree: Option<&'a RootedTree>) -> Self {
        let base = g.diameter() as u64 + 1;
        let fits = base.checked_pow(k as u32).is_some();
        let leaves = VertexSet::from_vertices(g.n(), g.leaves());
        Expander { g, k, pruning, tree, leaves, base: if fits { base } else { 0 } }
    }

    fn allowed(&self, s: &VertexSet) -> VertexSet {
        if self.pruning.leaf_probes && self.leaves.len() >= 2 {
            return self.leaves.clone();
        }
        match self.tree {
            // A cop off the smallest subtree spanning `s` measures the same
            // partition as its projection onto that subtree.
            Some(t) => t.steiner(s),
            None => self.g.all_vertices(),
        }
    }

    /// Calls `visit` on each candidate probe, in lexicographic order for
    /// plain enumeration, until it returns `false`.
    pub(crate) fn for_each_probe(&self, s: &VertexSet, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let allowed = self.allowed(s);
        let top = self.k.min(allowed.len());
        let low = if self.pruning.full_size_probes { top } else { 1 };
        if top == 0 {
            return;
        }
        match self.tree {
            Some(t) => {
                for p in probe_orbit_reps(t, s, &allowed, low..=top) {
                    if !visit(&p) {
                        return;
                    }
                }
            }
            None => {
                let pool = allowed.to_vec();
                let mut cur = Vec::with_capacity(top);
                lex_subsets(&pool, 0, low, top, &mut cur, visit);
            }
        }
    }

    /// Classes of size at least two produced by `probe` on `s`.
    pub(crate) fn split(&self, s: &VertexSet, probe: &[usize]) -> Vec<VertexSet> {
        let n = self.g.n();
        let mut out = Vec::new();
        if self.base > 0 {
            let mut keyed: Vec<(u64, usize)> = s
                .iter()
                .map(|v| (probe.iter().fold(0u64, |acc, &u| acc * self.base + self.g.dist(u, v) as u64), v))
                .collect();
            keyed.sort_unstable();
            for run in keyed.chunk_by(|a, b| a.0 == b.0) {
                if run.len() >= 2 {
                    out.push(VertexSet::from_vertices(n, run.iter().map(|x| x.1)));
                }
            }
        } else {
            let mut groups: HashMap<Vec<u32>, VertexSet> = HashMap::new();
            for v in s.iter() {
                let d = probe.iter().map(|&u| self.g.dist(u, v)).collect();
                groups.entry(d).or_insert_with(|| VertexSet::empty(n)).insert(v);
            }
            let mut classes: Vec<_> = groups.into_iter().filter(|(_, c)| c.len() >= 2).collect();
            classes.sort_by(|a, b| a.0.cmp(&b.0));
            out.extend(classes.into_iter().map(|(_, c)| c));
        }
        out
    }

    /// Successor candidate sets after `probe`, or `None` on capture.
    pub(crate) fn successors(&self, s: &VertexSet, probe: &[usize]) -> Option<Vec<VertexSet>> {
        let classes = self.split(s, probe);
        if classes.is_empty() {
            return None;
        }
        let mut next: Vec<VertexSet> = classes.iter().map(|c| spread(self.g, c)).collect();
        next.sort();
        next.dedup();
        Some(next)
    }

    pub(crate) fn expand(&self, s: &VertexSet) -> Expansion {
        let mut seen: HashSet<Vec<VertexSet>> = HashSet::new();
        let mut options = Vec::new();
        let mut captured = false;
        let mut probes = 0u64;
        self.for_each_probe(s, &mut |p| {
            probes += 1;
            match self.successors(s, p) {
                None => {
                    captured = true;
                    false
                }
                Some(next) => {
                    if seen.insert(next.clone()) {
                        options.push(next);
                    }
                    true
                }
            }
        });
        if captured {
            options.clear();
        }
        Expansion { captured, options, probes }
    }
}

fn lex_subsets(
    pool: &[usize],
    from: usize,
    low: usize,
    top: usize,
    cur: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    for i in from..pool.len() {
        cur.push(pool[i]);
        if cur.len() >= low && !visit(cur) {
            cur.pop();
            return false;
        }
        if cur.len() < top && !lex_subsets(pool, i + 1, low, top, cur, visit) {
            cur.pop();
            return false;
        }
        cur.pop();
    }
    true
}

/// Reachable state graph: state `i` has successor options `options[i]`, an
/// empty option meaning some probe captures outright.
pub(crate) struct StateGraph {
    pub sets: Vec<VertexSet>,
    pub index: HashMap<StateKey, u32>,
    pub options: Vec<Vec<Vec<u32>>>,
    pub probes: u64,
}

pub(crate) fn explore(
    ex: &Expander,
    keying: &Keying,
    start: VertexSet,
    budget: &Budget,
    pruning: &Pruning,
    pool: &rayon::ThreadPool,
) -> Result<StateGraph, (AbortReason, usize, u64)> {
    const CHUNK: usize = 512;
    let mut sg = StateGraph { sets: Vec::new(), index: HashMap::new(), options: Vec::new(), probes: 0 };
    sg.index.insert(keying.key(&start), 0);
    sg.sets.push(start);
    let mut next = 0usize;
    while next < sg.sets.len() {
        let end = (next + CHUNK).min(sg.sets.len());
        let batch: Vec<Expansion> = pool.install(|| sg.sets[next..end].par_iter().map(|s| ex.expand(s)).collect());
        for (offset, exp) in batch.into_iter().enumerate() {
            let me = (next + offset) as u32;
            sg.probes += exp.probes;
            let mut opts: Vec<Vec<u32>> = Vec::new();
            if exp.captured {
                opts.push(Vec::new());
            } else {
                let mut seen = HashSet::new();
                for option in exp.options {
                    let mut ids = Vec::with_capacity(option.len());
                    for set in option {
                        let key = keying.key(&set);
                        let id = match sg.index.get(&key) {
                            Some(&id) => id,
                            None => {
                                let id = sg.sets.len() as u32;
                                sg.index.insert(key, id);
                                sg.sets.push(set);
                                id
                            }
                        };
                        ids.push(id);
                    }
                    ids.sort_unstable();
                    ids.dedup();
                    // An option leading back to this state never improves it.
                    if ids.binary_search(&me).is_err() && seen.insert(ids.clone()) {
                        opts.push(ids);
                    }
                }
                if pruning.dominated_options {
                    opts = drop_dominated(opts);
                }
            }
            sg.options.push(opts);
        }
        next = end;
        if sg.sets.len() > budget.max_states {
            return Err((AbortReason::States, sg.sets.len(), sg.probes));
        }
        if sg.probes > budget.max_probe_evals {
            return Err((AbortReason::ProbeEvaluations, sg.sets.len(), sg.probes));
        }
    }
    Ok(sg)
}

/// Removes options whose successor list strictly contains another option's.
fn drop_dominated(mut opts: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    opts.sort_by_key(|o| o.len());
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for o in opts {
        let covered = kept.iter().any(|k| k.len() < o.len() && k.iter().all(|x| o.binary_search(x).is_ok()));
        if !covered {
            kept.push(o);
        }
    }
    kept
}

/// Least fixed point by layers: a state's value is one more than the
/// largest value among the successors of its best option. Stops after the
/// layer that resolves state 0, or when no layer is left, or at `max_rounds`.
pub(crate) fn backward_induction(sg: &StateGraph, max_rounds: u32) -> (Vec<u32>, bool) {
    let n = sg.sets.len();
    let mut value = vec![UNRESOLVED; n];
    let mut owner = Vec::new();
    let mut remaining = Vec::new();
    let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut frontier = Vec::new();
    for (i, opts) in sg.options.iter().enumerate() {
        for o in opts {
            if o.is_empty() {
                if value[i] == UNRESOLVED {
                    value[i] = 1;
                    frontier.push(i as u32);
                }
                continue;
            }
            let oid = owner.len() as u32;
            owner.push(i as u32);
            remaining.push(o.len() as u32);
            for &s in o {
                preds[s as usize].push(oid);
            }
        }
    }
    let mut t = 1u32;
    while !frontier.is_empty() && value[0] == UNRESOLVED {
        if t >= max_rounds {
            return (value, true);
        }
        let mut layer = Vec::new();
        for &s in &frontier {
            for &oid in &preds[s as usize] {
                let r = &mut remaining[oid as usize];
                *r -= 1;
                if *r == 0 {
                    let st = owner[oid as usize] as usize;
                    if value[st] == UNRESOLVED {
                        value[st] = t + 1;
                        layer.push(st as u32);
                    }
                }
            }
        }
        frontier = layer;
        t += 1;
    }
    (value, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_and_sizes() {
        let pool = [0, 1, 2];
        let mut seen = Vec::new();
        let mut cur = Vec::new();
        lex_subsets(&pool, 0, 1, 2, &mut cur, &mut |p| {
            seen.push(p.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0], vec![0, 1], vec![0, 2], vec![1], vec![1, 2], vec![2]]);
        let mut full = Vec::new();
        lex_subsets(&pool, 0, 2, 2, &mut cur, &mut |p| {
            full.push(p.to_vec());
            true
        });
        assert_eq!(full, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn dominated_options_dropped() {
        let kept = drop_dominated(vec![vec![1, 2], vec![2], vec![3]]);
        assert_eq!(kept, vec![vec![2], vec![3]]);
    }
}
