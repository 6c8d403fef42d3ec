//! Rules of the localization game expressed over knowledge states.
//!
//! A knowledge state is the set of vertices the robber may occupy given
//! every answer the cops have received. One round is: the cops probe a set
//! of vertices and learn the robber's distance vector, which restricts the
//! candidates to one class of the partition induced by the probe; then the
//! robber moves, which spreads that class to its closed neighborhood.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProbeError {
    #[error("probe vertex {vertex} out of range (n = {n})")]
    OutOfRange { vertex: usize, n: usize },
    #[error("probe vertex {0} repeated")]
    Duplicate(usize),
    #[error("probe has {size} vertices but only {cops} cops")]
    TooLarge { size: usize, cops: usize },
    #[error("empty probe")]
    Empty,
}

/// The vertices probed in one round, distinct and in the order given.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ProbeSet(Vec<usize>);

impl ProbeSet {
    pub fn new(vertices: Vec<usize>, n: usize) -> Result<Self, ProbeError> {
        if vertices.is_empty() {
            return Err(ProbeError::Empty);
        }
        let mut seen = vec![false; n];
        for &v in &vertices {
            if v >= n {
                return Err(ProbeError::OutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(ProbeError::Duplicate(v));
            }
        }
        Ok(ProbeSet(vertices))
    }

    /// Like [`ProbeSet::new`], additionally bounding the size by `cops`.
    pub fn with_cops(vertices: Vec<usize>, n: usize, cops: usize) -> Result<Self, ProbeError> {
        if vertices.len() > cops {
            return Err(ProbeError::TooLarge { size: vertices.len(), cops });
        }
        Self::new(vertices, n)
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        ProbeSet(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distance vector of `v` with respect to this probe.
    pub fn distance_vector(&self, g: &Graph, v: usize) -> Vec<u32> {
        self.0.iter().map(|&u| g.dist(u, v)).collect()
    }
}

impl fmt::Debug for ProbeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Phase {
    /// Candidates after the robber's move; the cops are about to probe.
    PreProbe,
    /// Candidates consistent with the last probe, before the robber moves.
    PostProbe,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnowledgeState {
    pub candidates: VertexSet,
    pub phase: Phase,
}

impl KnowledgeState {
    /// Start of the game: the robber may be anywhere.
    pub fn initial(g: &Graph) -> Self {
        KnowledgeState { candidates: g.all_vertices(), phase: Phase::PreProbe }
    }

    pub fn pre_probe(candidates: VertexSet) -> Self {
        KnowledgeState { candidates, phase: Phase::PreProbe }
    }
}

/// The partition of a candidate set by distance vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeOutcome {
    /// Classes sorted by distance vector.
    pub classes: Vec<(Vec<u32>, VertexSet)>,
}

impl ProbeOutcome {
    pub fn all_singletons(&self) -> bool {
        self.classes.iter().all(|(_, c)| c.len() == 1)
    }

    pub fn class_of(&self, vector: &[u32]) -> Option<&VertexSet> {
        self.classes.iter().find(|(d, _)| d == vector).map(|(_, c)| c)
    }
}

pub fn partition_by_distance(g: &Graph, candidates: &VertexSet, probe: &ProbeSet) -> ProbeOutcome {
    let mut groups: HashMap<Vec<u32>, VertexSet> = HashMap::new();
    for v in candidates.iter() {
        groups
            .entry(probe.distance_vector(g, v))
            .or_insert_with(|| VertexSet::empty(g.n()))
            .insert(v);
    }
    let mut classes: Vec<_> = groups.into_iter().collect();
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    ProbeOutcome { classes }
}

/// Union of closed neighborhoods: every vertex the robber can reach in one
/// move (including staying put) from somewhere in `set`.
pub fn spread(g: &Graph, set: &VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for v in set.iter() {
        out.union_with(g.closed_neighborhood(v));
    }
    out
}

/// One surviving branch of a round: the robber answered `distances`, was
/// known to be in `class`, then moved, giving `next`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub distances: Vec<u32>,
    pub class: VertexSet,
    pub next: KnowledgeState,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// Every class is a single vertex: the robber is located this round.
    Captured,
    /// The multi-vertex classes the robber can still hide in.
    Escapes(Vec<Branch>),
}

pub fn step(g: &Graph, state: &KnowledgeState, probe: &ProbeSet) -> Step {
    debug_assert_eq!(state.phase, Phase::PreProbe);
    let outcome = partition_by_distance(g, &state.candidates, probe);
    let branches: Vec<Branch> = outcome
        .classes
        .into_iter()
        .filter(|(_, c)| c.len() >= 2)
        .map(|(distances, class)| {
            let next = KnowledgeState::pre_probe(spread(g, &class));
            Branch { distances, class, next }
        })
        .collect();
    if branches.is_empty() {
        Step::Captured
    } else {
        Step::Escapes(branches)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, grid, path, star};

    fn probe(v: &[usize], n: usize) -> ProbeSet {
        ProbeSet::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn probe_validation() {
        assert_eq!(ProbeSet::new(vec![0, 0], 3), Err(ProbeError::Duplicate(0)));
        assert_eq!(ProbeSet::new(vec![3], 3), Err(ProbeError::OutOfRange { vertex: 3, n: 3 }));
        assert_eq!(ProbeSet::with_cops(vec![0, 1], 3, 1), Err(ProbeError::TooLarge { size: 2, cops: 1 }));
        assert_eq!(ProbeSet::new(vec![], 3), Err(ProbeError::Empty));
    }

    #[test]
    fn star_center_probe() {
        let g = star(3).unwrap();
        let out = partition_by_distance(&g, &g.all_vertices(), &probe(&[0], 4));
        assert_eq!(out.classes.len(), 2);
        assert_eq!(out.class_of(&[0]).unwrap().to_vec(), vec![0]);
        assert_eq!(out.class_of(&[1]).unwrap().to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn grid_corners_resolve() {
        let g = grid(8, 8).unwrap();
        let out = partition_by_distance(&g, &g.all_vertices(), &probe(&[0, 7], 64));
        assert_eq!(out.classes.len(), 64);
        assert!(out.all_singletons());
    }

    #[test]
    fn spread_examples() {
        let p4 = path(4).unwrap();
        assert_eq!(spread(&p4, &VertexSet::singleton(4, 1)).to_vec(), vec![0, 1, 2]);
        let s = star(3).unwrap();
        assert_eq!(spread(&s, &VertexSet::from_vertices(4, [1, 2, 3])).len(), 4);
        // C4 probed at 0: the distance-1 class {1, 3} spreads to everything.
        let c4 = cycle(4).unwrap();
        let out = partition_by_distance(&c4, &c4.all_vertices(), &probe(&[0], 4));
        let ones = out.class_of(&[1]).unwrap();
        assert_eq!(ones.to_vec(), vec![1, 3]);
        assert_eq!(spread(&c4, ones).len(), 4);
    }

    #[test]
    fn step_on_star_leaves() {
        let g = star(3).unwrap();
        let s = KnowledgeState::pre_probe(VertexSet::from_vertices(4, [1, 2, 3]));
        match step(&g, &s, &probe(&[1], 4)) {
            Step::Escapes(b) => {
                assert_eq!(b.len(), 1);
                assert_eq!(b[0].distances, vec![2]);
                assert_eq!(b[0].class.to_vec(), vec![2, 3]);
                assert_eq!(b[0].next.candidates.to_vec(), vec![0, 2, 3]);
            }
            Step::Captured => panic!("two leaves tie at distance 2"),
        }
    }

    #[test]
    fn singleton_state_is_captured_by_any_probe() {
        let g = path(5).unwrap();
        for v in 0..5 {
            for u in 0..5 {
                let s = KnowledgeState::pre_probe(VertexSet::singleton(5, v));
                assert_eq!(step(&g, &s, &probe(&[u], 5)), Step::Captured);
            }
        }
    }
}
