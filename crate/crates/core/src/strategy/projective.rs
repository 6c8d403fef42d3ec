//! Two-phase strategy on the incidence graph of a projective plane, in the
//! numbering of [`ProjectivePlane::incidence_graph`](crate::designs::ProjectivePlane::incidence_graph):
//! points `0..N`, lines `N..2N`.
//!
//! Phase one keeps cops on the lines `A` through a fixed point `u2` (other
//! than a fixed line `u1` through it) and sweeps batches of the points of
//! `u1` until the robber is known to lie in the neighborhood of a single
//! vertex. Phase two shrinks that neighborhood: from a class `C ⊆ N(u)`,
//! probe all but one vertex of `C` together with points (or lines) `D`
//! through a vertex `v` on the side of `u`, each of which pins one
//! escape route.

use super::{CopStrategy, Memory, StrategyError};
use crate::game::{KnowledgeState, ProbeSet};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

const PHASE_ONE: usize = 0;
const PHASE_TWO: usize = 1;
const LOST: usize = 2;

#[derive(Clone, Debug)]
pub struct ProjectiveTwoPhase {
    q: usize,
    k: usize,
    a: Vec<usize>,
    sweep: Vec<usize>,
    batch: usize,
}

fn common_neighbor(g: &Graph, set: &[usize]) -> Option<usize> {
    let (&first, rest) = set.split_first()?;
    g.neighbors(first).iter().copied().find(|&u| rest.iter().all(|&x| g.has_edge(u, x)))
}

impl ProjectiveTwoPhase {
    pub fn new(g: &Graph, q: usize, k: usize) -> Result<Self, StrategyError> {
        let big_n = q * q + q + 1;
        if q < 2 || g.n() != 2 * big_n || (0..g.n()).any(|v| g.degree(v) != q + 1) {
            return Err(StrategyError::Precondition(format!("graph is not a plane incidence graph of order {q}")));
        }
        if k < q + 1 {
            return Err(StrategyError::Precondition(format!("need k >= q + 1 = {}, got {k}", q + 1)));
        }
        let u1 = big_n;
        let u2 = g.neighbors(u1)[0];
        let a: Vec<usize> = g.neighbors(u2).iter().copied().filter(|&x| x != u1).collect();
        let sweep: Vec<usize> = g.neighbors(u1).iter().copied().filter(|&x| x != u2).collect();
        let batch = (k - q).min(q - 1);
        Ok(ProjectiveTwoPhase { q, k, a, sweep, batch })
    }

    /// `⌈(q−1)/(k−q)⌉ + ⌈q/(k−q+1)⌉`.
    pub fn bound(&self) -> u32 {
        let (q, k) = (self.q, self.k);
        ((q - 1).div_ceil(k - q) + q.div_ceil(k - q + 1)) as u32
    }

    fn shrink_probe(&self, g: &Graph, class: &[usize]) -> Option<Vec<usize>> {
        let u = common_neighbor(g, class)?;
        let alpha = class.len();
        let (on_c, spare, d_size) = if alpha >= 3 {
            (&class[..alpha - 1], Some(class[alpha - 1]), (self.k + 1 - alpha).min(self.q))
        } else {
            (class, None, (self.k - 2).min(self.q))
        };
        let w = g.neighbors(u).iter().copied().find(|x| !class.contains(x)).or(spare)?;
        let v = g.neighbors(w).iter().copied().find(|&x| x != u)?;
        let mut probe = on_c.to_vec();
        probe.extend(g.neighbors(v).iter().copied().filter(|&x| x != w).take(d_size));
        Some(probe)
    }
}

impl CopStrategy for ProjectiveTwoPhase {
    fn name(&self) -> String {
        format!("projective(q={},k={})", self.q, self.k)
    }

    fn cops(&self) -> usize {
        self.k
    }

    fn init(&self, _g: &Graph) -> Memory {
        vec![PHASE_ONE, 0]
    }

    fn next_probe(&self, g: &Graph, _s: &KnowledgeState, round: u32, mem: &mut Memory) -> Result<Vec<usize>, StrategyError> {
        match mem[0] {
            PHASE_ONE => {
                let start = mem[1] * self.batch;
                if start >= self.sweep.len() {
                    return Err(StrategyError::Stuck { round, reason: "first phase swept every point".into() });
                }
                mem[1] += 1;
                let end = (start + self.batch).min(self.sweep.len());
                let mut probe = self.a.clone();
                probe.extend_from_slice(&self.sweep[start..end]);
                Ok(probe)
            }
            PHASE_TWO => self
                .shrink_probe(g, &mem[2..])
                .ok_or(StrategyError::Stuck { round, reason: "class has no usable common neighbor".into() }),
            _ => Err(StrategyError::Stuck { round, reason: "class left every neighborhood".into() }),
        }
    }

    fn observe(&self, g: &Graph, _probe: &ProbeSet, _d: &[u32], class: &VertexSet, mem: &mut Memory) {
        let members = class.to_vec();
        if common_neighbor(g, &members).is_some() {
            mem.truncate(2);
            mem[0] = PHASE_TWO;
            mem.extend(members);
        } else if mem[0] == PHASE_TWO {
            mem.truncate(2);
            mem[0] = LOST;
        }
    }
}
