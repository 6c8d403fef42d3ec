//! Resolving sets and metric dimension by exhaustive search.

use std::collections::HashSet;

use crate::game::ProbeSet;
use crate::graph::Graph;

/// Whether distance vectors to `probe` are pairwise distinct on `V(g)`.
pub fn is_resolving(g: &Graph, probe: &[usize]) -> bool {
    let mut seen = HashSet::with_capacity(g.n());
    (0..g.n()).all(|v| seen.insert(probe.iter().map(|&u| g.dist(u, v)).collect::<Vec<u32>>()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricDimension {
    pub beta: usize,
    pub witness: ProbeSet,
    pub subsets_checked: u64,
}

/// Smallest resolving set, lexicographically least among those of minimum
/// size. Returns `None` if more than `max_subsets` subsets would be tested.
pub fn metric_dimension(g: &Graph, max_subsets: u64) -> Option<MetricDimension> {
    let n = g.n();
    if n == 1 {
        return Some(MetricDimension {
            beta: 1,
            witness: ProbeSet::new(vec![0], 1).expect("valid"),
            subsets_checked: 1,
        });
    }
    let mut checked = 0u64;
    for size in 1..n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            checked += 1;
            if checked > max_subsets {
                return None;
            }
            if is_resolving(g, &idx) {
                let witness = ProbeSet::new(idx, n).expect("distinct in range");
                return Some(MetricDimension { beta: size, witness, subsets_checked: checked });
            }
            // Advance to the next combination in lexicographic order.
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("all but one vertex always resolve")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, hypercube, path, star};

    #[test]
    fn examples() {
        assert_eq!(metric_dimension(&path(5).unwrap(), 1000).unwrap().beta, 1);
        let s = metric_dimension(&star(3).unwrap(), 1000).unwrap();
        assert_eq!(s.beta, 2);
        assert_eq!(s.witness.vertices(), &[1, 2]);
        assert!(!is_resolving(&star(3).unwrap(), &[0]));
        let g = grid(8, 8).unwrap();
        assert!(is_resolving(&g, &[0, 7]));
        let q3 = hypercube(3).unwrap();
        assert!(is_resolving(&q3, &[0, 4, 2, 1]));
        assert!(is_resolving(&q3, &(0..8).collect::<Vec<_>>()));
    }

    #[test]
    fn budget() {
        assert!(metric_dimension(&star(6).unwrap(), 3).is_none());
    }
}
