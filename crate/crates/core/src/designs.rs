//! Finite projective planes over prime fields and their incidence graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("plane order must be a prime >= 2, got {0}")]
    NotPrime(u64),
}

/// The first axiom or parameter count a candidate plane fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneViolation {
    #[error("point index {point} out of range")]
    PointOutOfRange { point: usize },
    #[error("points {0} and {1} lie on {2} common lines (axiom 1)")]
    PointPair(usize, usize, usize),
    #[error("lines {0} and {1} meet in {2} points (axiom 2)")]
    LinePair(usize, usize, usize),
    #[error("no four points with at most two on any line (axiom 3)")]
    NoQuadrilateral,
    #[error("expected {expected} lines, found {found}")]
    LineCount { expected: usize, found: usize },
    #[error("line {line} has {found} points, expected {expected}")]
    LineSize { line: usize, found: usize, expected: usize },
    #[error("point {point} lies on {found} lines, expected {expected}")]
    PointDegree { point: usize, found: usize, expected: usize },
}

/// A projective plane of order `q`: points `0..q²+q+1` and a list of
/// lines, each a sorted list of point ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectivePlane {
    pub q: u64,
    pub lines: Vec<Vec<usize>>,
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Normalized nonzero triples over `Z_q` (first nonzero coordinate is 1),
/// in lexicographic order.
fn normalized_triples(q: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let first = [a, b, c].into_iter().find(|&x| x != 0);
                if first == Some(1) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// `PG(2, q)` for prime `q`. Point `i` and line `j` are the `i`-th and
/// `j`-th normalized triples; they are incident iff their dot product
/// vanishes mod `q`.
pub fn build_pg2(q: u64) -> Result<ProjectivePlane, DesignError> {
    if !is_prime(q) {
        return Err(DesignError::NotPrime(q));
    }
    let triples = normalized_triples(q);
    let lines = triples
        .iter()
        .map(|l| {
            triples
                .iter()
                .enumerate()
                .filter(|(_, p)| (l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % q == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Ok(ProjectivePlane { q, lines })
}

/// The Fano plane with points `1..=7` relabelled `0..=6` and lines
/// `123, 174, 165, 246, 275, 345, 376`.
pub fn fano_plane() -> ProjectivePlane {
    let raw = [[1, 2, 3], [1, 7, 4], [1, 6, 5], [2, 4, 6], [2, 7, 5], [3, 4, 5], [3, 7, 6]];
    let lines = raw
        .iter()
        .map(|l| {
            let mut v: Vec<usize> = l.iter().map(|&p| p - 1).collect();
            v.sort_unstable();
            v
        })
        .collect();
    ProjectivePlane { q: 2, lines }
}

impl ProjectivePlane {
    pub fn num_points(&self) -> usize {
        let q = self.q as usize;
        q * q + q + 1
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    fn incidence(&self) -> Result<Vec<Vec<bool>>, PlaneViolation> {
        let np = self.num_points();
        let mut inc = vec![vec![false; np]; self.lines.len()];
        for (j, line) in self.lines.iter().enumerate() {
            for &p in line {
                if p >= np {
                    return Err(PlaneViolation::PointOutOfRange { point: p });
                }
                inc[j][p] = true;
            }
        }
        Ok(inc)
    }

    /// Checks the three plane axioms in order, then the parameter counts.
    pub fn validate(&self) -> Result<(), PlaneViolation> {
        let inc = self.incidence()?;
        let np = self.num_points();
        let nl = self.lines.len();
        for a in 0..np {
            for b in a + 1..np {
                let common = (0..nl).filter(|&j| inc[j][a] && inc[j][b]).count();
                if common != 1 {
                    return Err(PlaneViolation::PointPair(a, b, common));
                }
            }
        }
        for i in 0..nl {
            for j in i + 1..nl {
                let meet = (0..np).filter(|&p| inc[i][p] && inc[j][p]).count();
                if meet != 1 {
                    return Err(PlaneViolation::LinePair(i, j, meet));
                }
            }
        }
        if !self.has_quadrilateral(&inc) {
            return Err(PlaneViolation::NoQuadrilateral);
        }
        let q = self.q as usize;
        if nl != np {
            return Err(PlaneViolation::LineCount { expected: np, found: nl });
        }
        for (j, row) in inc.iter().enumerate() {
            let found = row.iter().filter(|&&x| x).count();
            if found != q + 1 {
                return Err(PlaneViolation::LineSize { line: j, found, expected: q + 1 });
            }
        }
        for p in 0..np {
            let found = inc.iter().filter(|row| row[p]).count();
            if found != q + 1 {
                return Err(PlaneViolation::PointDegree { point: p, found, expected: q + 1 });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn has_quadrilateral(&self, inc: &[Vec<bool>]) -> bool {
        let np = self.num_points();
        let collinear3 = |a: usize, b: usize, c: usize| inc.iter().any(|row| row[a] && row[b] && row[c]);
        for a in 0..np {
            for b in a + 1..np {
                for c in b + 1..np {
                    if collinear3(a, b, c) {
                        continue;
                    }
                    for d in c + 1..np {
                        if !collinear3(a, b, d) && !collinear3(a, c, d) && !collinear3(b, c, d) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Bipartite point-line incidence graph: points are vertices
    /// `0..N`, line `j` is vertex `N + j`, with `N = q² + q + 1`.
    pub fn incidence_graph(&self) -> Graph {
        let np = self.num_points();
        let edges: Vec<(usize, usize)> = self
            .lines
            .iter()
            .enumerate()
            .flat_map(|(j, line)| line.iter().map(move |&p| (p, np + j)))
            .collect();
        Graph::from_edges(np + self.lines.len(), &edges).expect("plane incidence graph is simple and connected")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plane serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pg2_counts() {
        let p2 = build_pg2(2).unwrap();
        assert_eq!(p2.num_points(), 7);
        assert_eq!(p2.num_lines(), 7);
        assert!(p2.lines.iter().all(|l| l.len() == 3));
        assert!(p2.is_valid());
        let p3 = build_pg2(3).unwrap();
        assert_eq!(p3.num_lines(), 13);
        assert!(p3.lines.iter().all(|l| l.len() == 4));
        assert!(p3.is_valid());
        assert_eq!(build_pg2(4), Err(DesignError::NotPrime(4)));
        assert_eq!(build_pg2(1), Err(DesignError::NotPrime(1)));
    }

    #[test]
    fn fano_is_valid_and_perturbation_is_not() {
        let fano = fano_plane();
        assert!(fano.is_valid());
        let mut broken = fano.clone();
        // Replace point 3 on line {0,1,2} by point 3.
        broken.lines[0] = vec![0, 1, 3];
        assert!(matches!(broken.validate(), Err(PlaneViolation::PointPair(..))));
    }

    #[test]
    fn degenerate_plane_fails_axiom_three() {
        let all_on_one = ProjectivePlane { q: 2, lines: vec![(0..7).collect()] };
        assert_eq!(all_on_one.validate(), Err(PlaneViolation::NoQuadrilateral));
    }

    #[test]
    fn incidence_graph_parameters() {
        let g = build_pg2(3).unwrap().incidence_graph();
        assert_eq!(g.n(), 26);
        assert!((0..26).all(|v| g.degree(v) == 4));
        assert_eq!(g.diameter(), 3);
    }

    #[test]
    fn json_shape() {
        let json = fano_plane().to_json();
        assert!(json.starts_with("{\"q\":2,\"lines\":[[0,1,2],"));
        let back: ProjectivePlane = serde_json::from_str(&json).unwrap();
        assert_eq!(back, fano_plane());
    }
}
