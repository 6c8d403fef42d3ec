//! Mechanical checks of the known values and bounds, one group of rows per
//! claim. Used by `loctime verify`.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::decomposition::{interval_clique_path, minfill_td, tree_edge_td, TreeDecomposition};
use crate::designs::build_pg2;
use crate::generators::{
    complete_multipartite, cycle, fig2_h, grid, nonisomorphic_trees, path, perfect_mary_tree, random_connected,
    random_connected_subset, random_tree, star, Interval,
};
use crate::graph::Graph;
use crate::solver::{
    is_resolving, localization_number, metric_dimension, solve_capture_time, Budget, Outcome, Pruning, SolveOptions,
    SCHEMA_VERSION,
};
use crate::strategy::{
    evaluate_strategy, multipartite_parts, CopStrategy, KPartite, LeafProbeAll, MaryHigh, MaryLow, PathwidthSweep,
    ProjectiveTwoPhase, ScriptedProbes, StrategyError, TdCenterOut, TdLeafPaths, TreeTwoCop,
};

pub const SUITES: &[&str] = &["paper"];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub criterion: u8,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    pub runtime_ms: u128,
    /// Why a failing row failed, when it is more than a value mismatch.
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    pub budget: Budget,
    pub threads: usize,
}

impl VerifyConfig {
    fn opts(&self, g: &Graph) -> SolveOptions {
        SolveOptions { budget: self.budget, pruning: Pruning::fast_for(g), threads: self.threads }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}` (known: paper)")]
    UnknownSuite(String),
    #[error("unknown group `{0}` (known: {known})", known = GROUPS.iter().map(|g| g.name).collect::<Vec<_>>().join(", "))]
    UnknownGroup(String),
}

pub struct Group {
    pub name: &'static str,
    pub criterion: u8,
    run: fn(&VerifyConfig) -> Vec<Check>,
}

pub const GROUPS: &[Group] = &[
    Group { name: "star", criterion: 1, run: star_rows },
    Group { name: "fig2", criterion: 2, run: fig2_rows },
    Group { name: "grid", criterion: 3, run: grid_rows },
    Group { name: "heawood", criterion: 4, run: heawood_rows },
    Group { name: "mary", criterion: 5, run: mary_rows },
    Group { name: "soundness", criterion: 6, run: soundness_rows },
    Group { name: "monotone", criterion: 7, run: monotone_rows },
    Group { name: "invariants", criterion: 8, run: invariant_rows },
    Group { name: "kpartite", criterion: 9, run: kpartite_rows },
    Group { name: "leaves", criterion: 10, run: leaf_rows },
];

/// Runs the suite, restricted to the comma-separated group names in `only`.
pub fn run_suite(suite: &str, only: Option<&str>, cfg: &VerifyConfig) -> Result<Vec<Check>, VerifyError> {
    if !SUITES.contains(&suite) {
        return Err(VerifyError::UnknownSuite(suite.to_string()));
    }
    let selected: Vec<&Group> = match only {
        None => GROUPS.iter().collect(),
        Some(list) => list
            .split(',')
            .map(|name| GROUPS.iter().find(|g| g.name == name).ok_or_else(|| VerifyError::UnknownGroup(name.to_string())))
            .collect::<Result<_, _>>()?,
    };
    Ok(selected.into_iter().flat_map(|g| (g.run)(cfg)).collect())
}

pub fn to_csv(checks: &[Check]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["schema_version", "id", "criterion", "expected", "observed", "status", "runtime_ms", "reason"])
        .expect("in-memory write");
    for c in checks {
        w.write_record([
            SCHEMA_VERSION.to_string(),
            c.id.clone(),
            c.criterion.to_string(),
            c.expected.clone(),
            c.observed.clone(),
            if c.pass { "pass" } else { "fail" }.to_string(),
            c.runtime_ms.to_string(),
            c.reason.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Times `f`, which returns the observed value and whether it passes, or a
/// reason the check could not be completed.
fn row(id: impl Into<String>, criterion: u8, expected: impl Into<String>, f: impl FnOnce() -> Result<(String, bool), String>) -> Check {
    let start = Instant::now();
    let result = f();
    let runtime_ms = start.elapsed().as_millis();
    let (observed, pass, reason) = match result {
        Ok((observed, pass)) => (observed, pass, None),
        Err(reason) => ("-".to_string(), false, Some(reason)),
    };
    Check { id: id.into(), criterion, expected: expected.into(), observed, pass, runtime_ms, reason }
}

fn capt(g: &Graph, k: usize, cfg: &VerifyConfig) -> Result<u32, String> {
    capt_with(g, k, &cfg.opts(g))
}

fn capt_with(g: &Graph, k: usize, opts: &SolveOptions) -> Result<u32, String> {
    match solve_capture_time(g, k, opts).outcome {
        Outcome::Finite(t) => Ok(t),
        Outcome::RobberWins => Err(format!("robber wins with {k} cops")),
        Outcome::Aborted(r) => Err(format!("budget abort: {r}")),
    }
}

fn zeta(g: &Graph, cfg: &VerifyConfig) -> Result<usize, String> {
    let lz = localization_number(g, &cfg.opts(g));
    match lz.zeta {
        Some(z) => Ok(z),
        None => Err(format!("budget abort: {}", lz.per_k.last().map_or("?", |r| r.outcome.label()))),
    }
}

fn worst(g: &Graph, s: &dyn CopStrategy, cap: u32) -> Result<u32, String> {
    let report = evaluate_strategy(g, s, cap).map_err(|e| e.to_string())?;
    report.worst_case.rounds().ok_or_else(|| format!("{} survives {cap} rounds", s.name()))
}

fn star_rows(cfg: &VerifyConfig) -> Vec<Check> {
    (2..=6)
        .map(|n| {
            row(format!("star_n{n}"), 1, (n - 1).to_string(), || {
                let t = capt(&star(n).unwrap(), 1, cfg)?;
                Ok((t.to_string(), t as usize == n - 1))
            })
        })
        .collect()
}

fn fig2_rows(cfg: &VerifyConfig) -> Vec<Check> {
    let h = fig2_h();
    vec![
        row("fig2_capture", 2, "3", || {
            let t = capt(&h, 1, cfg)?;
            Ok((t.to_string(), t == 3))
        }),
        row("fig2_locnum", 2, "1", || {
            let z = zeta(&h, cfg)?;
            Ok((z.to_string(), z == 1))
        }),
    ]
}

fn grid_rows(_cfg: &VerifyConfig) -> Vec<Check> {
    let g = grid(8, 8).unwrap();
    let corners = vec![0, 7];
    vec![
        row("grid_resolving", 3, "true", || {
            let r = is_resolving(&g, &corners);
            Ok((r.to_string(), r))
        }),
        row("grid_one_round", 3, "1", || {
            let s = ScriptedProbes::new(vec![corners.clone()]).map_err(|e| e.to_string())?;
            let t = worst(&g, &s, 2)?;
            Ok((t.to_string(), t == 1))
        }),
    ]
}

fn heawood_rows(cfg: &VerifyConfig) -> Vec<Check> {
    let g = build_pg2(2).expect("prime order").incidence_graph();
    vec![
        row("heawood_locnum", 4, "3", || {
            let z = zeta(&g, cfg)?;
            Ok((z.to_string(), z == 3))
        }),
        row("heawood_capture", 4, "2; no 3-set resolves", || {
            let t = capt(&g, 3, cfg)?;
            let mut any = false;
            for a in 0..14 {
                for b in a + 1..14 {
                    for c in b + 1..14 {
                        any |= is_resolving(&g, &[a, b, c]);
                    }
                }
            }
            let observed = format!("{t}; {}", if any { "some 3-set resolves" } else { "no 3-set resolves" });
            Ok((observed, t == 2 && !any))
        }),
    ]
}

fn floor_log(m: usize, k: usize) -> usize {
    (1..).find(|&i| m.pow(i as u32 + 1) > k).unwrap()
}

/// Containment interval for the m-ary tree capture time, as exact rationals
/// `(lo_num / lo_den, hi)`.
fn mary_bracket(m: usize, h: usize, k: usize) -> (usize, usize, usize) {
    if k < m {
        (h * ((m - 1) / k), 1, h * (m - 1).div_ceil(k))
    } else {
        let i = floor_log(m, k);
        (h, 1 + i, h.div_ceil(i))
    }
}

fn mary_rows(cfg: &VerifyConfig) -> Vec<Check> {
    let mut rows = Vec::new();
    for m in 2..=4 {
        for h in 1..=3 {
            let g = perfect_mary_tree(m, h).unwrap();
            for k in 2..=(m + 2).min(6) {
                let (lo_num, lo_den, hi) = mary_bracket(m, h, k);
                let expected = if lo_den == 1 { format!("[{lo_num}, {hi}]") } else { format!("[{lo_num}/{lo_den}, {hi}]") };
                rows.push(row(format!("mary_m{m}_h{h}_k{k}"), 5, expected, || {
                    let t = capt(&g, k, cfg)? as usize;
                    Ok((t.to_string(), t * lo_den >= lo_num && t <= hi))
                }));
            }
        }
    }
    rows
}

/// Evaluates every `(graph, strategy, bound)` case and reports the first
/// violation, if any.
fn soundness_row(id: &str, expected: &str, cases: impl FnOnce() -> Result<Vec<(Graph, Box<dyn CopStrategy>, u32)>, StrategyError>) -> Check {
    row(id, 6, expected, || {
        let cases = cases().map_err(|e| e.to_string())?;
        let mut worst_seen = Vec::new();
        for (g, s, bound) in &cases {
            let t = worst(g, s.as_ref(), bound + 1)?;
            if t > *bound {
                return Ok((format!("{} took {t} > {bound} on n={}", s.name(), g.n()), false));
            }
            worst_seen.push(t);
        }
        Ok((format!("{} cases within bound, max {}", cases.len(), worst_seen.iter().max().unwrap_or(&0)), true))
    })
}

pub(crate) fn interval_families() -> Vec<Vec<Interval>> {
    let iv = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| Interval::new(a, b)).collect::<Vec<_>>();
    vec![
        iv(&[(0, 1), (1, 2), (2, 3), (3, 4)]),
        iv(&[(0, 2), (1, 4), (3, 5), (3, 7), (6, 8)]),
        iv(&[(0, 10), (1, 2), (3, 4), (5, 6), (7, 8)]),
        iv(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]),
        iv(&[(0, 3), (1, 2), (2, 6), (4, 5), (5, 9), (7, 8), (8, 10)]),
    ]
}

pub(crate) fn multipartite_sizes() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=3 {
        for b in a..=3 {
            out.push(vec![a, b]);
            for c in b..=3 {
                out.push(vec![a, b, c]);
            }
        }
    }
    out.retain(|s| s.iter().max() > Some(&1));
    out
}

fn td_graphs() -> Vec<(Graph, TreeDecomposition)> {
    let mut out = Vec::new();
    for g in [path(4).unwrap(), star(3).unwrap(), perfect_mary_tree(2, 2).unwrap(), path(6).unwrap()] {
        let td = tree_edge_td(&g).unwrap();
        out.push((g, td));
    }
    let c4 = cycle(4).unwrap();
    out.push((c4.clone(), minfill_td(&c4)));
    for seed in 0..20 {
        let g = random_connected(5 + seed as usize % 5, 0.3, seed).unwrap();
        let td = minfill_td(&g);
        out.push((g, td));
    }
    out
}

fn soundness_rows(_cfg: &VerifyConfig) -> Vec<Check> {
    let mut rows = vec![
        soundness_row("soundness_leaf_probe_all", "1 round", || {
            let mut graphs = vec![path(4).unwrap(), star(6).unwrap()];
            graphs.extend((0..10).map(|s| random_tree(9, s).unwrap()));
            graphs
                .into_iter()
                .map(|g| Ok((g.clone(), Box::new(LeafProbeAll::new(&g)?) as Box<dyn CopStrategy>, 1)))
                .collect()
        }),
        soundness_row("soundness_tree_two_cop", "<= n", || {
            let mut graphs: Vec<Graph> = (2..=8).map(|n| path(n).unwrap()).collect();
            graphs.extend([star(5).unwrap(), perfect_mary_tree(2, 3).unwrap()]);
            graphs.extend((0..20).map(|s| random_tree(10, s).unwrap()));
            graphs
                .into_iter()
                .map(|g| {
                    let n = g.n() as u32;
                    Ok((g.clone(), Box::new(TreeTwoCop::new(&g)?) as Box<dyn CopStrategy>, n))
                })
                .collect()
        }),
        soundness_row("soundness_pathwidth_sweep", "<= n", || {
            let p5 = path(5).unwrap();
            let natural = TreeDecomposition::path((1..5).map(|i| vec![i - 1, i]).collect());
            let mut cases = vec![(p5.clone(), Box::new(PathwidthSweep::new(&p5, &natural)?) as Box<dyn CopStrategy>, 5)];
            for ivs in interval_families() {
                let (g, td) = interval_clique_path(&ivs).map_err(|e| StrategyError::Precondition(e.to_string()))?;
                let n = g.n() as u32;
                cases.push((g.clone(), Box::new(PathwidthSweep::new(&g, &td)?), n));
            }
            Ok(cases)
        }),
        soundness_row("soundness_kpartite", "<= |X_k| - 1", || {
            multipartite_sizes()
                .into_iter()
                .map(|sizes| {
                    let g = complete_multipartite(&sizes).unwrap();
                    let largest = *sizes.iter().max().unwrap() as u32;
                    Ok((g.clone(), Box::new(KPartite::new(&g)?) as Box<dyn CopStrategy>, largest - 1))
                })
                .collect()
        }),
        soundness_row("soundness_mary_low", "<= h*ceil((m-1)/k)", || {
            let mut params = vec![(7, 3, 3)];
            for m in 3..=4 {
                for h in 1..=3 {
                    params.extend((2..m).map(|k| (m, h, k)));
                }
            }
            params
                .into_iter()
                .map(|(m, h, k)| {
                    let g = perfect_mary_tree(m, h).unwrap();
                    let bound = (h * (m - 1).div_ceil(k)) as u32;
                    Ok((g.clone(), Box::new(MaryLow::new(&g, m, h, k)?) as Box<dyn CopStrategy>, bound))
                })
                .collect()
        }),
        soundness_row("soundness_mary_high", "<= ceil(h/floor(log_m k))", || {
            let mut params: Vec<(usize, usize, usize)> = vec![(2, 4, 4)];
            for m in 2usize..=4 {
                for h in 1..=3 {
                    params.extend((m..=(m + 2).min(6)).filter(|&k| k < m.pow(h as u32 + 1)).map(|k| (m, h, k)));
                }
            }
            params
                .into_iter()
                .map(|(m, h, k)| {
                    let g = perfect_mary_tree(m, h).unwrap();
                    let bound = h.div_ceil(floor_log(m, k)) as u32;
                    Ok((g.clone(), Box::new(MaryHigh::new(&g, m, h, k)?) as Box<dyn CopStrategy>, bound))
                })
                .collect()
        }),
    ];
    for (q, k) in [(2usize, 3usize), (2, 4), (3, 4), (3, 5), (3, 6)] {
        let bound = ((q - 1).div_ceil(k - q) + q.div_ceil(k - q + 1)) as u32;
        rows.push(soundness_row(&format!("soundness_projective_q{q}_k{k}"), &format!("<= {bound}"), || {
            let g = build_pg2(q as u64).expect("prime order").incidence_graph();
            Ok(vec![(g.clone(), Box::new(ProjectiveTwoPhase::new(&g, q, k)?) as Box<dyn CopStrategy>, bound)])
        }));
    }
    rows.push(soundness_row("soundness_td_leafpaths", "<= leaves of TD", || {
        td_graphs()
            .into_iter()
            .map(|(g, td)| {
                let s = TdLeafPaths::new(&g, &td)?;
                let bound = s.stats().leaves as u32;
                Ok((g, Box::new(s) as Box<dyn CopStrategy>, bound))
            })
            .collect()
    }));
    rows.push(soundness_row("soundness_td_center_out", "<= radius of TD + 1", || {
        td_graphs()
            .into_iter()
            .map(|(g, td)| {
                let s = TdCenterOut::new(&g, &td)?;
                let bound = s.bound();
                Ok((g, Box::new(s) as Box<dyn CopStrategy>, bound))
            })
            .collect()
    }));
    rows
}

fn monotone_rows(cfg: &VerifyConfig) -> Vec<Check> {
    vec![
        row("tree_monotone", 7, "capt(H) <= capt(T) on 250 subtrees, k = 2, 3", || {
            let mut pairs = 0;
            for seed in 0..50u64 {
                let n = 4 + seed as usize % 7;
                let t = random_tree(n, seed).unwrap();
                let full: Vec<u32> = [2, 3].iter().map(|&k| capt(&t, k, cfg)).collect::<Result<_, _>>()?;
                for j in 0..5u64 {
                    let size = 2 + (seed as usize * 5 + j as usize) % (n - 1);
                    let set = random_connected_subset(&t, size, seed * 1000 + j).unwrap();
                    let (h, _) = t.induced_subgraph(&set).map_err(|e| e.to_string())?;
                    for (i, &k) in [2, 3].iter().enumerate() {
                        let sub = capt(&h, k, cfg)?;
                        if sub > full[i] {
                            return Ok((format!("tree seed {seed}, subtree {j}, k={k}: {sub} > {}", full[i]), false));
                        }
                    }
                    pairs += 1;
                }
            }
            Ok((format!("{pairs} subtrees monotone"), pairs == 250))
        }),
        row("fig2_nonmonotone", 7, "capt(H, 1) = 3; grid 2-cop capture in 1", || {
            let h = capt(&fig2_h(), 1, cfg)?;
            let g = grid(8, 8).unwrap();
            let s = ScriptedProbes::new(vec![vec![0, 7]]).map_err(|e| e.to_string())?;
            let t = worst(&g, &s, 2)?;
            Ok((format!("{h}; {t}"), h == 3 && t == 1))
        }),
    ]
}

fn invariant_rows(cfg: &VerifyConfig) -> Vec<Check> {
    vec![row("relational_invariants", 8, "zeta <= beta, capt(beta) = 1, capt non-increasing on 100 graphs", || {
        for seed in 0..100u64 {
            let n = 4 + seed as usize % 6;
            let p = 0.2 + 0.1 * (seed % 5) as f64;
            let g = random_connected(n, p, seed).unwrap();
            let z = zeta(&g, cfg)?;
            let beta = metric_dimension(&g, u64::MAX).expect("unbounded search").beta;
            if z > beta {
                return Ok((format!("seed {seed}: zeta {z} > beta {beta}"), false));
            }
            let times: Vec<u32> = (z..=beta).map(|k| capt(&g, k, cfg)).collect::<Result<_, _>>()?;
            if times.windows(2).any(|w| w[1] > w[0]) || *times.last().unwrap() != 1 {
                return Ok((format!("seed {seed}: capt for k={z}..={beta} is {times:?}"), false));
            }
        }
        Ok(("100 graphs consistent".to_string(), true))
    })]
}

fn kpartite_rows(cfg: &VerifyConfig) -> Vec<Check> {
    multipartite_sizes()
        .into_iter()
        .map(|sizes| {
            let g = complete_multipartite(&sizes).unwrap();
            let parts = multipartite_parts(&g).expect("multipartite");
            let expected_zeta = KPartite::formula(&parts);
            let largest = sizes.iter().max().copied().unwrap();
            let id = format!("kpartite_{}", sizes.iter().map(usize::to_string).collect::<Vec<_>>().join("_"));
            row(id, 9, format!("zeta {expected_zeta}, capt <= {}", largest - 1), || {
                let z = zeta(&g, cfg)?;
                let t = capt(&g, z, cfg)?;
                Ok((format!("zeta {z}, capt {t}"), z == expected_zeta && (t as usize) < largest))
            })
        })
        .collect()
}

fn leaf_rows(cfg: &VerifyConfig) -> Vec<Check> {
    vec![row("leaf_normalization", 10, "leaf-only = unrestricted at k = 2, all trees n <= 8", || {
        let mut count = 0;
        for n in 2..=8 {
            for t in nonisomorphic_trees(n) {
                let free = capt(&t, 2, cfg)?;
                let leaf_opts = SolveOptions {
                    budget: cfg.budget,
                    pruning: Pruning { leaf_probes: true, ..Pruning::fast_for(&t) },
                    threads: cfg.threads,
                };
                let leaves = capt_with(&t, 2, &leaf_opts)?;
                if free != leaves {
                    return Ok((format!("{}: leaf-only {leaves} vs {free}", t.to_edge_list().replace('\n', " ")), false));
                }
                count += 1;
            }
        }
        Ok((format!("{count} trees equal"), true))
    })]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters_and_csv() {
        let cfg = VerifyConfig::default();
        let rows = run_suite("paper", Some("heawood"), &cfg).unwrap();
        assert_eq!(rows.iter().map(|r| r.id.as_str()).collect::<Vec<_>>(), ["heawood_locnum", "heawood_capture"]);
        assert!(rows.iter().all(|r| r.pass), "{rows:?}");
        let csv = to_csv(&rows);
        assert!(csv.starts_with("schema_version,id,criterion"));
        assert_eq!(csv.lines().count(), 3);
        assert!(matches!(run_suite("other", None, &cfg), Err(VerifyError::UnknownSuite(_))));
        assert!(matches!(run_suite("paper", Some("nope"), &cfg), Err(VerifyError::UnknownGroup(_))));
    }

    #[test]
    fn brackets() {
        assert_eq!(mary_bracket(4, 3, 2), (3, 1, 6));
        assert_eq!(mary_bracket(2, 3, 4), (3, 3, 2));
        assert_eq!(multipartite_sizes().len(), 14);
    }
}
