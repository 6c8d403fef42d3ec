//! Acceptance criteria 1 to 10. Each criterion prints one PASS/FAIL line
//! (straight to stderr, so it shows without `--nocapture`), and the test
//! fails if any criterion does.

use std::io::Write;
use std::time::Instant;

use loctime::decomposition::{interval_clique_path, minfill_td, td_stats, tree_edge_td, TreeDecomposition};
use loctime::designs::build_pg2;
use loctime::generators::{
    complete_multipartite, cycle, fig2_h, grid, nonisomorphic_trees, path, perfect_mary_tree, random_connected,
    random_connected_subset, random_tree, star, Interval,
};
use loctime::solver::{
    is_resolving, localization_number, solve_capture_time, Outcome, Pruning, SolveOptions,
};
use loctime::strategy::{
    evaluate_strategy, replay_transcript, CopStrategy, KPartite, LeafProbeAll, MaryHigh, MaryLow, PathwidthSweep,
    ProjectiveTwoPhase, ScriptedProbes, TdCenterOut, TdLeafPaths, TreeTwoCop,
};
use loctime::Graph;

type Verdict = Result<String, String>;

fn capt(g: &Graph, k: usize) -> Result<u32, String> {
    capt_opts(g, k, &SolveOptions::fast_for(g))
}

fn capt_opts(g: &Graph, k: usize, opts: &SolveOptions) -> Result<u32, String> {
    match solve_capture_time(g, k, opts).outcome {
        Outcome::Finite(t) => Ok(t),
        other => Err(format!("k={k} on n={}: {other:?}", g.n())),
    }
}

fn zeta(g: &Graph) -> Result<usize, String> {
    localization_number(g, &SolveOptions::fast_for(g)).zeta.ok_or_else(|| "localization number aborted".to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn worst(g: &Graph, s: &dyn CopStrategy, cap: u32) -> Result<u32, String> {
    let report = evaluate_strategy(g, s, cap).map_err(|e| e.to_string())?;
    replay_transcript(g, &report)?;
    report.worst_case.rounds().ok_or_else(|| format!("{} exceeded {cap} rounds", s.name()))
}

/// Whether distance vectors to `set` separate all vertices, computed from
/// `g.dist` without the library's resolving-set code.
fn separates(g: &Graph, set: &[usize]) -> bool {
    let mut vectors: Vec<Vec<u32>> = (0..g.n()).map(|v| set.iter().map(|&s| g.dist(s, v)).collect()).collect();
    vectors.sort();
    vectors.windows(2).all(|w| w[0] != w[1])
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if n < size {
        return vec![];
    }
    let mut out = subsets(n - 1, size);
    for mut s in subsets(n - 1, size - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn min_resolving_size(g: &Graph) -> usize {
    (1..=g.n()).find(|&size| subsets(g.n(), size).iter().any(|s| separates(g, s))).unwrap()
}

fn criterion_1() -> Verdict {
    for n in 2..=6 {
        let t = capt_opts(&star(n).unwrap(), 1, &SolveOptions::default())?;
        ensure(t as usize == n - 1, || format!("K_1,{n}: {t} != {}", n - 1))?;
    }
    Ok("capt(K_1,n) = n-1 for n = 2..6".into())
}

fn criterion_2() -> Verdict {
    let h = fig2_h();
    let t = capt(&h, 1)?;
    let z = zeta(&h)?;
    ensure(t == 3 && z == 1, || format!("capt {t}, zeta {z}"))?;
    Ok("capt(H, 1) = 3, zeta(H) = 1".into())
}

fn criterion_3() -> Verdict {
    let g = grid(8, 8).unwrap();
    let probe = [0usize, 7];
    let mut seen = std::collections::HashSet::new();
    for i in 0..8i32 {
        for j in 0..8i32 {
            seen.insert((i + j, i + 7 - j));
        }
    }
    ensure(seen.len() == 64, || "corner distances collide".into())?;
    ensure(is_resolving(&g, &probe), || "library says corners do not resolve".into())?;
    let s = ScriptedProbes::new(vec![probe.to_vec()]).unwrap();
    let t = worst(&g, &s, 3)?;
    ensure(t == 1, || format!("scripted corners take {t} rounds"))?;
    Ok("corners (1,1), (1,8) resolve the 8x8 grid; capture in 1 round".into())
}

fn criterion_4() -> Verdict {
    let g = build_pg2(2).unwrap().incidence_graph();
    ensure(g.n() == 14 && g.edge_count() == 21, || "not the Heawood graph".into())?;
    let lz = localization_number(&g, &SolveOptions::default());
    ensure(lz.per_k.iter().all(|r| !matches!(r.outcome, Outcome::Aborted(_))), || "solve aborted".into())?;
    ensure(lz.zeta == Some(3), || format!("zeta {:?}", lz.zeta))?;
    let t = capt_opts(&g, 3, &SolveOptions::default())?;
    ensure(t == 2, || format!("capt {t}"))?;
    let one_round = subsets(14, 3).into_iter().filter(|s| separates(&g, s)).count();
    ensure(one_round == 0, || format!("{one_round} three-sets resolve"))?;
    Ok("zeta = 3, capt(k=3) = 2, no 3-set resolves".into())
}

fn criterion_5() -> Verdict {
    let mut checked = 0;
    for m in 2..=4usize {
        for h in 1..=3usize {
            let g = perfect_mary_tree(m, h).unwrap();
            for k in 2..=(m + 2).min(6) {
                let t = capt(&g, k)? as f64;
                let (hf, mf, kf) = (h as f64, m as f64, k as f64);
                let (lo, hi) = if k < m {
                    (hf * ((mf - 1.0) / kf).floor(), hf * ((mf - 1.0) / kf).ceil())
                } else {
                    let i = (kf.ln() / mf.ln() + 1e-9).floor();
                    (hf / (1.0 + i), (hf / i).ceil())
                };
                ensure(lo <= t && t <= hi, || format!("m={m} h={h} k={k}: {t} not in [{lo}, {hi}]"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (m, h, k) values inside their brackets"))
}

fn check_all(cases: Vec<(Graph, Box<dyn CopStrategy>, u32)>, label: &str) -> Result<usize, String> {
    for (g, s, bound) in &cases {
        let t = worst(g, s.as_ref(), bound + 1)?;
        ensure(t <= *bound, || format!("{label}: {} took {t} > {bound} on n={}", s.name(), g.n()))?;
    }
    Ok(cases.len())
}

fn criterion_6() -> Verdict {
    let mut total = 0;

    let mut trees = vec![path(4).unwrap(), star(6).unwrap(), perfect_mary_tree(2, 3).unwrap()];
    trees.extend((0..15).map(|s| random_tree(4 + s as usize % 7, 100 + s).unwrap()));
    let cases = trees.iter().map(|g| (g.clone(), Box::new(LeafProbeAll::new(g).unwrap()) as Box<dyn CopStrategy>, 1)).collect();
    total += check_all(cases, "leaf probes")?;
    let cases = trees
        .iter()
        .map(|g| (g.clone(), Box::new(TreeTwoCop::new(g).unwrap()) as Box<dyn CopStrategy>, g.n() as u32))
        .collect();
    total += check_all(cases, "two-cop tree")?;

    let mut sweeps: Vec<(Graph, TreeDecomposition)> =
        vec![(path(5).unwrap(), TreeDecomposition::path(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]))];
    for ivs in [
        vec![(0, 2), (1, 4), (3, 5), (3, 7), (6, 8)],
        vec![(0, 10), (1, 2), (3, 4), (5, 6), (7, 8)],
        vec![(0, 3), (1, 2), (2, 6), (4, 5), (5, 9), (7, 8), (8, 10)],
    ] {
        let ivs: Vec<Interval> = ivs.into_iter().map(|(a, b)| Interval::new(a, b)).collect();
        sweeps.push(interval_clique_path(&ivs).unwrap());
    }
    let cases = sweeps
        .iter()
        .map(|(g, pd)| (g.clone(), Box::new(PathwidthSweep::new(g, pd).unwrap()) as Box<dyn CopStrategy>, g.n() as u32))
        .collect();
    total += check_all(cases, "pathwidth sweep")?;

    let cases = [vec![2, 3], vec![1, 1, 3], vec![2, 2], vec![1, 2, 3], vec![3, 3, 3], vec![1, 3]]
        .iter()
        .map(|sizes| {
            let g = complete_multipartite(sizes).unwrap();
            let bound = *sizes.iter().max().unwrap() as u32 - 1;
            (g.clone(), Box::new(KPartite::new(&g).unwrap()) as Box<dyn CopStrategy>, bound)
        })
        .collect();
    total += check_all(cases, "k-partite")?;

    let mut mary: Vec<(Graph, Box<dyn CopStrategy>, u32)> = Vec::new();
    for (m, h, k) in [(7, 3, 3), (3, 1, 2), (3, 2, 2), (4, 2, 2), (4, 3, 3), (4, 3, 2)] {
        let g = perfect_mary_tree(m, h).unwrap();
        let bound = (h * (m - 1).div_ceil(k)) as u32;
        mary.push((g.clone(), Box::new(MaryLow::new(&g, m, h, k).unwrap()), bound));
    }
    for (m, h, k) in [(2, 4, 4), (2, 2, 4), (2, 3, 2), (3, 3, 3), (3, 2, 5), (4, 2, 6)] {
        let g = perfect_mary_tree(m, h).unwrap();
        let i = (1..).find(|&i| (m as u32).pow(i + 1) > k as u32).unwrap();
        let bound = (h as u32).div_ceil(i);
        mary.push((g.clone(), Box::new(MaryHigh::new(&g, m, h, k).unwrap()), bound));
    }
    total += check_all(mary, "m-ary")?;

    let mut planes: Vec<(Graph, Box<dyn CopStrategy>, u32)> = Vec::new();
    for (q, k) in [(2usize, 3usize), (2, 4), (3, 4), (3, 5), (3, 6)] {
        let g = build_pg2(q as u64).unwrap().incidence_graph();
        let bound = ((q - 1) as f64 / (k - q) as f64).ceil() + (q as f64 / (k - q + 1) as f64).ceil();
        planes.push((g.clone(), Box::new(ProjectiveTwoPhase::new(&g, q, k).unwrap()), bound as u32));
    }
    total += check_all(planes, "projective")?;

    let mut decomposed: Vec<(Graph, TreeDecomposition)> = [path(4), star(3), perfect_mary_tree(2, 2), path(6)]
        .into_iter()
        .map(|g| {
            let g = g.unwrap();
            let td = tree_edge_td(&g).unwrap();
            (g, td)
        })
        .collect();
    let c4 = cycle(4).unwrap();
    decomposed.push((c4.clone(), minfill_td(&c4)));
    decomposed.extend((0..10).map(|s| {
        let g = random_connected(6 + s as usize % 4, 0.3, 200 + s).unwrap();
        let td = minfill_td(&g);
        (g, td)
    }));
    let mut leafpaths: Vec<(Graph, Box<dyn CopStrategy>, u32)> = Vec::new();
    let mut center_out: Vec<(Graph, Box<dyn CopStrategy>, u32)> = Vec::new();
    for (g, td) in &decomposed {
        let adj = td.adjacency();
        let leaves = if td.bags.len() == 1 { 1 } else { adj.iter().filter(|a| a.len() == 1).count() };
        let radius = (0..td.bags.len()).map(|b| *td.bag_distances(b).iter().max().unwrap()).min().unwrap();
        assert_eq!((leaves, radius), (td_stats(td).leaves, td_stats(td).radius));
        leafpaths.push((g.clone(), Box::new(TdLeafPaths::new(g, td).unwrap()), leaves as u32));
        center_out.push((g.clone(), Box::new(TdCenterOut::new(g, td).unwrap()), radius as u32 + 1));
    }
    total += check_all(leafpaths, "leaf paths")?;
    total += check_all(center_out, "center out")?;

    Ok(format!("{total} strategy cases within their bounds"))
}

fn criterion_7() -> Verdict {
    let mut pairs = 0;
    for seed in 0..50u64 {
        let n = 4 + seed as usize % 7;
        let t = random_tree(n, seed).unwrap();
        let full = [capt(&t, 2)?, capt(&t, 3)?];
        for j in 0..5u64 {
            let size = 2 + (7 * seed as usize + 3 * j as usize) % (n - 1);
            let set = random_connected_subset(&t, size, 10_000 + seed * 10 + j).unwrap();
            let (h, _) = t.induced_subgraph(&set).unwrap();
            ensure(h.is_tree(), || "subtree is not a tree".into())?;
            for (i, k) in [2, 3].into_iter().enumerate() {
                let sub = capt(&h, k)?;
                ensure(sub <= full[i], || format!("seed {seed} subtree {j} k={k}: {sub} > {}", full[i]))?;
            }
            pairs += 1;
        }
    }
    let h = capt(&fig2_h(), 1)?;
    let g = grid(8, 8).unwrap();
    let one = worst(&g, &ScriptedProbes::new(vec![vec![0, 7]]).unwrap(), 2)?;
    ensure(h == 3 && one == 1, || format!("fig2 {h}, grid {one}"))?;
    Ok(format!("{pairs} subtrees monotone at k = 2, 3; H takes 3 while the grid takes 1"))
}

fn criterion_8() -> Verdict {
    for seed in 0..100u64 {
        let n = 4 + seed as usize % 6;
        let g = random_connected(n, 0.15 + 0.1 * (seed % 6) as f64, 500 + seed).unwrap();
        let z = zeta(&g)?;
        let beta = min_resolving_size(&g);
        ensure(z <= beta, || format!("seed {seed}: zeta {z} > beta {beta}"))?;
        let times: Vec<u32> = (z..=beta).map(|k| capt(&g, k)).collect::<Result<_, _>>()?;
        ensure(times.windows(2).all(|w| w[1] <= w[0]), || format!("seed {seed}: {times:?} increases"))?;
        ensure(*times.last().unwrap() == 1, || format!("seed {seed}: capt at beta is {times:?}"))?;
    }
    Ok("100 graphs: zeta <= beta, capt(beta) = 1, capt non-increasing".into())
}

fn criterion_9() -> Verdict {
    let mut count = 0;
    for sizes in (1..=3).flat_map(|a| (a..=3).flat_map(move |b| {
        std::iter::once(vec![a, b]).chain((b..=3).map(move |c| vec![a, b, c]))
    })) {
        let largest = *sizes.iter().max().unwrap();
        if largest < 2 {
            continue;
        }
        let n: usize = sizes.iter().sum();
        let chi = sizes.len();
        let rho = sizes.iter().filter(|&&s| s == 1).count();
        let formula = if rho >= 1 { n + rho + 1 - chi - largest } else { n + 2 - chi - largest };
        let g = complete_multipartite(&sizes).unwrap();
        let z = zeta(&g)?;
        ensure(z == formula, || format!("{sizes:?}: zeta {z}, formula {formula}"))?;
        let t = capt(&g, z)?;
        ensure((t as usize) < largest, || format!("{sizes:?}: capt {t} > {}", largest - 1))?;
        count += 1;
    }
    ensure(count == 14, || format!("{count} part-size combinations"))?;
    Ok("14 complete multipartite graphs match the formula".into())
}

fn criterion_10() -> Verdict {
    let expected_counts = [1, 1, 2, 3, 6, 11, 23];
    let leaf_only = SolveOptions { pruning: Pruning { leaf_probes: true, ..Pruning::default() }, ..Default::default() };
    let mut count = 0;
    for n in 2..=8 {
        let trees = nonisomorphic_trees(n);
        ensure(trees.len() == expected_counts[n - 2], || format!("{} trees on {n} vertices", trees.len()))?;
        for t in trees {
            let free = capt_opts(&t, 2, &SolveOptions::default())?;
            let leaves = capt_opts(&t, 2, &leaf_only)?;
            ensure(free == leaves, || format!("{}: {leaves} vs {free}", t.to_edge_list().replace('\n', "; ")))?;
            count += 1;
        }
    }
    Ok(format!("{count} trees: leaf-only solve equals unrestricted at k = 2"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u8, fn() -> Verdict); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = Vec::new();
    for (id, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        let line = match &verdict {
            Ok(detail) => format!("criterion {id:>2} PASS ({secs:.2}s): {detail}"),
            Err(why) => format!("criterion {id:>2} FAIL ({secs:.2}s): {why}"),
        };
        let _ = writeln!(std::io::stderr().lock(), "{line}");
        if verdict.is_err() {
            failed.push(line);
        }
    }
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
