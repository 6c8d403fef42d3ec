//! Named cop strategies played against every robber, next to their bounds
//! and the exact optimum for the same number of cops.
//!
//! cargo run --release --example strategies

use loctime::decomposition::tree_edge_td;
use loctime::generators::{complete_multipartite, perfect_mary_tree, random_tree, star};
use loctime::solver::{solve_capture_time, SolveOptions};
use loctime::strategy::{
    evaluate_strategy, parse_strategy, replay_transcript, CopStrategy, KPartite, LeafProbeAll, MaryHigh, MaryLow,
    TdCenterOut, TdLeafPaths, TreeTwoCop,
};
use loctime::Graph;

fn show(g: &Graph, s: &dyn CopStrategy, bound: u32) {
    let report = evaluate_strategy(g, s, 4 * g.n() as u32).unwrap();
    replay_transcript(g, &report).unwrap();
    let opt = solve_capture_time(g, s.cops(), &SolveOptions::fast_for(g)).outcome.rounds();
    let worst = report.worst_case.rounds().map_or("-".to_string(), |t| t.to_string());
    let opt = opt.map_or("-".to_string(), |t| t.to_string());
    println!("{:<28} n={:<3} cops={:<2} worst {worst:>2}  bound {bound:>2}  optimum {opt:>2}", s.name(), g.n(), s.cops());
}

fn main() {
    let t = random_tree(10, 7).unwrap();
    show(&t, &TreeTwoCop::new(&t).unwrap(), t.n() as u32);
    show(&t, &LeafProbeAll::new(&t).unwrap(), 1);
    let s = star(6).unwrap();
    show(&s, &LeafProbeAll::new(&s).unwrap(), 1);

    for (m, h, k) in [(3, 2, 2), (4, 2, 3), (4, 3, 2)] {
        let g = perfect_mary_tree(m, h).unwrap();
        let s = MaryLow::new(&g, m, h, k).unwrap();
        show(&g, &s, s.bound());
    }
    for (m, h, k) in [(2, 3, 2), (2, 4, 4), (3, 2, 4)] {
        let g = perfect_mary_tree(m, h).unwrap();
        let s = MaryHigh::new(&g, m, h, k).unwrap();
        show(&g, &s, s.bound());
    }
    for sizes in [vec![2, 3], vec![1, 1, 3], vec![2, 3, 3]] {
        let g = complete_multipartite(&sizes).unwrap();
        let s = KPartite::new(&g).unwrap();
        show(&g, &s, s.bound());
    }
    let td = tree_edge_td(&t).unwrap();
    let s = TdLeafPaths::new(&t, &td).unwrap();
    show(&t, &s, s.bound());
    let s = TdCenterOut::new(&t, &td).unwrap();
    show(&t, &s, s.bound());

    let spec = parse_strategy("witness:k=2").unwrap();
    let s = spec.build(&t, &SolveOptions::fast_for(&t)).unwrap();
    let report = evaluate_strategy(&t, s.as_ref(), 50).unwrap();
    println!("\nworst-case play of {} on the random tree:", report.strategy);
    for r in &report.transcript {
        println!("  round {}: probe {:?} answers {:?} -> {:?}", r.round, r.probe, r.distances, r.class);
    }
}
