//! Exact capture times, and the optimal probes behind one of them.
//!
//! cargo run --release --example capture_time

use loctime::designs::build_pg2;
use loctime::generators::{cycle, fig2_h, star};
use loctime::solver::{solve_capture_time, SolveOptions};
use loctime::Graph;

fn report(name: &str, g: &Graph, k: usize) {
    let r = solve_capture_time(g, k, &SolveOptions::fast_for(g));
    let shown = match r.outcome.rounds() {
        Some(t) => t.to_string(),
        None => r.outcome.label().to_string(),
    };
    println!("{name:<12} k={k}  capture time {shown:<12} ({} states, {} probes)", r.stats.states, r.stats.probes);
}

fn main() {
    for n in 2..=6 {
        report(&format!("K_1,{n}"), &star(n).unwrap(), 1);
    }
    report("fig2 H", &fig2_h(), 1);
    report("fig2 H", &fig2_h(), 2);
    report("C4", &cycle(4).unwrap(), 1);
    report("C4", &cycle(4).unwrap(), 2);
    let heawood = build_pg2(2).unwrap().incidence_graph();
    for k in 1..=4 {
        report("Heawood", &heawood, k);
    }

    let g = star(3).unwrap();
    let r = solve_capture_time(&g, 1, &SolveOptions::default());
    println!("\noptimal play on K_1,3 with one cop:");
    for (s, probe, value) in r.witness.unwrap().strategy_tree(&g) {
        println!("  candidates {:?}: probe {:?}, {value} round(s) left", s.to_vec(), probe.vertices());
    }
}
