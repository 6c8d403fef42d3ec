//! Localization numbers next to metric dimensions on small graphs.
//!
//! cargo run --release --example localization_number

use loctime::generators::{complete_multipartite, cycle, fig2_h, grid, hypercube, random_connected};
use loctime::solver::{localization_number, metric_dimension, solve_capture_time, SolveOptions};
use loctime::Graph;

fn main() {
    let mut graphs: Vec<(String, Graph)> = vec![
        ("C5".into(), cycle(5).unwrap()),
        ("fig2 H".into(), fig2_h()),
        ("K_2,3".into(), complete_multipartite(&[2, 3]).unwrap()),
        ("Q3".into(), hypercube(3).unwrap()),
        ("grid 3x3".into(), grid(3, 3).unwrap()),
    ];
    for seed in 0..4 {
        graphs.push((format!("G(8, 0.3) #{seed}"), random_connected(8, 0.3, seed).unwrap()));
    }
    println!("{:<14} {:>4} {:>4}  capture time for k = zeta..=beta", "graph", "zeta", "beta");
    for (name, g) in &graphs {
        let opts = SolveOptions::fast_for(g);
        let zeta = localization_number(g, &opts).zeta.expect("small graphs finish");
        let md = metric_dimension(g, u64::MAX).unwrap();
        let times: Vec<u32> = (zeta..=md.beta)
            .map(|k| solve_capture_time(g, k, &opts).outcome.rounds().unwrap())
            .collect();
        println!("{name:<14} {zeta:>4} {:>4}  {times:?}  resolving set {:?}", md.beta, md.witness.vertices());
    }
}
