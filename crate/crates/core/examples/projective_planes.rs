//! Projective planes of prime order, their incidence graphs, and the
//! two-phase cop strategy on them.
//!
//! cargo run --release --example projective_planes

use loctime::designs::{build_pg2, fano_plane};
use loctime::solver::{solve_capture_time, SolveOptions};
use loctime::strategy::{evaluate_strategy, ProjectiveTwoPhase, ScriptedProbes};

fn main() {
    let fano = fano_plane();
    println!("Fano plane valid: {}", fano.is_valid());
    for q in [2, 3, 5, 7] {
        let plane = build_pg2(q).unwrap();
        let g = plane.incidence_graph();
        println!(
            "PG(2,{q}): {} points, {} lines, valid {}, incidence graph n={} diameter {}",
            plane.num_points(),
            plane.num_lines(),
            plane.is_valid(),
            g.n(),
            g.diameter()
        );
    }

    let heawood = build_pg2(2).unwrap().incidence_graph();
    let t = solve_capture_time(&heawood, 3, &SolveOptions::default()).outcome;
    let scripted = ScriptedProbes::new(vec![vec![0, 3, 5], vec![1, 2, 4]]).unwrap();
    let scripted = evaluate_strategy(&heawood, &scripted, 5).unwrap().worst_case;
    println!("\nHeawood with 3 cops: optimum {t:?}, scripted two-move plan {scripted:?}");

    println!("\n q  k  worst  bound");
    for (q, k) in [(2usize, 3usize), (2, 4), (3, 4), (3, 5), (3, 6), (5, 7), (5, 9)] {
        let g = build_pg2(q as u64).unwrap().incidence_graph();
        let s = ProjectiveTwoPhase::new(&g, q, k).unwrap();
        let worst = evaluate_strategy(&g, &s, 30).unwrap().worst_case;
        println!("{q:>2} {k:>2}  {:>5}  {:>5}", worst.rounds().map_or("-".into(), |t| t.to_string()), s.bound());
    }
}
