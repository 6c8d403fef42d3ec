//! Capture times of perfect m-ary trees against the brackets in terms of
//! m, h and k.
//!
//! cargo run --release --example mary_trees

use loctime::generators::perfect_mary_tree;
use loctime::solver::{solve_capture_time, SolveOptions};

fn main() {
    println!("{:>2} {:>2} {:>2} {:>5} {:>6}  bracket", "m", "h", "k", "n", "capt");
    for m in 2..=4usize {
        for h in 1..=3usize {
            let g = perfect_mary_tree(m, h).unwrap();
            for k in 2..=(m + 2).min(6) {
                let t = solve_capture_time(&g, k, &SolveOptions::fast_for(&g)).outcome.rounds().unwrap();
                let bracket = if k < m {
                    format!("[{}, {}]", h * ((m - 1) / k), h * (m - 1).div_ceil(k))
                } else {
                    let i = (1..).find(|&i| m.pow(i + 1) > k).unwrap() as usize;
                    format!("[{h}/{}, {}]", i + 1, h.div_ceil(i))
                };
                println!("{m:>2} {h:>2} {k:>2} {:>5} {t:>6}  {bracket}", g.n());
            }
        }
    }
}
