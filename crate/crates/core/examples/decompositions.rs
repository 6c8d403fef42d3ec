//! Tree and path decompositions, and the strategies that sweep them.
//!
//! cargo run --release --example decompositions

use loctime::decomposition::{interval_clique_path, minfill_td, td_stats, validate_td};
use loctime::generators::{cycle, grid, random_connected, Interval};
use loctime::strategy::{evaluate_strategy, CopStrategy, PathwidthSweep, TdCenterOut, TdLeafPaths};
use loctime::Graph;

fn worst(g: &Graph, s: &dyn CopStrategy) -> String {
    let r = evaluate_strategy(g, s, 4 * g.n() as u32).unwrap();
    r.worst_case.rounds().map_or("-".into(), |t| t.to_string())
}

fn main() {
    let intervals: Vec<Interval> = [(0, 3), (1, 2), (2, 6), (4, 5), (5, 9), (7, 8), (8, 10)]
        .iter()
        .map(|&(a, b)| Interval::new(a, b))
        .collect();
    let (g, pd) = interval_clique_path(&intervals).unwrap();
    println!("interval graph n={}: clique path {:?}", g.n(), pd.bags);
    let sweep = PathwidthSweep::new(&g, &pd).unwrap();
    println!("  sweep with {} cops: worst {} (n = {})", sweep.cops(), worst(&g, &sweep), g.n());

    let mut graphs = vec![("C6".to_string(), cycle(6).unwrap()), ("grid 3x3".to_string(), grid(3, 3).unwrap())];
    graphs.extend((0..3).map(|s| (format!("G(9, 0.3) #{s}"), random_connected(9, 0.3, s).unwrap())));
    println!("\n{:<12} width radius leaves  leafpaths(cops/worst)  center_out(cops/worst)", "graph");
    for (name, g) in &graphs {
        let td = minfill_td(g);
        validate_td(g, &td).unwrap();
        let st = td_stats(&td);
        let lp = TdLeafPaths::new(g, &td).unwrap();
        let co = TdCenterOut::new(g, &td).unwrap();
        println!(
            "{name:<12} {:>5} {:>6} {:>6}  {:>10}/{:<10} {:>10}/{}",
            st.width,
            st.radius,
            st.leaves,
            lp.cops(),
            worst(g, &lp),
            co.cops(),
            worst(g, &co)
        );
    }
    println!("\n{}", minfill_td(&grid(3, 3).unwrap()).to_json());
}
