//! Generators, distances and special subgraphs.
//!
//! cargo run --release --example graph_families

use loctime::generators::{cartesian_product, cycle, fig2_h, hypercube, nonisomorphic_trees, path, random_tree, Family};
use loctime::graph::{is_special_subgraph, special_retraction};
use loctime::{Graph, VertexSet};

fn main() {
    let families = [
        Family::parse("mary", &["3".into(), "2".into()], None).unwrap(),
        Family::parse("pg2", &["3".into()], None).unwrap(),
        Family::parse("random_connected", &["10".into(), "0.25".into()], Some(4)).unwrap(),
    ];
    for f in &families {
        let g = f.build().unwrap();
        println!("{f:?}: n={} m={} diameter {} radius {}", g.n(), g.edge_count(), g.diameter(), g.radius());
    }
    let q3 = hypercube(3).unwrap();
    let prism = cartesian_product(&path(2).unwrap(), &cycle(4).unwrap()).unwrap();
    println!("Q3 and P2 x C4 have {} and {} edges", q3.edge_count(), prism.edge_count());

    let counts: Vec<usize> = (1..=9).map(|n| nonisomorphic_trees(n).len()).collect();
    println!("trees up to isomorphism on 1..=9 vertices: {counts:?}");

    let t = random_tree(9, 1).unwrap();
    let text = t.to_edge_list();
    assert_eq!(Graph::parse_edge_list(&text).unwrap().edges().collect::<Vec<_>>(), t.edges().collect::<Vec<_>>());
    print!("random tree edge list:\n{text}");

    let h = fig2_h();
    let branch = VertexSet::from_vertices(h.n(), [0, 1, 4, 7]);
    println!("fig2 H: {{0,1,4,7}} special: {}", is_special_subgraph(&h, &branch));
    let f = special_retraction(&h, &branch).unwrap();
    println!("  retraction {:?}", f.as_slice());
    let cyc = cycle(6).unwrap();
    println!("C6: {{0,1,2}} special: {}", is_special_subgraph(&cyc, &VertexSet::from_vertices(6, [0, 1, 2])));
}
