//! BFS diameter of one construction, with its distance spectrum.
//!
//!     cargo run --release --example diameter -- 3 5
//!     cargo run --release --example diameter -- 3 5 --bipartite

use dihedral_cayley::digraph::{CayleyDigraph, DigraphSpec, DEFAULT_VERTEX_BUDGET};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().map(|s| s.parse().unwrap()).unwrap_or(2);
    let k: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(3);
    let bipartite = args.iter().any(|a| a == "--bipartite");
    let odd = args.iter().any(|a| a == "--odd-degree");

    let g = CayleyDigraph::new(DigraphSpec::new(n, k, bipartite, odd).unwrap()).unwrap();
    for x in g.generators() {
        println!("generator {x}");
    }
    let spectrum = g
        .distance_spectrum(g.identity(), DEFAULT_VERTEX_BUDGET)
        .unwrap();
    for (d, count) in spectrum.iter().enumerate() {
        println!("distance {d}: {count}");
    }
    println!("{}", g.report(DEFAULT_VERTEX_BUDGET).unwrap());
}
