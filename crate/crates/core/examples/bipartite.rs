//! Bipartite construction for k = 5: colour classes, diameter, and the
//! odd-degree variant.

use dihedral_cayley::digraph::{CayleyDigraph, DigraphSpec, DEFAULT_VERTEX_BUDGET};

fn main() {
    for n in 1..=3 {
        for odd in [false, true] {
            let g = CayleyDigraph::new(DigraphSpec::new(n, 5, true, odd).unwrap()).unwrap();
            let [even, oddc] = g.class_sizes();
            println!(
                "n={n} odd_degree={odd:<5} order={:<4} degree={} classes={even}+{oddc} bipartite={} diameter={}",
                g.order(),
                g.degree(),
                g.check_bipartite(),
                g.eccentricity_from_identity(DEFAULT_VERTEX_BUDGET).unwrap()
            );
        }
    }
}
