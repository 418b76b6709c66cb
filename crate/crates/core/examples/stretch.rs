//! n = 13, k = 5: degree 26, 3,712,930 vertices. Build with --release.
//!
//!     cargo run --release --example stretch

use std::time::Instant;

use dihedral_cayley::bounds::exactness_certificate;
use dihedral_cayley::digraph::{CayleyDigraph, DigraphSpec, DEFAULT_VERTEX_BUDGET};

fn main() {
    let start = Instant::now();
    let g = CayleyDigraph::new(DigraphSpec::new(13, 5, false, false).unwrap()).unwrap();
    let e = g.eccentricity_from_identity(DEFAULT_VERTEX_BUDGET).unwrap();
    let cert = exactness_certificate(g.degree() as u64, 5, false).unwrap();
    println!(
        "order={} degree={} diameter={e} ({:.2?})",
        g.order(),
        g.degree(),
        start.elapsed()
    );
    println!("{cert}");
}
