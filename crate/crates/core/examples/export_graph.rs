//! Write a small construction as Graphviz DOT and as an edge list.
//!
//!     cargo run --example export_graph > g.dot

use dihedral_cayley::digraph::{CayleyDigraph, DigraphSpec, ExportFormat, DEFAULT_VERTEX_BUDGET};

fn main() {
    let g = CayleyDigraph::new(DigraphSpec::new(1, 3, false, false).unwrap()).unwrap();
    let mut stdout = std::io::stdout().lock();
    g.export(ExportFormat::Dot, &mut stdout, DEFAULT_VERTEX_BUDGET)
        .unwrap();

    let mut edges = Vec::new();
    g.export(ExportFormat::EdgeList, &mut edges, DEFAULT_VERTEX_BUDGET)
        .unwrap();
    eprint!("{}", String::from_utf8(edges).unwrap());
}
