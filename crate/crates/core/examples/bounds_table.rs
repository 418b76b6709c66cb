//! Construction orders against the Moore bound, as CSV on stdout.
//!
//!     cargo run --example bounds_table -- 3 5 7

use dihedral_cayley::bounds::{record_table, threshold_degree};

fn main() {
    let mut ks: Vec<u32> = std::env::args()
        .skip(1)
        .map(|s| s.parse().unwrap())
        .collect();
    if ks.is_empty() {
        ks = vec![3, 5];
    }
    for &k in &ks {
        eprintln!(
            "k={k}: threshold degree {}",
            threshold_degree(k, false).unwrap()
        );
    }
    record_table(2..=30, &ks, false, &mut std::io::stdout().lock()).unwrap();
}
