//! Sweep the covering-word family for one k and print the report.
//!
//!     cargo run --example word_family -- 11

use dihedral_cayley::abelian::GroupContext;
use dihedral_cayley::semidirect::Gamma;
use dihedral_cayley::words::verify_word_family;

fn main() {
    let k: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().unwrap())
        .unwrap_or(11);
    let gamma = Gamma::new(GroupContext::new(2, k).unwrap());
    let report = verify_word_family(&gamma, 1 << 16);
    print!("{report}");
    if !report.all_passed() {
        std::process::exit(1);
    }
}
