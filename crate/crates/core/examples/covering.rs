//! Brute-force covering check: each emitted word reaches every prefix.

use dihedral_cayley::abelian::GroupContext;
use dihedral_cayley::fiber::{automorphism_check, covers_bruteforce, det_exact, fiber_matrix};
use dihedral_cayley::semidirect::Gamma;
use dihedral_cayley::words::{covering_word, targets};

fn main() {
    for (n, k) in [(2, 3), (3, 3), (2, 4), (2, 5)] {
        let gamma = Gamma::new(GroupContext::new(n, k).unwrap());
        println!("n={n} k={k}");
        for t in targets(gamma.ctx()) {
            let w = covering_word(&gamma, t).unwrap();
            let m = fiber_matrix(&w, &gamma);
            println!(
                "  {:>5}  {:<6} det={:>2} covers={} automorphism={}",
                t.to_string(),
                w.to_string(),
                det_exact(&m).unwrap(),
                covers_bruteforce(&w, &gamma, 1 << 20).unwrap(),
                automorphism_check(&m, gamma.ctx(), 1 << 20).unwrap()
            );
        }
    }
}
