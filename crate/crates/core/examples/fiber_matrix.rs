//! Fiber matrix, determinant and generator listing of a word.
//!
//!     cargo run --example fiber_matrix -- ABBAB
//!     cargo run --example fiber_matrix -- BAABBAABBAB

use dihedral_cayley::abelian::GroupContext;
use dihedral_cayley::fiber::{
    det_exact, elimination_check, fiber_matrix, has_type1_row, word_value, Word,
};
use dihedral_cayley::semidirect::Gamma;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "ABBAB".into());
    let w: Word = arg.parse().expect("word over {A, B}");
    let gamma = Gamma::new(GroupContext::new(2, w.len()).expect("length must be at least 3"));

    let m = fiber_matrix(&w, &gamma);
    println!("w = {w}, V(w) = {}", word_value(&w, gamma.dihedral()));
    println!("listing: {}", m.generator_listing());
    println!("{m}");
    println!("det = {}", det_exact(&m).unwrap());
    println!("elimination: {}", elimination_check(&m));
    match has_type1_row(&m) {
        Some(i) => println!("first row with a single 1: {}", i + 1),
        None => println!("no row with a single 1"),
    }

    // evaluate the walk on the unit vector e_1
    let mut x = vec![0; w.len()];
    x[0] = 1;
    println!(
        "walk on e_1 ends at {}",
        gamma.evaluate_walk(&w, &x).unwrap()
    );
}
