//! Print the generators A and B of D_k for small k and check the relations.

use dihedral_cayley::abelian::GroupContext;
use dihedral_cayley::dihedral::{make_a, make_b, perm_compose, DihedralGroup};

fn main() {
    for k in 3..=8 {
        let ctx = GroupContext::new(1, k).unwrap();
        let a = make_a(&ctx);
        let b = make_b(&ctx);
        let bab = perm_compose(&perm_compose(&b, &a).unwrap(), &b).unwrap();
        println!(
            "k={k} q={} eps={}  A={a}  B={b}  A^k=I:{} B^2=I:{} BAB=A^-1:{}",
            ctx.q(),
            ctx.eps(),
            a.pow(k).is_identity(),
            b.pow(2).is_identity(),
            bab == a.inverse()
        );
    }

    let d5 = DihedralGroup::new(&GroupContext::new(1, 5).unwrap());
    let names: Vec<String> = d5.elements().map(|e| e.to_string()).collect();
    println!("\nD_5 = {{{}}}", names.join(", "));
}
