//! Exhaustive sweeps over small parameters.

use dihedral_cayley::abelian::GroupContext;
use dihedral_cayley::bounds::{
    bipartite_moore, construction_order, exactness_certificate, moore, record_table,
    threshold_degree,
};
use dihedral_cayley::digraph::{CayleyDigraph, DigraphSpec, VertexId, DEFAULT_VERTEX_BUDGET};
use dihedral_cayley::fiber::{
    covers_bruteforce, det_exact, elimination_check, fiber_matrix, has_type1_row, word_value,
    Letter, Word,
};
use dihedral_cayley::semidirect::Gamma;
use dihedral_cayley::words::{covering_word, targets, verify_word_family};
use num_bigint::BigUint;
use num_traits::{One, Signed};

fn gamma(n: u32, k: usize) -> Gamma {
    Gamma::new(GroupContext::new(n, k).unwrap())
}

fn graph(n: u32, k: usize, bip: bool, odd: bool) -> CayleyDigraph {
    CayleyDigraph::new(DigraphSpec::new(n, k, bip, odd).unwrap()).unwrap()
}

#[test]
fn fiber_matrix_matches_walks_exhaustively() {
    for k in 3..=5 {
        let g = gamma(2, k);
        let ctx = *g.ctx();
        for w in Word::all(k) {
            let m = fiber_matrix(&w, &g);
            for x in ctx.vectors().unwrap() {
                let end = g.evaluate_walk(&w, x.coords()).unwrap();
                assert_eq!(
                    end.prefix().coords(),
                    &m.apply(x.coords(), 2)[..],
                    "w={w} x={x}"
                );
                assert_eq!(end.suffix(), word_value(&w, g.dihedral()));
            }
        }
    }
}

#[test]
fn column_sums_follow_letters() {
    for k in 3..=9 {
        let g = gamma(1, k);
        for w in Word::all(k) {
            let sums = fiber_matrix(&w, &g).column_sums();
            for (s, l) in sums.iter().zip(w.letters()) {
                assert_eq!(*s, if *l == Letter::A { 1 } else { 2 }, "w={w}");
            }
        }
    }
}

#[test]
fn unimodular_fiber_matrices_cover_and_eliminate() {
    // unimodular implies covering; for n = 2 the converse holds as well
    for k in 3..=9 {
        let g2 = gamma(2, k);
        for w in Word::all(k) {
            let m = fiber_matrix(&w, &g2);
            let unimodular = det_exact(&m).unwrap().abs().is_one();
            assert_eq!(elimination_check(&m), unimodular, "w={w}");
            if unimodular {
                assert!(has_type1_row(&m).is_some(), "w={w}");
            }
            assert_eq!(
                covers_bruteforce(&w, &g2, 1 << 20).unwrap(),
                unimodular,
                "w={w}"
            );
        }
    }
}

#[test]
fn unimodular_words_cover_for_n3() {
    for k in 3..=6 {
        let g = gamma(3, k);
        for w in Word::all(k) {
            if det_exact(&fiber_matrix(&w, &g)).unwrap().abs().is_one() {
                assert!(covers_bruteforce(&w, &g, 1 << 20).unwrap(), "w={w}");
            }
        }
    }
}

#[test]
fn odd_family_is_complete_up_to_25() {
    for k in (3..=25).step_by(2) {
        let g = gamma(1, k);
        let r = verify_word_family(&g, 0);
        assert_eq!(r.total, 2 * k);
        assert!(r.all_passed(), "k={k}\n{r}");
    }
}

#[test]
fn even_family_is_complete_up_to_24() {
    for k in (4..=24).step_by(2) {
        let g = gamma(1, k);
        let r = verify_word_family(&g, 0);
        assert_eq!(r.total, k);
        assert!(r.all_passed(), "k={k}\n{r}");
        for t in g.dihedral().elements().filter(|t| t.parity_class() == 1) {
            assert!(covering_word(&g, t).is_err());
        }
    }
}

#[test]
fn diameters_within_bound() {
    for (n, k) in [
        (1, 3),
        (2, 3),
        (3, 3),
        (1, 5),
        (2, 5),
        (3, 5),
        (1, 7),
        (2, 7),
    ] {
        let g = graph(n, k, false, false);
        let e = g.eccentricity_from_identity(DEFAULT_VERTEX_BUDGET).unwrap();
        assert!(e as usize <= k, "n={n} k={k} diameter {e}");
    }
    for (n, k) in [(1, 5), (2, 5), (3, 5), (1, 7), (2, 7), (3, 7)] {
        let g = graph(n, k, true, false);
        let e = g.eccentricity_from_identity(DEFAULT_VERTEX_BUDGET).unwrap();
        assert!(e as usize <= k, "bipartite n={n} k={k} diameter {e}");
        assert!(g.check_bipartite());
        let half = g.order() / 2;
        assert_eq!(g.class_sizes(), [half, half]);
    }
}

#[test]
fn extra_generator_never_increases_diameter() {
    for (n, k, bip) in [
        (1, 3, false),
        (2, 3, false),
        (3, 3, false),
        (2, 5, false),
        (1, 5, true),
        (2, 5, true),
        (3, 5, true),
    ] {
        let base = graph(n, k, bip, false)
            .eccentricity_from_identity(DEFAULT_VERTEX_BUDGET)
            .unwrap();
        let extra = graph(n, k, bip, true);
        assert_eq!(extra.degree(), 2 * n as usize + 1);
        let e = extra
            .eccentricity_from_identity(DEFAULT_VERTEX_BUDGET)
            .unwrap();
        assert!(e <= base, "n={n} k={k} bip={bip}: {e} > {base}");
        if bip {
            assert!(extra.check_bipartite());
        }
    }
}

#[test]
fn neighbours_are_distinct() {
    for (n, k, bip, odd) in [
        (1, 3, false, true),
        (2, 3, false, true),
        (2, 5, true, true),
        (1, 5, true, true),
    ] {
        let g = graph(n, k, bip, odd);
        for u in 0..g.order() {
            let mut nb = g.out_neighbors(VertexId(u)).unwrap();
            nb.sort();
            nb.dedup();
            assert_eq!(nb.len(), g.degree());
        }
    }
}

#[test]
fn eccentricity_is_source_independent() {
    for (n, k, bip) in [(2, 3, false), (3, 3, false), (2, 5, true)] {
        let g = graph(n, k, bip, false);
        let base = g
            .distance_spectrum(g.identity(), DEFAULT_VERTEX_BUDGET)
            .unwrap();
        for src in [g.order() / 3, g.order() / 2 + 1, g.order() - 1] {
            assert_eq!(
                g.distance_spectrum(VertexId(src), DEFAULT_VERTEX_BUDGET)
                    .unwrap(),
                base
            );
        }
    }
}

#[test]
fn order_formula_matches_enumeration() {
    for n in 1..=3u32 {
        for k in [3usize, 5] {
            let g = graph(n, k, false, false);
            let visited = g
                .distances_from(g.identity(), DEFAULT_VERTEX_BUDGET)
                .unwrap()
                .len() as u64;
            assert_eq!(
                BigUint::from(visited),
                construction_order(2 * n as u64, k as u32, false).unwrap()
            );
        }
        let g = graph(n, 5, true, false);
        assert_eq!(
            BigUint::from(g.order()),
            construction_order(2 * n as u64, 5, true).unwrap()
        );
    }
}

#[test]
fn orders_beyond_threshold_exceed_moore() {
    for k in (3..=15u32).step_by(2) {
        let t = threshold_degree(k, false).unwrap();
        for d in t..=t + 20 {
            assert!(
                construction_order(d, k, false).unwrap() > moore(d, k - 1),
                "d={d} k={k}"
            );
        }
    }
    for k in (5..=15u32).step_by(2) {
        let t = threshold_degree(k, true).unwrap();
        for d in t..=t + 20 {
            assert!(
                construction_order(d, k, true).unwrap() > bipartite_moore(d, k - 1).unwrap(),
                "d={d} k={k}"
            );
        }
    }
}

#[test]
fn table_rows_above_threshold_are_certified_and_monotone() {
    let mut out = Vec::new();
    record_table(2..=40, &[3, 5], false, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    let mut last: Option<(u32, BigUint)> = None;
    for line in text.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let d: u64 = f[0].parse().unwrap();
        let k: u32 = f[1].parse().unwrap();
        let order: BigUint = f[2].parse().unwrap();
        if d >= threshold_degree(k, false).unwrap() {
            assert_eq!(f[4], "true", "{line}");
        }
        if let Some((lk, lo)) = &last {
            if *lk == k {
                assert!(order >= *lo);
            }
        }
        last = Some((k, order));
        assert_eq!(
            exactness_certificate(d, k, false)
                .unwrap()
                .exact_diameter_certified
                .to_string(),
            f[4]
        );
    }
}

#[test]
fn even_family_targets_are_one_parity_class() {
    for k in (4..=12).step_by(2) {
        let ctx = GroupContext::new(1, k).unwrap();
        assert!(targets(&ctx).iter().all(|t| t.parity_class() == 0));
    }
}
