//! The permutation representation of the dihedral group `D_k` inside `Sym(k)`.
//!
//! Conventions used throughout the crate:
//!
//! * the rotation `A` sends symbol `i` to `i - 1` and `1` to `k`;
//! * products apply left to right, `(PQ)(i) = Q(P(i))`.
//!
//! These are the conventions under which the semidirect product is associative
//! and the walk `ABBAB` over `k = 5` evaluates to
//! `(x1+x3, x2+x4, x3+x5, x2, x5) A^2 B`. Flipping either one breaks that.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::abelian::GroupContext;
use crate::error::{Error, Result};

/// A permutation of the symbols `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[i] is the image of symbol i + 1, itself in 1..=k
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self {
            images: (1..=k).collect(),
        }
    }

    /// `images[i]` is the image of symbol `i + 1`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k + 1];
        for &img in &images {
            if img == 0 || img > k || seen[img] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    /// Product of disjoint cycles on `1..=k`; cycle `(a, b, c)` maps `a -> b -> c -> a`.
    pub fn from_cycles(k: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=k).collect();
        let mut touched = vec![false; k + 1];
        for cycle in cycles {
            for (idx, &s) in cycle.iter().enumerate() {
                if s == 0 || s > k || touched[s] {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?}")));
                }
                touched[s] = true;
                images[s - 1] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based symbol `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img - 1] = i + 1;
        }
        Self { images }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity(self.degree());
        for _ in 0..e {
            acc = compose_unchecked(&acc, self);
        }
        acc
    }

    /// Order of the permutation as a group element.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut order = 1;
        while !acc.is_identity() {
            acc = compose_unchecked(&acc, self);
            order += 1;
        }
        order
    }

    /// Non-trivial cycles, each starting from its smallest symbol, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.degree();
        let mut seen = vec![false; k + 1];
        let mut out = Vec::new();
        for start in 1..=k {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            write!(f, "({})", parts.join(""))?;
        }
        Ok(())
    }
}

fn compose_unchecked(p: &Permutation, q: &Permutation) -> Permutation {
    Permutation {
        images: p.images.iter().map(|&i| q.images[i - 1]).collect(),
    }
}

/// `(PQ)(i) = Q(P(i))`.
pub fn perm_compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DimensionMismatch {
            expected: p.degree(),
            actual: q.degree(),
        });
    }
    Ok(compose_unchecked(p, q))
}

/// The `k`-cycle `A`, sending `i` to `i - 1` and `1` to `k`.
pub fn make_a(ctx: &GroupContext) -> Permutation {
    let k = ctx.k();
    Permutation {
        images: (1..=k).map(|i| if i == 1 { k } else { i - 1 }).collect(),
    }
}

/// The involution `B`, assembled from its two chains of disjoint transpositions.
pub fn make_b(ctx: &GroupContext) -> Permutation {
    let mut images: Vec<usize> = (1..=ctx.k()).collect();
    for (a, b) in b_transpositions(ctx.q(), ctx.eps()) {
        images[a - 1] = b;
        images[b - 1] = a;
    }
    Permutation { images }
}

/// The transpositions of `B` for `k = 2q + eps`: the chain `(1,q)(2,q-1)...`
/// followed by the chain `(q+1,k)(q+2,k-1)...`, each ending at the pair the
/// four parity cases prescribe. A chain whose end pair precedes its start is
/// empty.
pub fn b_transpositions(q: usize, eps: usize) -> Vec<(usize, usize)> {
    let k = 2 * q + eps;
    // end pairs are computed in isize so that an empty chain's `0` survives
    let qi = q as isize;
    let (first_end, second_end) = match (q % 2, eps) {
        (0, 0) => ((qi / 2, qi / 2 + 1), (3 * qi / 2, 3 * qi / 2 + 1)),
        (0, _) => ((qi / 2, qi / 2 + 1), (3 * qi / 2, 3 * qi / 2 + 2)),
        (_, 0) => (
            ((qi + 1) / 2 - 1, (qi + 1) / 2 + 1),
            ((3 * qi + 1) / 2 - 1, (3 * qi + 1) / 2 + 1),
        ),
        (_, _) => (
            ((qi + 1) / 2 - 1, (qi + 1) / 2 + 1),
            ((3 * qi + 1) / 2, (3 * qi + 1) / 2 + 1),
        ),
    };
    let mut out = chain((1, qi), first_end);
    out.extend(chain((qi + 1, k as isize), second_end));
    out
}

fn chain(start: (isize, isize), end: (isize, isize)) -> Vec<(usize, usize)> {
    if end.0 < start.0 || start.0 >= start.1 {
        return Vec::new();
    }
    let steps = end.0 - start.0;
    debug_assert_eq!(
        start.1 - steps,
        end.1,
        "chain {start:?}..{end:?} is not symmetric"
    );
    (0..=steps)
        .map(|t| ((start.0 + t) as usize, (start.1 - t) as usize))
        .collect()
}

/// Canonical form `A^rotation B^(reflected as 0/1)` of an element of `D_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DihedralElement {
    rotation: usize,
    reflected: bool,
}

impl DihedralElement {
    pub const IDENTITY: Self = Self {
        rotation: 0,
        reflected: false,
    };

    /// `A^rotation B^reflected`; `rotation` is reduced mod `k`.
    pub fn new(rotation: usize, reflected: bool, ctx: &GroupContext) -> Self {
        Self {
            rotation: rotation % ctx.k(),
            reflected,
        }
    }

    pub fn a() -> Self {
        Self {
            rotation: 1,
            reflected: false,
        }
    }

    pub fn b() -> Self {
        Self {
            rotation: 0,
            reflected: true,
        }
    }

    #[inline]
    pub fn rotation(&self) -> usize {
        self.rotation
    }

    #[inline]
    pub fn reflected(&self) -> bool {
        self.reflected
    }

    /// `(rotation + reflected) mod 2`: the side of the bipartition for even `k`.
    pub fn parity_class(&self) -> usize {
        (self.rotation + self.reflected as usize) % 2
    }

    /// Position in `0..2k`: `rotation + k * reflected`.
    #[inline]
    pub fn index(&self, k: usize) -> usize {
        self.rotation + k * self.reflected as usize
    }

    pub fn from_index(index: usize, k: usize) -> Self {
        Self {
            rotation: index % k,
            reflected: index >= k,
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rotation, self.reflected) {
            (0, false) => write!(f, "e"),
            (0, true) => write!(f, "B"),
            (1, r) => write!(f, "A{}", if r { "B" } else { "" }),
            (p, r) => write!(f, "A^{p}{}", if r { "B" } else { "" }),
        }
    }
}

/// Product in `D_k` from the relation `BAB = A^-1`.
pub fn dihedral_mul(
    lhs: DihedralElement,
    rhs: DihedralElement,
    ctx: &GroupContext,
) -> DihedralElement {
    let k = ctx.k();
    let rotation = if lhs.reflected {
        (lhs.rotation + k - rhs.rotation) % k
    } else {
        (lhs.rotation + rhs.rotation) % k
    };
    DihedralElement {
        rotation,
        reflected: lhs.reflected ^ rhs.reflected,
    }
}

/// `A^p B^l` as a permutation, computed by composing powers.
pub fn dihedral_to_perm(e: DihedralElement, ctx: &GroupContext) -> Permutation {
    let mut perm = make_a(ctx).pow(e.rotation);
    if e.reflected {
        perm = compose_unchecked(&perm, &make_b(ctx));
    }
    perm
}

pub fn perm_to_dihedral(p: &Permutation, ctx: &GroupContext) -> Result<DihedralElement> {
    DihedralGroup::new(ctx).from_perm(p)
}

/// Lookup tables for the `2k` elements of `D_k`, indexed by
/// [`DihedralElement::index`].
#[derive(Debug, Clone)]
pub struct DihedralGroup {
    k: usize,
    perms: Vec<Permutation>,
    lookup: HashMap<Vec<usize>, usize>,
    mul: Vec<usize>,
}

impl DihedralGroup {
    pub fn new(ctx: &GroupContext) -> Self {
        let k = ctx.k();
        let a = make_a(ctx);
        let b = make_b(ctx);
        let mut perms = Vec::with_capacity(2 * k);
        let mut rot = Permutation::identity(k);
        for _ in 0..k {
            perms.push(rot.clone());
            rot = compose_unchecked(&rot, &a);
        }
        for p in 0..k {
            let refl = compose_unchecked(&perms[p], &b);
            perms.push(refl);
        }
        let lookup = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.images.clone(), i))
            .collect();
        let mut group = Self {
            k,
            perms,
            lookup,
            mul: Vec::new(),
        };
        let size = 2 * k;
        let mut mul = vec![0; size * size];
        for i in 0..size {
            for j in 0..size {
                let prod = compose_unchecked(&group.perms[i], &group.perms[j]);
                mul[i * size + j] = group.lookup[&prod.images];
            }
        }
        group.mul = mul;
        group
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn order(&self) -> usize {
        2 * self.k
    }

    pub fn elements(&self) -> impl Iterator<Item = DihedralElement> + '_ {
        (0..2 * self.k).map(move |i| DihedralElement::from_index(i, self.k))
    }

    #[inline]
    pub fn to_perm(&self, e: DihedralElement) -> &Permutation {
        &self.perms[e.index(self.k)]
    }

    pub fn from_perm(&self, p: &Permutation) -> Result<DihedralElement> {
        if p.degree() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                actual: p.degree(),
            });
        }
        self.lookup
            .get(&p.images)
            .map(|&i| DihedralElement::from_index(i, self.k))
            .ok_or(Error::NotInGroup)
    }

    /// Product through the permutation table.
    #[inline]
    pub fn mul(&self, lhs: DihedralElement, rhs: DihedralElement) -> DihedralElement {
        let size = 2 * self.k;
        DihedralElement::from_index(
            self.mul[lhs.index(self.k) * size + rhs.index(self.k)],
            self.k,
        )
    }

    #[inline]
    pub(crate) fn mul_index(&self, lhs: usize, rhs: usize) -> usize {
        self.mul[lhs * 2 * self.k + rhs]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(k: usize) -> GroupContext {
        GroupContext::new(1, k).unwrap()
    }

    #[test]
    fn a_for_k5_sends_i_to_i_minus_one() {
        assert_eq!(make_a(&ctx(5)).images(), &[5, 1, 2, 3, 4]);
    }

    #[test]
    fn printed_small_cases() {
        // A is the k-cycle (12...k) read in the chosen direction; as a set of
        // cycles it is a single k-cycle.
        let c3 = ctx(3);
        assert_eq!(make_a(&c3).cycles().len(), 1);
        assert_eq!(make_a(&c3).order(), 3);
        assert_eq!(
            make_b(&c3),
            Permutation::from_cycles(3, &[&[2, 3]]).unwrap()
        );
        assert_eq!(
            make_b(&ctx(4)),
            Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap()
        );
        assert_eq!(
            make_b(&ctx(5)),
            Permutation::from_cycles(5, &[&[1, 2], &[3, 5]]).unwrap()
        );
        assert_eq!(
            make_b(&ctx(6)),
            Permutation::from_cycles(6, &[&[1, 3], &[4, 6]]).unwrap()
        );
        assert_eq!(make_b(&ctx(5)).to_string(), "(12)(35)");
    }

    #[test]
    fn transposition_lists_match_block_reversal() {
        for k in 3..=13 {
            let c = ctx(k);
            let q = c.q();
            let b = make_b(&c);
            for i in 1..=k {
                let expected = if i <= q { q + 1 - i } else { k + q + 1 - i };
                assert_eq!(b.apply(i), expected, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn presentation_relations() {
        for k in 3..=12 {
            let c = ctx(k);
            let a = make_a(&c);
            let b = make_b(&c);
            assert_eq!(a.order(), k);
            assert!(a.pow(k).is_identity());
            assert!(perm_compose(&b, &b).unwrap().is_identity());
            let bab = perm_compose(&perm_compose(&b, &a).unwrap(), &b).unwrap();
            assert_eq!(bab, a.inverse());
            let g = DihedralGroup::new(&c);
            assert_eq!(g.lookup.len(), 2 * k, "A^p B^l not pairwise distinct");
        }
    }

    #[test]
    fn compose_identity_and_size_mismatch() {
        let p = make_a(&ctx(5));
        assert_eq!(perm_compose(&p, &Permutation::identity(5)).unwrap(), p);
        assert!(perm_compose(&p, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn conversion_examples() {
        let c = ctx(5);
        assert!(dihedral_to_perm(DihedralElement::IDENTITY, &c).is_identity());
        let ab = perm_compose(&make_a(&c), &make_b(&c)).unwrap();
        assert_eq!(dihedral_to_perm(DihedralElement::new(1, true, &c), &c), ab);
        assert_eq!(
            perm_to_dihedral(&make_b(&c), &c).unwrap(),
            DihedralElement::b()
        );
        // a transposition outside D_5
        let t = Permutation::from_cycles(5, &[&[1, 2]]).unwrap();
        assert!(matches!(perm_to_dihedral(&t, &c), Err(Error::NotInGroup)));
    }

    #[test]
    fn mul_examples() {
        let c = ctx(5);
        let ab = DihedralElement::new(1, true, &c);
        assert_eq!(dihedral_mul(ab, ab, &c), DihedralElement::IDENTITY);
        let a3 = DihedralElement::new(3, false, &c);
        assert_eq!(dihedral_mul(a3, DihedralElement::IDENTITY, &c), a3);
        let lhs = DihedralElement::new(2, false, &c);
        let rhs = DihedralElement::new(3, true, &c);
        let via_perms =
            perm_compose(&dihedral_to_perm(lhs, &c), &dihedral_to_perm(rhs, &c)).unwrap();
        assert_eq!(
            perm_to_dihedral(&via_perms, &c).unwrap(),
            DihedralElement::new(0, true, &c)
        );
        assert_eq!(
            dihedral_mul(lhs, rhs, &c),
            DihedralElement::new(0, true, &c)
        );
    }

    #[test]
    fn formula_matches_permutations_exhaustive() {
        for k in 3..=8 {
            let c = ctx(k);
            let g = DihedralGroup::new(&c);
            for x in g.elements() {
                assert_eq!(g.from_perm(&dihedral_to_perm(x, &c)).unwrap(), x);
                for y in g.elements() {
                    let composed = perm_compose(g.to_perm(x), g.to_perm(y)).unwrap();
                    assert_eq!(g.from_perm(&composed).unwrap(), dihedral_mul(x, y, &c));
                    assert_eq!(g.mul(x, y), dihedral_mul(x, y, &c));
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        let c = ctx(5);
        assert_eq!(DihedralElement::new(2, true, &c).to_string(), "A^2B");
        assert_eq!(DihedralElement::IDENTITY.to_string(), "e");
        assert_eq!(DihedralElement::new(1, false, &c).to_string(), "A");
    }
}
