//! The group `H^k ⋊ D_k` whose elements are pairs (prefix, suffix), with
//! `(h, C) * (h', C') = (h + h' ∘ C, CC')`.

use std::fmt;

use serde::Serialize;

use crate::abelian::{vec_index, vec_unindex, GroupContext, HVector};
use crate::dihedral::{DihedralElement, DihedralGroup};
use crate::error::{Error, Result};
use crate::fiber::{Letter, Word};

/// A vertex of the Cayley digraph: prefix in `H^k`, suffix in `D_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GammaElement {
    prefix: HVector,
    suffix: DihedralElement,
}

impl GammaElement {
    #[inline]
    pub fn prefix(&self) -> &HVector {
        &self.prefix
    }

    #[inline]
    pub fn suffix(&self) -> DihedralElement {
        self.suffix
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·{}", self.prefix, self.suffix)
    }
}

/// The group `Γ_k = H^k ⋊ D_k` for a fixed context.
#[derive(Debug, Clone)]
pub struct Gamma {
    ctx: GroupContext,
    dihedral: DihedralGroup,
}

impl Gamma {
    pub fn new(ctx: GroupContext) -> Self {
        Self {
            dihedral: DihedralGroup::new(&ctx),
            ctx,
        }
    }

    #[inline]
    pub fn ctx(&self) -> &GroupContext {
        &self.ctx
    }

    #[inline]
    pub fn dihedral(&self) -> &DihedralGroup {
        &self.dihedral
    }

    /// `2k n^k`, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        self.ctx
            .vector_count()?
            .checked_mul(2 * self.ctx.k() as u64)
    }

    pub fn identity(&self) -> GammaElement {
        GammaElement {
            prefix: self.ctx.zero(),
            suffix: DihedralElement::IDENTITY,
        }
    }

    pub fn element(&self, prefix: HVector, suffix: DihedralElement) -> Result<GammaElement> {
        self.check(&prefix)?;
        Ok(GammaElement {
            prefix,
            suffix: DihedralElement::new(suffix.rotation(), suffix.reflected(), &self.ctx),
        })
    }

    fn check(&self, prefix: &HVector) -> Result<()> {
        if prefix.len() != self.ctx.k() {
            return Err(Error::DimensionMismatch {
                expected: self.ctx.k(),
                actual: prefix.len(),
            });
        }
        Ok(())
    }

    /// `(h_1 + h'_{C(1)}, ..., h_k + h'_{C(k)}) CC'` where `C` is the suffix of `g`.
    pub fn mul(&self, g: &GammaElement, h: &GammaElement) -> Result<GammaElement> {
        self.check(&g.prefix)?;
        self.check(&h.prefix)?;
        let n = self.ctx.n() as u64;
        let perm = self.dihedral.to_perm(g.suffix);
        let coords = (0..self.ctx.k())
            .map(|i| {
                let j = perm.apply(i + 1) - 1;
                ((g.prefix.get(i) as u64 + h.prefix.get(j) as u64) % n) as u32
            })
            .collect();
        Ok(GammaElement {
            prefix: HVector::from_reduced(coords),
            suffix: self.dihedral.mul(g.suffix, h.suffix),
        })
    }

    pub fn inverse(&self, g: &GammaElement) -> Result<GammaElement> {
        self.check(&g.prefix)?;
        // (h, C)^-1 = (h', C^-1) with h'_{C(i)} = -h_i
        let inv_suffix = self
            .dihedral
            .elements()
            .find(|&c| self.dihedral.mul(g.suffix, c) == DihedralElement::IDENTITY)
            .expect("dihedral group is closed under inverses");
        let n = self.ctx.n();
        let perm = self.dihedral.to_perm(g.suffix);
        let mut coords = vec![0; self.ctx.k()];
        for i in 0..self.ctx.k() {
            coords[perm.apply(i + 1) - 1] = (n - g.prefix.get(i)) % n;
        }
        Ok(GammaElement {
            prefix: HVector::from_reduced(coords),
            suffix: inv_suffix,
        })
    }

    /// `a(x) = (x, 0, ..., 0) A`.
    pub fn gen_a(&self, x: u32) -> GammaElement {
        GammaElement {
            prefix: self.ctx.unit(0, x),
            suffix: DihedralElement::a(),
        }
    }

    /// `b(x) = (x, 0, ..., 0, x, 0, ..., 0) B`, the second `x` in coordinate `q + 1`.
    pub fn gen_b(&self, x: u32) -> GammaElement {
        let mut coords = vec![0; self.ctx.k()];
        let x = x % self.ctx.n();
        coords[0] = x;
        coords[self.ctx.q()] = x;
        GammaElement {
            prefix: HVector::from_reduced(coords),
            suffix: DihedralElement::b(),
        }
    }

    pub fn generator(&self, letter: Letter, x: u32) -> GammaElement {
        match letter {
            Letter::A => self.gen_a(x),
            Letter::B => self.gen_b(x),
        }
    }

    /// Product `γ_1(x_1) ⋯ γ_m(x_m)` of the walk whose generator types follow `word`.
    pub fn evaluate_walk(&self, word: &Word, xs: &[u32]) -> Result<GammaElement> {
        if word.len() != xs.len() {
            return Err(Error::DimensionMismatch {
                expected: word.len(),
                actual: xs.len(),
            });
        }
        word.letters()
            .iter()
            .zip(xs)
            .try_fold(self.identity(), |acc, (&letter, &x)| {
                self.mul(&acc, &self.generator(letter, x))
            })
    }

    /// `suffix.index + 2k * vec_index(prefix)`.
    pub fn encode(&self, g: &GammaElement) -> Result<u64> {
        let k = self.ctx.k();
        Ok(g.suffix.index(k) as u64 + 2 * k as u64 * vec_index(&g.prefix, &self.ctx)?)
    }

    pub fn decode(&self, id: u64) -> Result<GammaElement> {
        let limit = self.order().ok_or(Error::BudgetExceeded {
            required: u128::MAX,
            budget: u64::MAX,
        })?;
        if id >= limit {
            return Err(Error::IndexOutOfRange { index: id, limit });
        }
        let span = 2 * self.ctx.k() as u64;
        Ok(GammaElement {
            prefix: vec_unindex(id / span, &self.ctx)?,
            suffix: DihedralElement::from_index((id % span) as usize, self.ctx.k()),
        })
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> Result<impl Iterator<Item = GammaElement> + '_> {
        let order = self.order().ok_or(Error::BudgetExceeded {
            required: u128::MAX,
            budget: u64::MAX,
        })?;
        Ok((0..order).map(move |id| self.decode(id).expect("id below order")))
    }
}

pub fn gamma_mul(g: &GammaElement, h: &GammaElement, gamma: &Gamma) -> Result<GammaElement> {
    gamma.mul(g, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(n: u32, k: usize) -> Gamma {
        Gamma::new(GroupContext::new(n, k).unwrap())
    }

    #[test]
    fn generators_have_expected_shape() {
        let g = gamma(3, 5);
        let a = g.gen_a(2);
        assert_eq!(a.prefix().coords(), &[2, 0, 0, 0, 0]);
        assert_eq!(a.suffix(), DihedralElement::a());
        let b = g.gen_b(1);
        assert_eq!(b.prefix().coords(), &[1, 0, 1, 0, 0]);
        assert_eq!(b.suffix(), DihedralElement::b());
        assert!(g.gen_b(0).prefix().is_zero());
        assert_eq!(gamma(2, 3).gen_b(1).prefix().coords(), &[1, 1, 0]);
        assert_eq!(gamma(2, 3).gen_a(0).prefix().coords(), &[0, 0, 0]);
    }

    #[test]
    fn identity_is_neutral() {
        let g = gamma(3, 5);
        let x = g.mul(&g.gen_a(2), &g.gen_b(1)).unwrap();
        assert_eq!(g.mul(&x, &g.identity()).unwrap(), x);
        assert_eq!(g.mul(&g.identity(), &x).unwrap(), x);
    }

    #[test]
    fn walk_abbab_over_unit_vectors() {
        // (x1+x3, x2+x4, x3+x5, x2, x5) A^2 B
        let expected_rows: [&[usize]; 5] = [&[0, 2], &[1, 3], &[2, 4], &[1], &[4]];
        let word: Word = "ABBAB".parse().unwrap();
        for n in [2u32, 3, 5] {
            let g = gamma(n, 5);
            for j in 0..5 {
                let mut xs = [0u32; 5];
                xs[j] = 1;
                let prod = g.evaluate_walk(&word, &xs).unwrap();
                assert_eq!(prod.suffix(), DihedralElement::new(2, true, g.ctx()));
                for (i, row) in expected_rows.iter().enumerate() {
                    assert_eq!(
                        prod.prefix().get(i),
                        row.contains(&j) as u32,
                        "n={n} x{} coord {i}",
                        j + 1
                    );
                }
            }
        }
    }

    #[test]
    fn walk_bba_for_k3() {
        // prefix (x1+x2+x3, x1, x2), suffix A
        let g = gamma(7, 3);
        let word: Word = "BBA".parse().unwrap();
        let prod = g.evaluate_walk(&word, &[1, 2, 4]).unwrap();
        assert_eq!(prod.prefix().coords(), &[0, 1, 2]);
        assert_eq!(prod.suffix(), DihedralElement::a());
    }

    #[test]
    fn zero_walk_has_word_value_suffix() {
        let g = gamma(4, 5);
        let word: Word = "ABBAB".parse().unwrap();
        let prod = g.evaluate_walk(&word, &[0; 5]).unwrap();
        assert!(prod.prefix().is_zero());
        assert_eq!(prod.suffix(), DihedralElement::new(2, true, g.ctx()));
    }

    #[test]
    fn walk_length_mismatch() {
        let g = gamma(2, 3);
        let word: Word = "AB".parse().unwrap();
        assert!(g.evaluate_walk(&word, &[0, 0, 0]).is_err());
    }

    #[test]
    fn group_axioms_exhaustive_n2_k3() {
        let g = gamma(2, 3);
        let all: Vec<_> = g.elements().unwrap().collect();
        assert_eq!(all.len(), 48);
        for x in &all {
            let inv = g.inverse(x).unwrap();
            assert_eq!(g.mul(x, &inv).unwrap(), g.identity());
            assert_eq!(g.mul(&inv, x).unwrap(), g.identity());
            for y in &all {
                let xy = g.mul(x, y).unwrap();
                for z in &all {
                    assert_eq!(
                        g.mul(&xy, z).unwrap(),
                        g.mul(x, &g.mul(y, z).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn order_and_encoding() {
        for (n, k) in [(1u32, 3usize), (2, 3), (3, 3), (2, 4), (2, 5)] {
            let g = gamma(n, k);
            let order = g.order().unwrap();
            assert_eq!(order, 2 * k as u64 * (n as u64).pow(k as u32));
            let mut count = 0;
            for (id, e) in g.elements().unwrap().enumerate() {
                assert_eq!(g.encode(&e).unwrap(), id as u64);
                count += 1;
            }
            assert_eq!(count, order);
            assert!(g.decode(order).is_err());
        }
    }
}
