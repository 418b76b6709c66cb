//! Words over `{A, B}`, their fiber matrices, and the covering criterion.
//!
//! For a word `w = C_1 ⋯ C_m` the walk `γ_1(x_1) ⋯ γ_m(x_m)` from the identity
//! ends at a vertex whose prefix is linear in `x`: `P = x M(w)^T`. Row `i` of
//! `M(w)` is coordinate `i` of that prefix and column `j` the `j`-th generator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::abelian::{vec_index, GroupContext};
use crate::dihedral::{DihedralElement, DihedralGroup};
use crate::error::{Error, Result};
use crate::semidirect::Gamma;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn value(self) -> DihedralElement {
        match self {
            Letter::A => DihedralElement::a(),
            Letter::B => DihedralElement::b(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn push_run(&mut self, letter: Letter, count: usize) {
        self.letters.extend(std::iter::repeat_n(letter, count));
    }

    pub(crate) fn push_str(&mut self, pattern: &str, times: usize) {
        for _ in 0..times {
            self.letters.extend(pattern.bytes().map(|b| match b {
                b'A' => Letter::A,
                _ => Letter::B,
            }));
        }
    }

    /// All `2^len` words, letter `i` being `B` iff bit `i` of the counter is set.
    pub fn all(len: usize) -> impl Iterator<Item = Word> {
        (0u64..1 << len).map(move |bits| Word {
            letters: (0..len)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Letter::B
                    } else {
                        Letter::A
                    }
                })
                .collect(),
        })
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'A' | 'a' => Ok(Letter::A),
                'B' | 'b' => Ok(Letter::B),
                other => Err(Error::InvalidContext(format!(
                    "word letters must be A or B, found {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Letter::A => "A",
                Letter::B => "B",
            })?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A 0/1 matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiberMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl FiberMatrix {
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::InvalidMatrix("ragged rows".into()));
            }
            if row.iter().any(|&e| e > 1) {
                return Err(Error::InvalidMatrix("entries must be 0 or 1".into()));
            }
            entries.extend_from_slice(row);
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn identity(size: usize) -> Self {
        let mut entries = vec![0; size * size];
        for i in 0..size {
            entries[i * size + i] = 1;
        }
        Self {
            rows: size,
            cols: size,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j) as usize).sum())
            .collect()
    }

    /// `x M^T` over `Z_n`.
    pub fn apply(&self, x: &[u32], n: u32) -> Vec<u32> {
        let n = n as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self
                    .row(i)
                    .iter()
                    .zip(x)
                    .filter(|(&m, _)| m == 1)
                    .map(|(_, &xj)| xj as u64)
                    .sum();
                (s % n) as u32
            })
            .collect()
    }

    /// Column labels in the `a(i)` / `b(j,j')` notation (1-based rows holding the ones).
    pub fn generator_listing(&self) -> String {
        let mut out = String::new();
        for j in 0..self.cols {
            let ones: Vec<String> = (0..self.rows)
                .filter(|&i| self.get(i, j) == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            let tag = if ones.len() == 1 { 'a' } else { 'b' };
            out.push_str(&format!("{tag}({})", ones.join(",")));
        }
        out
    }
}

impl fmt::Display for FiberMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for &e in self.row(i) {
                write!(f, "{e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Fiber matrix of `word` by symbolic propagation of the generator indices
/// through the product rule. Works for any word length; the result is
/// `k × |word|`.
pub fn fiber_matrix(word: &Word, gamma: &Gamma) -> FiberMatrix {
    let k = gamma.ctx().k();
    let q = gamma.ctx().q();
    let m = word.len();
    let dihedral = gamma.dihedral();
    let mut entries = vec![0u8; k * m];
    let mut suffix = DihedralElement::IDENTITY;
    for (j, &letter) in word.letters().iter().enumerate() {
        let perm = dihedral.to_perm(suffix);
        for i in 0..k {
            // coordinate i picks up the generator's coordinate C(i)
            let src = perm.apply(i + 1) - 1;
            let hit = src == 0 || (letter == Letter::B && src == q);
            if hit {
                entries[i * m + j] += 1;
            }
        }
        suffix = dihedral.mul(suffix, letter.value());
    }
    FiberMatrix {
        rows: k,
        cols: m,
        entries,
    }
}

/// Product of the letters in `D_k`.
pub fn word_value(word: &Word, dihedral: &DihedralGroup) -> DihedralElement {
    word.letters()
        .iter()
        .fold(DihedralElement::IDENTITY, |acc, l| {
            dihedral.mul(acc, l.value())
        })
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_exact(m: &FiberMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::InvalidMatrix(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let size = m.rows;
    if size == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..size)
        .map(|i| m.row(i).iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..size - 1 {
        let Some(pivot) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if pivot != col {
            a.swap(pivot, col);
            sign = -sign;
        }
        for r in col + 1..size {
            for c in col + 1..size {
                let v = &a[r][c] * &a[col][col] - &a[r][col] * &a[col][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    Ok(sign * &a[size - 1][size - 1])
}

/// First row (0-based) containing exactly one 1.
pub fn has_type1_row(m: &FiberMatrix) -> Option<usize> {
    (0..m.rows).find(|&i| m.row(i).iter().filter(|&&e| e == 1).count() == 1)
}

/// Repeatedly deletes a type-I row together with the column of its single 1,
/// as in the proof that unimodular fiber matrices cover. Returns true iff this
/// reaches a `1 × 1` matrix `(1)`. Each deletion preserves `|det|`, so `true`
/// implies `|det| = 1`; for matrices with at most two 1s per column the
/// converse holds as well.
pub fn elimination_check(m: &FiberMatrix) -> bool {
    if !m.is_square() || m.rows == 0 {
        return false;
    }
    let mut rows: Vec<usize> = (0..m.rows).collect();
    let mut cols: Vec<usize> = (0..m.cols).collect();
    while rows.len() > 1 {
        let found = rows.iter().enumerate().find_map(|(ri, &r)| {
            let mut ones = cols.iter().enumerate().filter(|(_, &c)| m.get(r, c) == 1);
            match (ones.next(), ones.next()) {
                (Some((ci, _)), None) => Some((ri, ci)),
                _ => None,
            }
        });
        let Some((ri, ci)) = found else {
            return false;
        };
        rows.remove(ri);
        cols.remove(ci);
    }
    m.get(rows[0], cols[0]) == 1
}

fn enumeration_guard(ctx: &GroupContext, budget: u64) -> Result<u64> {
    let required = (ctx.n() as u128).pow(ctx.k() as u32);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(required as u64)
}

/// Default enumeration budget for brute-force checks.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1_000_000;

/// Walks every `x ∈ H^k` along `word` in the group itself and reports whether
/// every vertex with suffix `V(w)` is hit. Independent of [`fiber_matrix`].
pub fn covers_bruteforce(word: &Word, gamma: &Gamma, budget: u64) -> Result<bool> {
    let ctx = gamma.ctx();
    if word.len() != ctx.k() {
        return Err(Error::DimensionMismatch {
            expected: ctx.k(),
            actual: word.len(),
        });
    }
    let total = enumeration_guard(ctx, budget)?;
    let value = word_value(word, gamma.dihedral());
    let mut hit = vec![false; total as usize];
    let mut distinct = 0u64;
    for x in ctx.vectors()? {
        let end = gamma.evaluate_walk(word, x.coords())?;
        debug_assert_eq!(end.suffix(), value);
        let idx = vec_index(end.prefix(), ctx)? as usize;
        if !hit[idx] {
            hit[idx] = true;
            distinct += 1;
        }
    }
    Ok(distinct == total)
}

/// Checks that `x ↦ x M^T` is a bijective homomorphism of `H^k`.
///
/// Bijectivity is exhaustive. Additivity is exhaustive over pairs when
/// `n^{2k}` fits in the budget, and otherwise checked for every `x` against
/// the unit vectors and a fixed set of spread-out vectors.
pub fn automorphism_check(m: &FiberMatrix, ctx: &GroupContext, budget: u64) -> Result<bool> {
    let k = ctx.k();
    if m.rows != k || m.cols != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            actual: if m.rows != k { m.rows } else { m.cols },
        });
    }
    let total = enumeration_guard(ctx, budget)?;
    let n = ctx.n();
    let mut hit = vec![false; total as usize];
    let mut images = Vec::with_capacity(total as usize);
    for x in ctx.vectors()? {
        let y = crate::abelian::HVector::new(m.apply(x.coords(), n), ctx)?;
        let idx = vec_index(&y, ctx)? as usize;
        if hit[idx] {
            return Ok(false);
        }
        hit[idx] = true;
        images.push(idx);
    }

    let all: Vec<_> = ctx.vectors()?.collect();
    let probes: Vec<usize> = if (total as u128) * (total as u128) <= budget as u128 {
        (0..total as usize).collect()
    } else {
        let mut p: Vec<usize> = (0..k)
            .map(|i| vec_index(&ctx.unit(i, 1), ctx).expect("unit vector") as usize)
            .collect();
        // multiplicative stride through the index space
        p.extend((1..=16u64).map(|t| (t.wrapping_mul(0x9E37_79B9_7F4A_7C15) % total) as usize));
        p
    };
    for (xi, x) in all.iter().enumerate() {
        for &yi in &probes {
            let sum = crate::abelian::vec_add(x, &all[yi], ctx)?;
            let si = vec_index(&sum, ctx)? as usize;
            let lhs = &all[images[si]];
            let rhs = crate::abelian::vec_add(&all[images[xi]], &all[images[yi]], ctx)?;
            if *lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
