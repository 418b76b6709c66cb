//! The coefficient group `H = Z_n` and its `k`-fold direct product `H^k`.
//!
//! Residues are stored reduced into `[0, n)`. Vectors index into
//! `[0, n^k)` little-endian, coordinate 0 being the least significant digit.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Order of `H` together with the number of coordinates `k = 2q + eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupContext {
    n: u32,
    k: usize,
}

impl GroupContext {
    pub fn new(n: u32, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidContext("n must be at least 1".into()));
        }
        if k < 3 {
            return Err(Error::InvalidContext(format!(
                "k must be at least 3, got {k}"
            )));
        }
        Ok(Self { n, k })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// `floor(k / 2)`.
    #[inline]
    pub fn q(&self) -> usize {
        self.k / 2
    }

    /// `k mod 2`.
    #[inline]
    pub fn eps(&self) -> usize {
        self.k % 2
    }

    /// `n^k`, or `None` on `u64` overflow.
    pub fn vector_count(&self) -> Option<u64> {
        (self.n as u64).checked_pow(self.k as u32)
    }

    pub fn zero(&self) -> HVector {
        HVector {
            coords: vec![0; self.k],
        }
    }

    /// The vector with `value` in coordinate `index` (0-based) and zeros elsewhere.
    pub fn unit(&self, index: usize, value: u32) -> HVector {
        let mut v = self.zero();
        v.coords[index] = value % self.n;
        v
    }

    /// Iterates over all of `H^k` in index order.
    pub fn vectors(&self) -> Result<impl Iterator<Item = HVector> + '_> {
        let count = self.vector_count().ok_or(Error::BudgetExceeded {
            required: u128::MAX,
            budget: u64::MAX,
        })?;
        Ok((0..count).map(move |i| unindex_unchecked(i, self)))
    }
}

/// An element `(h_1, ..., h_k)` of `H^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HVector {
    coords: Vec<u32>,
}

impl HVector {
    /// Builds a vector of length `ctx.k()`, reducing each coordinate mod `n`.
    pub fn new(coords: Vec<u32>, ctx: &GroupContext) -> Result<Self> {
        if coords.len() != ctx.k {
            return Err(Error::DimensionMismatch {
                expected: ctx.k,
                actual: coords.len(),
            });
        }
        let n = ctx.n;
        Ok(Self {
            coords: coords.into_iter().map(|c| c % n).collect(),
        })
    }

    #[inline]
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub(crate) fn from_reduced(coords: Vec<u32>) -> Self {
        Self { coords }
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_len(v: &HVector, ctx: &GroupContext) -> Result<()> {
    if v.len() != ctx.k {
        return Err(Error::DimensionMismatch {
            expected: ctx.k,
            actual: v.len(),
        });
    }
    Ok(())
}

/// Componentwise sum mod `n`.
pub fn vec_add(u: &HVector, v: &HVector, ctx: &GroupContext) -> Result<HVector> {
    check_len(u, ctx)?;
    check_len(v, ctx)?;
    let n = ctx.n as u64;
    let coords = u
        .coords
        .iter()
        .zip(&v.coords)
        .map(|(&a, &b)| ((a as u64 + b as u64) % n) as u32)
        .collect();
    Ok(HVector { coords })
}

pub fn vec_neg(u: &HVector, ctx: &GroupContext) -> Result<HVector> {
    check_len(u, ctx)?;
    let n = ctx.n;
    Ok(HVector {
        coords: u.coords.iter().map(|&a| (n - a) % n).collect(),
    })
}

/// Little-endian mixed-radix encoding: `sum v[j] * n^j`.
pub fn vec_index(v: &HVector, ctx: &GroupContext) -> Result<u64> {
    check_len(v, ctx)?;
    let limit = ctx.vector_count().ok_or(Error::BudgetExceeded {
        required: u128::MAX,
        budget: u64::MAX,
    })?;
    let n = ctx.n as u64;
    let index = v
        .coords
        .iter()
        .rev()
        .fold(0u64, |acc, &c| acc * n + c as u64);
    debug_assert!(index < limit);
    Ok(index)
}

pub fn vec_unindex(index: u64, ctx: &GroupContext) -> Result<HVector> {
    let limit = ctx.vector_count().ok_or(Error::BudgetExceeded {
        required: u128::MAX,
        budget: u64::MAX,
    })?;
    if index >= limit {
        return Err(Error::IndexOutOfRange { index, limit });
    }
    Ok(unindex_unchecked(index, ctx))
}

fn unindex_unchecked(mut index: u64, ctx: &GroupContext) -> HVector {
    let n = ctx.n as u64;
    let mut coords = Vec::with_capacity(ctx.k);
    for _ in 0..ctx.k {
        coords.push((index % n) as u32);
        index /= n;
    }
    HVector { coords }
}
