//! Explicit covering words: for each target `C ∈ D_k` a length-`k` word with
//! value `C` whose fiber matrix is unimodular.
//!
//! Odd `k = 2q + 1` splits the `2k` targets into eight cases by the parity and
//! size of the rotation `p ∈ 1..=k` and by the reflection bit. Even `k = 2q`
//! reaches only the parity class `{A^{p+1}, A^p B : p odd}` with four cases.
//! Each builder emits the letters of the case's generator listing block by
//! block; empty blocks at range boundaries emit nothing.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::abelian::GroupContext;
use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};
use crate::fiber::{
    covers_bruteforce, det_exact, elimination_check, fiber_matrix, word_value, Letter, Word,
};
use crate::semidirect::Gamma;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `k` odd: every element of `D_k`.
    Odd,
    /// `k` even: the class `{A^{p+1}, A^p B : p odd}`.
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseId::I => "i",
            CaseId::II => "ii",
            CaseId::III => "iii",
            CaseId::IV => "iv",
            CaseId::V => "v",
            CaseId::VI => "vi",
            CaseId::VII => "vii",
            CaseId::VIII => "viii",
        };
        f.write_str(s)
    }
}

/// A target `A^p B^l` together with the case that handles it. `p` is taken in
/// `1..=k`, so the identity appears as `p = k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WordCase {
    pub family: Family,
    pub case: CaseId,
    pub p: usize,
    pub reflected: bool,
}

/// Picks the unique case covering `target`.
pub fn classify(target: DihedralElement, ctx: &GroupContext) -> Result<WordCase> {
    let k = ctx.k();
    let q = ctx.q();
    let p = if target.rotation() == 0 {
        k
    } else {
        target.rotation()
    };
    let even_p = p % 2 == 0;
    let refl = target.reflected();
    let (family, case) = if ctx.eps() == 1 {
        let case = match (refl, even_p) {
            (false, true) if p > q => CaseId::I,
            (false, true) => CaseId::II,
            (false, false) if p > q => CaseId::III,
            (false, false) => CaseId::IV,
            (true, true) if p > q => CaseId::V,
            (true, true) => CaseId::VI,
            (true, false) if p >= q + 2 => CaseId::VII,
            (true, false) => CaseId::VIII,
        };
        (Family::Odd, case)
    } else {
        if target.parity_class() != 0 {
            return Err(Error::UnsupportedTarget {
                target: target.to_string(),
                k,
            });
        }
        let case = match refl {
            false if p >= q => CaseId::I,
            false => CaseId::II,
            true if p <= q => CaseId::III,
            true => CaseId::IV,
        };
        (Family::Even, case)
    };
    Ok(WordCase {
        family,
        case,
        p,
        reflected: refl,
    })
}

/// Letters of the generator listing for `case`, without validation.
pub fn build_word(case: &WordCase, ctx: &GroupContext) -> Word {
    use Letter::{A, B};
    let q = ctx.q();
    let p = case.p;
    let mut w = Word::default();
    match (case.family, case.case) {
        (Family::Odd, CaseId::I) => {
            // b(1,q+1) [a a b b]^(q-p/2) a(p-q)..a(1) b(q+1,2q+1) a(q+2)..a(p)
            w.push_run(B, 1);
            w.push_str("AABB", q - p / 2);
            w.push_run(A, p - q);
            w.push_run(B, 1);
            w.push_run(A, p - q - 1);
        }
        (Family::Odd, CaseId::II) => {
            // b(1,q+1) a(q)..a(p-1) [a b b a]^(p/2-1) a(2q+1)..a(p+q+1) b(p,p+q)
            w.push_run(B, 1);
            w.push_run(A, q - p + 2);
            w.push_str("ABBA", p / 2 - 1);
            w.push_run(A, q - p + 1);
            w.push_run(B, 1);
        }
        (Family::Odd, CaseId::III) => {
            // a(1)..a(p-q-1) [a a b b]^(q+1-(p+1)/2) a(q+1)..a(p)
            w.push_run(A, p - q - 1);
            w.push_str("AABB", q + 1 - p.div_ceil(2));
            w.push_run(A, p - q);
        }
        (Family::Odd, CaseId::IV) => {
            // b(1,q+1) a(q)..a(p+1) b(p,p+q+1) a(p+q+2)..a(2q+1) [a a b b]^((p-1)/2) a(p)
            w.push_run(B, 1);
            w.push_run(A, q - p);
            w.push_run(B, 1);
            w.push_run(A, q - p);
            w.push_str("AABB", (p - 1) / 2);
            w.push_run(A, 1);
        }
        (Family::Odd, CaseId::V) => {
            // a(1)..a(p-q) [a a b b]^(q-p/2) a(q+1)..a(p) b(p-q,q+1)
            w.push_run(A, p - q);
            w.push_str("AABB", q - p / 2);
            w.push_run(A, p - q);
            w.push_run(B, 1);
        }
        (Family::Odd, CaseId::VI) => {
            // a(1) [a a b b]^(p/2-1) a(p)..a(q+1) b(1,q+2) a(2q+1)..a(p+q+1)
            w.push_run(A, 1);
            w.push_str("AABB", p / 2 - 1);
            w.push_run(A, q - p + 2);
            w.push_run(B, 1);
            w.push_run(A, q - p + 1);
        }
        (Family::Odd, CaseId::VII) => {
            // a(1)..a(p-q-1) b(p-q,p) a(p-1)..a(q+1) [a b b a]^(q-(p-1)/2)
            w.push_run(A, p - q - 1);
            w.push_run(B, 1);
            w.push_run(A, p - q - 1);
            w.push_str("ABBA", q - (p - 1) / 2);
        }
        (Family::Odd, CaseId::VIII) => {
            // b(1,q+1) a(q)..a(p) [a b b a]^((p-1)/2) a(2q+1)..a(p+q+1)
            w.push_run(B, 1);
            w.push_run(A, q + 1 - p);
            w.push_str("ABBA", (p - 1) / 2);
            w.push_run(A, q + 1 - p);
        }
        (Family::Even, CaseId::I) => {
            // a(1)..a(p'-q) [a b b a]^(q-p'/2) a(q+1)..a(p')
            w.push_run(A, p - q);
            w.push_str("ABBA", q - p / 2);
            w.push_run(A, p - q);
        }
        (Family::Even, CaseId::II) => {
            // b(1,q+1) a(q)..a(p'-1) [b b a a]^(p'/2-1) a(2q)..a(p'+q+1) b(p',p'+q)
            w.push_run(B, 1);
            w.push_run(A, q - p + 2);
            w.push_str("BBAA", p / 2 - 1);
            w.push_run(A, q - p);
            w.push_run(B, 1);
        }
        (Family::Even, CaseId::III) => {
            // b(1,q+1) a(q)..a(p) [b b a a]^((p-1)/2) a(2q)..a(p+q+1)
            w.push_run(B, 1);
            w.push_run(A, q - p + 1);
            w.push_str("BBAA", (p - 1) / 2);
            w.push_run(A, q - p);
        }
        (Family::Even, CaseId::IV) => {
            // a(1)..a(p-q) [a a b b]^(q-(p+1)/2) a(q)..a(p) b(p-q+1,p+1)
            w.push_run(A, p - q);
            w.push_str("AABB", q - p.div_ceil(2));
            w.push_run(A, p - q + 1);
            w.push_run(B, 1);
        }
        (Family::Even, _) => unreachable!("even family has four cases"),
    }
    w
}

fn validated(case: &WordCase, target: DihedralElement, gamma: &Gamma) -> Result<Word> {
    let ctx = gamma.ctx();
    let w = build_word(case, ctx);
    let fail = |reason: String| Error::InternalWord {
        target: target.to_string(),
        reason,
    };
    if w.len() != ctx.k() {
        return Err(fail(format!("length {} != k = {}", w.len(), ctx.k())));
    }
    let value = word_value(&w, gamma.dihedral());
    if value != target {
        return Err(fail(format!("{w} has value {value}")));
    }
    let det = det_exact(&fiber_matrix(&w, gamma))?;
    if !det.abs().is_one() {
        return Err(fail(format!("{w} has determinant {det}")));
    }
    Ok(w)
}

/// Covering word for any `target` when `k` is odd.
pub fn word_for_odd_k(gamma: &Gamma, target: DihedralElement) -> Result<Word> {
    let ctx = gamma.ctx();
    if ctx.eps() != 1 {
        return Err(Error::InvalidContext(format!("k = {} is not odd", ctx.k())));
    }
    let case = classify(target, ctx)?;
    validated(&case, target, gamma)
}

/// Covering word for `target ∈ {A^{p+1}, A^p B : p odd}` when `k` is even.
pub fn word_for_even_k(gamma: &Gamma, target: DihedralElement) -> Result<Word> {
    let ctx = gamma.ctx();
    if ctx.eps() != 0 || ctx.k() < 4 {
        return Err(Error::InvalidContext(format!(
            "k = {} is not even and at least 4",
            ctx.k()
        )));
    }
    let case = classify(target, ctx)?;
    validated(&case, target, gamma)
}

pub fn covering_word(gamma: &Gamma, target: DihedralElement) -> Result<Word> {
    if gamma.ctx().eps() == 1 {
        word_for_odd_k(gamma, target)
    } else {
        word_for_even_k(gamma, target)
    }
}

/// The targets the family covers, in canonical index order.
pub fn targets(ctx: &GroupContext) -> Vec<DihedralElement> {
    let k = ctx.k();
    (0..2 * k)
        .map(|i| DihedralElement::from_index(i, k))
        .filter(|e| ctx.eps() == 1 || e.parity_class() == 0)
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct WordCheck {
    pub target: String,
    pub case: String,
    pub word: String,
    pub length_ok: bool,
    pub value_ok: bool,
    pub det: i64,
    pub elimination_ok: bool,
    /// `None` when `n^k` exceeds the enumeration budget.
    pub covered: Option<bool>,
}

impl WordCheck {
    pub fn passed(&self) -> bool {
        self.length_ok
            && self.value_ok
            && self.det.abs() == 1
            && self.elimination_ok
            && self.covered != Some(false)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub n: u32,
    pub k: usize,
    pub family: Family,
    pub passed: usize,
    pub total: usize,
    pub checks: Vec<WordCheck>,
}

impl FamilyReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// Builds the word for every target and checks length, value, determinant,
/// elimination and (within `cover_budget`) brute-force covering over `Z_n`.
/// Failures are recorded in the report, not returned as errors.
pub fn verify_word_family(gamma: &Gamma, cover_budget: u64) -> FamilyReport {
    let ctx = gamma.ctx();
    let mut checks = Vec::new();
    for target in targets(ctx) {
        let case = classify(target, ctx).expect("targets() only yields covered elements");
        let w = build_word(&case, ctx);
        let length_ok = w.len() == ctx.k();
        let value_ok = word_value(&w, gamma.dihedral()) == target;
        let m = fiber_matrix(&w, gamma);
        let det = if m.is_square() {
            det_exact(&m)
                .ok()
                .and_then(|d| d.to_i64())
                .unwrap_or(i64::MAX)
        } else {
            0
        };
        let elimination_ok = elimination_check(&m);
        let covered = if length_ok {
            covers_bruteforce(&w, gamma, cover_budget).ok()
        } else {
            Some(false)
        };
        checks.push(WordCheck {
            target: target.to_string(),
            case: case.case.to_string(),
            word: w.to_string(),
            length_ok,
            value_ok,
            det,
            elimination_ok,
            covered,
        });
    }
    let passed = checks.iter().filter(|c| c.passed()).count();
    FamilyReport {
        n: ctx.n(),
        k: ctx.k(),
        family: if ctx.eps() == 1 {
            Family::Odd
        } else {
            Family::Even
        },
        passed,
        total: checks.len(),
        checks,
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.k.max(4);
        writeln!(
            f,
            "{:<8} {:<5} {:<width$} {:>5} {:>4} {:>5} {:>6}  status",
            "target", "case", "word", "value", "det", "elim", "cover"
        )?;
        for c in &self.checks {
            let cover = match c.covered {
                Some(true) => "yes",
                Some(false) => "no",
                None => "skip",
            };
            writeln!(
                f,
                "{:<8} {:<5} {:<width$} {:>5} {:>4} {:>5} {:>6}  {}",
                c.target,
                c.case,
                c.word,
                if c.value_ok { "ok" } else { "BAD" },
                c.det,
                if c.elimination_ok { "ok" } else { "BAD" },
                cover,
                if c.passed() { "pass" } else { "FAIL" }
            )?;
        }
        write!(f, "{}/{} pass", self.passed, self.total)
    }
}
