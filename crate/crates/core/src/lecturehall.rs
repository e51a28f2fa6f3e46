//! `s`-lecture hall partitions `0 ≤ λ_1/s_1 ≤ ⋯ ≤ λ_n/s_n` and their
//! ceiling/excess decomposition.
//!
//! Parts are stored lowest index first. `L_n` is the case `s = (1, 2, …, n)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::invseq::{enumerate_invseq, InversionSequence, SSequence};
use crate::limits::Limits;
use crate::notation::{ceil_div, format_list};

/// Checks the cross-multiplied ratio chain for `parts` against `s`.
pub fn is_lhp(parts: &[i64], s: &SSequence) -> Result<bool> {
    if parts.len() != s.len() {
        return Err(Error::LengthMismatch {
            expected: s.len(),
            found: parts.len(),
        });
    }
    let s = s.values();
    if parts.first().is_some_and(|&p| p < 0) {
        return Ok(false);
    }
    Ok((1..parts.len()).all(|i| parts[i - 1] * s[i] <= parts[i] * s[i - 1]))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LectureHallPartition {
    parts: Vec<i64>,
    s: SSequence,
}

impl LectureHallPartition {
    pub fn new(parts: Vec<i64>, s: SSequence) -> Result<Self> {
        if !is_lhp(&parts, &s)? {
            return Err(Error::invalid(
                "lecture hall partition",
                format!("{} violates the ratio chain for s = {s}", format_list(&parts)),
            ));
        }
        Ok(LectureHallPartition { parts, s })
    }

    /// A member of `L_n`, i.e. `s = (1, …, n)`.
    pub fn standard(parts: Vec<i64>) -> Result<Self> {
        let s = SSequence::type_a(parts.len());
        Self::new(parts, s)
    }

    pub fn zeros(s: SSequence) -> Self {
        LectureHallPartition {
            parts: vec![0; s.len()],
            s,
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn context(&self) -> &SSequence {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Reinterprets the same parts against another `s`, failing if they do
    /// not form an `s`-lecture hall partition there.
    pub fn with_context(&self, s: SSequence) -> Result<Self> {
        Self::new(self.parts.clone(), s)
    }

    /// `⌈λ⌉^(s) = (⌈λ_1/s_1⌉, …, ⌈λ_n/s_n⌉)`.
    pub fn ceiling(&self) -> Vec<i64> {
        self.parts
            .iter()
            .zip(self.s.values())
            .map(|(&p, &s)| ceil_div(p, s))
            .collect()
    }

    /// `e^(s)(λ)_i = s_i ⌈λ_i/s_i⌉ − λ_i`.
    pub fn excess(&self) -> InversionSequence {
        let e = self
            .parts
            .iter()
            .zip(self.s.values())
            .map(|(&p, &s)| s * ceil_div(p, s) - p)
            .collect();
        InversionSequence::new(e, self.s.clone()).expect("excess lies in 0..s_i")
    }

    pub fn to_pair(&self) -> CeilingExcessPair {
        CeilingExcessPair {
            ceiling: self.ceiling(),
            excess: self.excess(),
        }
    }

    /// `(|λ|_o, |λ|_e)`: `|λ|_o = λ_n + λ_{n−2} + ⋯`, `|λ|_e = λ_{n−1} + λ_{n−3} + ⋯`.
    pub fn odd_even_weights(&self) -> (i64, i64) {
        odd_even_split(&self.parts)
    }

    /// Membership in `L_{n,k}`: the first `n − k` parts vanish and, for
    /// `k > 0`, part `n − k + 1` is positive.
    pub fn is_truncated(&self, k: usize) -> bool {
        let n = self.parts.len();
        if k > n {
            return false;
        }
        let zeros = n - k;
        self.parts[..zeros].iter().all(|&p| p == 0) && (k == 0 || self.parts[zeros] > 0)
    }

    /// Number of odd entries of a vector, `o(·)`.
    pub fn odd_entries(values: &[i64]) -> usize {
        values.iter().filter(|&&v| v.rem_euclid(2) == 1).count()
    }
}

/// Splits a sequence into the sums over positions `n, n−2, …` and
/// `n−1, n−3, …`.
pub(crate) fn odd_even_split(values: &[i64]) -> (i64, i64) {
    values
        .iter()
        .rev()
        .enumerate()
        .fold((0, 0), |(odd, even), (k, &v)| {
            if k % 2 == 0 {
                (odd + v, even)
            } else {
                (odd, even + v)
            }
        })
}

impl fmt::Display for LectureHallPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.parts))
    }
}

/// An element `(b, e)` of `T_n^(s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CeilingExcessPair {
    ceiling: Vec<i64>,
    excess: InversionSequence,
}

impl CeilingExcessPair {
    /// Validates `b_i ≤ b_{i+1}` and `i ∈ Asc(e) ⇒ b_i < b_{i+1}` with `b_0 = 0`.
    pub fn new(ceiling: Vec<i64>, excess: InversionSequence) -> Result<Self> {
        if ceiling.len() != excess.len() {
            return Err(Error::LengthMismatch {
                expected: excess.len(),
                found: ceiling.len(),
            });
        }
        let asc = excess.asc_set();
        let mut prev = 0;
        for (i, &b) in ceiling.iter().enumerate() {
            let strict = asc.contains(&i);
            if b < prev || (strict && b == prev) {
                return Err(Error::invalid(
                    "ceiling/excess pair",
                    format!(
                        "condition fails at position {i}: b_{i} = {prev}, b_{} = {b}{}",
                        i + 1,
                        if strict { ", and it is an ascent of e" } else { "" }
                    ),
                ));
            }
            prev = b;
        }
        Ok(CeilingExcessPair { ceiling, excess })
    }

    pub fn ceiling(&self) -> &[i64] {
        &self.ceiling
    }

    pub fn excess(&self) -> &InversionSequence {
        &self.excess
    }

    /// `λ_i = s_i b_i − e_i`.
    pub fn to_partition(&self) -> LectureHallPartition {
        let s = self.excess.context();
        let parts = self
            .ceiling
            .iter()
            .zip(s.values())
            .zip(self.excess.entries())
            .map(|((&b, &s), &e)| s * b - e)
            .collect();
        LectureHallPartition {
            parts,
            s: s.clone(),
        }
    }
}

pub fn pair_to_lhp(b: &[i64], e: &InversionSequence) -> Result<LectureHallPartition> {
    Ok(CeilingExcessPair::new(b.to_vec(), e.clone())?.to_partition())
}

pub fn lhp_to_pair(lambda: &LectureHallPartition) -> CeilingExcessPair {
    lambda.to_pair()
}

/// Visits every `λ ∈ L_n^(s)` with `|λ| ≤ max_weight`, choosing `λ_n` first
/// and then each lower part up to its ratio bound. Order: `λ_n` ascending,
/// then `λ_{n−1}` ascending, and so on.
pub fn for_each_by_weight(
    s: &SSequence,
    max_weight: i64,
    limits: &Limits,
    mut visit: impl FnMut(&[i64]),
) -> Result<usize> {
    limits.check_rank(s.len())?;
    let mut walker = Walker {
        s: s.values(),
        budget: Some(max_weight),
        parts: vec![0; s.len()],
        count: 0,
        limits,
    };
    if s.is_empty() {
        visit(&[]);
        return Ok(1);
    }
    walker.top(max_weight, &mut visit)?;
    Ok(walker.count)
}

/// Visits every `λ ∈ L_n` with `λ_n ≤ max_last`.
pub fn for_each_by_last_part(
    n: usize,
    max_last: i64,
    limits: &Limits,
    mut visit: impl FnMut(&[i64]),
) -> Result<usize> {
    limits.check_rank(n)?;
    let s = SSequence::type_a(n);
    let mut walker = Walker {
        s: s.values(),
        budget: None,
        parts: vec![0; n],
        count: 0,
        limits,
    };
    if n == 0 {
        visit(&[]);
        return Ok(1);
    }
    walker.top(max_last, &mut visit)?;
    Ok(walker.count)
}

pub fn enumerate_by_weight(
    s: &SSequence,
    max_weight: i64,
    limits: &Limits,
) -> Result<Vec<LectureHallPartition>> {
    let mut out = Vec::new();
    for_each_by_weight(s, max_weight, limits, |parts| {
        out.push(LectureHallPartition {
            parts: parts.to_vec(),
            s: s.clone(),
        })
    })?;
    Ok(out)
}

pub fn enumerate_by_last_part(
    n: usize,
    max_last: i64,
    limits: &Limits,
) -> Result<Vec<LectureHallPartition>> {
    let s = SSequence::type_a(n);
    let mut out = Vec::new();
    for_each_by_last_part(n, max_last, limits, |parts| {
        out.push(LectureHallPartition {
            parts: parts.to_vec(),
            s: s.clone(),
        })
    })?;
    Ok(out)
}

struct Walker<'a> {
    s: &'a [i64],
    budget: Option<i64>,
    parts: Vec<i64>,
    count: usize,
    limits: &'a Limits,
}

impl Walker<'_> {
    fn top(&mut self, max_last: i64, visit: &mut impl FnMut(&[i64])) -> Result<()> {
        let last = self.parts.len() - 1;
        for v in 0..=max_last.max(-1) {
            self.parts[last] = v;
            self.descend(last, v, visit)?;
        }
        Ok(())
    }

    /// `parts[idx..]` is fixed and sums to `used`.
    fn descend(&mut self, idx: usize, used: i64, visit: &mut impl FnMut(&[i64])) -> Result<()> {
        if idx == 0 {
            self.count += 1;
            self.limits.check_items(self.count)?;
            visit(&self.parts);
            return Ok(());
        }
        let next = idx - 1;
        let mut hi = self.parts[idx] * self.s[next] / self.s[idx];
        if let Some(budget) = self.budget {
            hi = hi.min(budget - used);
        }
        for v in 0..=hi {
            self.parts[next] = v;
            self.descend(next, used + v, visit)?;
        }
        self.parts[next] = 0;
        Ok(())
    }
}

/// Every `(b, e) ∈ T_n^(s)` with `Σ (s_i b_i − e_i) ≤ max_weight`, built
/// directly from the pair conditions rather than from partitions.
pub fn enumerate_pairs(
    s: &SSequence,
    max_weight: i64,
    limits: &Limits,
) -> Result<Vec<CeilingExcessPair>> {
    let mut out = Vec::new();
    let sv = s.values();
    let n = sv.len();
    for e in enumerate_invseq(s, limits)? {
        let asc = e.asc_set();
        let mut strict = vec![false; n];
        for i in asc {
            strict[i] = true;
        }
        let mut b = vec![0i64; n];
        pair_rec(sv, &e, &strict, 0, 0, 0, max_weight, &mut b, &mut |b| {
            out.push(CeilingExcessPair {
                ceiling: b.to_vec(),
                excess: e.clone(),
            });
        });
        limits.check_items(out.len())?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn pair_rec(
    s: &[i64],
    e: &InversionSequence,
    strict: &[bool],
    idx: usize,
    prev: i64,
    used: i64,
    max_weight: i64,
    b: &mut [i64],
    emit: &mut impl FnMut(&[i64]),
) {
    let n = s.len();
    if idx == n {
        emit(b);
        return;
    }
    let ev = e.entries();
    let start = prev + strict[idx] as i64;
    let mut bi = start;
    loop {
        let part = s[idx] * bi - ev[idx];
        // Later parts satisfy λ_j ≥ s_j·b_i − e_j > s_j·(b_i − 1).
        let later: i64 = (idx + 1..n).map(|j| (s[j] * (bi - 1) + 1).max(0)).sum();
        if used + part + later > max_weight {
            break;
        }
        b[idx] = bi;
        pair_rec(s, e, strict, idx + 1, bi, used + part, max_weight, b, emit);
        bi += 1;
    }
}
