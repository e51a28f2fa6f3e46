//! The symmetric group `S_n` and the hyperoctahedral group `C_n`.
//!
//! Permutations are stored in one-line notation with values `1..=n`. A signed
//! permutation stores its window `(σ_1, …, σ_n)`; exactly one of `±i` occurs
//! for every `i`. Positions are 1-based in every statistic, matching the
//! usual combinatorial conventions (`Des ⊆ {1, …, n−1}` in type A and
//! `Des ⊆ {0, …, n−1}` in type C, with `σ_0 = 0`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::notation::{format_list, parse_list};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<i64>);

impl Permutation {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v < 1 || v as usize > n {
                return Err(Error::invalid(
                    "permutation",
                    format!("value {v} outside 1..={n}"),
                ));
            }
            if std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::invalid("permutation", format!("value {v} repeated")));
            }
        }
        Ok(Permutation(values))
    }

    pub(crate) fn new_unchecked(values: Vec<i64>) -> Self {
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as i64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// Number of pairs `i < j` with `π_i > π_j`.
    pub fn inv(&self) -> u64 {
        let v = &self.0;
        let mut count = 0;
        for j in 0..v.len() {
            for i in 0..j {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i ∈ [n−1]` with `π_i > π_{i+1}`. Position 0 is never a
    /// type-A descent.
    pub fn des_set(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0] > pair[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Type-A quadratic statistic `−inv(π) + Σ_{i ∈ Des(π)} ((i+1) + ⋯ + n)`.
    pub fn lhp(&self) -> u64 {
        let n = self.len() as i64;
        let tail: i64 = self
            .des_set()
            .into_iter()
            .map(|i| {
                let i = i as i64;
                (n * (n + 1) - i * (i + 1)) / 2
            })
            .sum();
        let value = tail - self.inv() as i64;
        u64::try_from(value).expect("lhp is nonnegative on S_n")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.0))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_list(s)?)
    }
}

/// The three ingredients of the type-C inversion number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TypeCInversions {
    /// Pairs `j < i` with `σ_j > σ_i`.
    pub inv: u64,
    /// Negative entries.
    pub neg: u64,
    /// Pairs `j < i` with `σ_j + σ_i < 0`.
    pub nsp: u64,
}

impl TypeCInversions {
    pub fn total(&self) -> u64 {
        self.inv + self.neg + self.nsp
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<i64>);

impl SignedPermutation {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            let m = v.unsigned_abs() as usize;
            if v == 0 || m > n {
                return Err(Error::invalid(
                    "signed permutation",
                    format!("entry {v} outside ±1..=±{n}"),
                ));
            }
            if std::mem::replace(&mut seen[m - 1], true) {
                return Err(Error::invalid(
                    "signed permutation",
                    format!("magnitude {m} repeated"),
                ));
            }
        }
        Ok(SignedPermutation(values))
    }

    pub(crate) fn new_unchecked(values: Vec<i64>) -> Self {
        SignedPermutation(values)
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// The unsigned permutation `|σ|`.
    pub fn magnitudes(&self) -> Permutation {
        Permutation::new_unchecked(self.0.iter().map(|v| v.abs()).collect())
    }

    pub fn neg(&self) -> u64 {
        self.0.iter().filter(|&&v| v < 0).count() as u64
    }

    pub fn inversions(&self) -> TypeCInversions {
        let v = &self.0;
        let mut out = TypeCInversions {
            neg: self.neg(),
            ..Default::default()
        };
        for i in 0..v.len() {
            for j in 0..i {
                if v[j] > v[i] {
                    out.inv += 1;
                }
                if v[j] + v[i] < 0 {
                    out.nsp += 1;
                }
            }
        }
        out
    }

    /// `inv_C(σ) = inv(σ) + neg(σ) + nsp(σ)`, the Coxeter length in `C_n`.
    pub fn inv_c(&self) -> u64 {
        self.inversions().total()
    }

    /// Descents with the convention `σ_0 = 0`: position 0 is a descent iff
    /// `σ_1 < 0`.
    pub fn des_set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut prev = 0;
        for (i, &v) in self.0.iter().enumerate() {
            if prev > v {
                out.push(i);
            }
            prev = v;
        }
        out
    }

    pub fn comaj(&self) -> u64 {
        let n = self.len() as u64;
        self.des_set().into_iter().map(|i| n - i as u64).sum()
    }

    /// `lhp_C(σ) = −inv_C(σ) + Σ_{i ∈ Des(σ)} (2(i+1) + ⋯ + 2n)`.
    pub fn lhp_c(&self) -> u64 {
        let n = self.len() as i64;
        let tail: i64 = self
            .des_set()
            .into_iter()
            .map(|i| {
                let i = i as i64;
                n * (n + 1) - i * (i + 1)
            })
            .sum();
        let value = tail - self.inv_c() as i64;
        u64::try_from(value).expect("lhp_C is nonnegative on C_n")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.0))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::new(parse_list(s)?)
    }
}

/// All of `S_n` in lexicographic order of the value sequence.
pub fn enumerate_sn(n: usize, limits: &Limits) -> Result<Permutations> {
    limits.check_rank(n)?;
    Ok(Permutations {
        current: Some((1..=n as i64).collect()),
    })
}

/// All of `C_n`, ordered lexicographically by entries where each entry is
/// compared by magnitude first and `m` precedes `−m` (so `[1] < [-1]`).
pub fn enumerate_cn(n: usize, limits: &Limits) -> Result<SignedPermutations> {
    limits.check_rank(n)?;
    Ok(SignedPermutations {
        current: Some((1..=n as i64).collect()),
    })
}

#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<i64>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(Permutation::new_unchecked(out))
    }
}

fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(pivot) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let swap = (pivot + 1..v.len()).rev().find(|&j| v[j] > v[pivot]).unwrap();
    v.swap(pivot, swap);
    v[pivot + 1..].reverse();
    true
}

#[derive(Debug, Clone)]
pub struct SignedPermutations {
    current: Option<Vec<i64>>,
}

impl Iterator for SignedPermutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if next_signed_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(SignedPermutation::new_unchecked(out))
    }
}

fn signed_key(x: i64) -> (u64, bool) {
    (x.unsigned_abs(), x < 0)
}

/// Successor among signed permutations of the same rank, in the order of
/// [`enumerate_cn`].
fn next_signed_permutation(v: &mut [i64]) -> bool {
    let n = v.len();
    for i in (0..n).rev() {
        let mut free = vec![true; n + 1];
        for &x in &v[..i] {
            free[x.unsigned_abs() as usize] = false;
        }
        let candidate = (1..=n as i64)
            .flat_map(|m| [m, -m])
            .filter(|&x| signed_key(x) > signed_key(v[i]) && free[x.unsigned_abs() as usize])
            .min_by_key(|&x| signed_key(x));
        if let Some(c) = candidate {
            v[i] = c;
            free[c.unsigned_abs() as usize] = false;
            let mut rest = (1..=n).filter(|&m| free[m]).map(|m| m as i64);
            for slot in v[i + 1..].iter_mut() {
                *slot = rest.next().unwrap();
            }
            return true;
        }
    }
    false
}
