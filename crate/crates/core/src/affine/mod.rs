//! The affine hyperoctahedral group `C̃_n` in window notation.
//!
//! An element is a bijection `w: Z → Z` with `w(i + N) = w(i) + N` and
//! `w(−i) = −w(i)`, where `N = 2n + 2`; it is determined by its window
//! `[w_1, …, w_n]`. Minimal length representatives of `C̃_n / C_n` are the
//! windows whose entries are positive and strictly increasing.

mod oracle;

pub use oracle::{length_oracle, LengthOracle, LengthReport, OracleConfig};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invseq::{psi, psi_inverse, SSequence};
use crate::lecturehall::{odd_even_split, LectureHallPartition};
use crate::limits::Limits;
use crate::notation::{ceil_div, format_list, parse_list};
use crate::perms::{enumerate_cn, SignedPermutation};

/// A general element of `C̃_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    window: Vec<i64>,
}

impl AffineElement {
    /// Accepts a window whose `2n` values `±w_i` are distinct modulo `N` and
    /// avoid the residues `0` and `n + 1`.
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        let modulus = 2 * n as i64 + 2;
        let mut seen = vec![false; modulus as usize];
        for &w in &window {
            for r in [w.rem_euclid(modulus), (-w).rem_euclid(modulus)] {
                if r == 0 || r == n as i64 + 1 {
                    return Err(Error::invalid(
                        "affine window",
                        format!("entry {w} is fixed-class residue {r} modulo {modulus}"),
                    ));
                }
                if std::mem::replace(&mut seen[r as usize], true) {
                    return Err(Error::invalid(
                        "affine window",
                        format!("residues of ±{w} collide modulo {modulus}"),
                    ));
                }
            }
        }
        Ok(AffineElement { window })
    }

    pub fn identity(n: usize) -> Self {
        AffineElement {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    /// `N = 2n + 2`.
    pub fn modulus(&self) -> i64 {
        2 * self.rank() as i64 + 2
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Right multiplication by the generator `s_i`, `0 ≤ i ≤ n`.
    pub fn apply_generator(&self, i: usize) -> Result<Self> {
        let mut window = self.window.clone();
        apply_generator_in_place(&mut window, i)?;
        Ok(AffineElement { window })
    }

    /// The minimal representative of the left coset `w C_n`: the absolute
    /// values of the window, sorted increasingly.
    pub fn coset_normal_form(&self) -> CosetRep {
        CosetRep(AffineElement {
            window: coset_normal_window(&self.window),
        })
    }
}

pub(crate) fn coset_normal_window(window: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = window.iter().map(|w| w.abs()).collect();
    out.sort_unstable();
    out
}

/// In-place generator action on a raw window.
///
/// `s_0` negates `w_1`; `s_i` for `1 ≤ i < n` swaps `w_i` and `w_{i+1}`;
/// `s_n` replaces `w_n` by `N − w_n`.
pub(crate) fn apply_generator_in_place(window: &mut [i64], i: usize) -> Result<()> {
    let n = window.len();
    if i > n || n == 0 {
        return Err(Error::GeneratorOutOfRange { index: i, rank: n });
    }
    let modulus = 2 * n as i64 + 2;
    if i == n {
        window[n - 1] = modulus - window[n - 1];
    } else if i == 0 {
        window[0] = -window[0];
    } else {
        window.swap(i - 1, i);
    }
    Ok(())
}

pub fn gen_apply(g: &AffineElement, i: usize) -> Result<AffineElement> {
    g.apply_generator(i)
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.window))
    }
}

impl FromStr for AffineElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AffineElement::new(parse_list(s)?)
    }
}

/// A minimal length representative of `C̃_n / C_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetRep(AffineElement);

impl CosetRep {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let element = AffineElement::new(window)?;
        Self::from_element(element)
    }

    pub fn from_element(element: AffineElement) -> Result<Self> {
        let w = &element.window;
        if w.first().is_some_and(|&x| x <= 0) {
            return Err(Error::invalid("coset representative", "entries must be positive"));
        }
        if let Some(i) = (1..w.len()).find(|&i| w[i - 1] >= w[i]) {
            return Err(Error::invalid(
                "coset representative",
                format!("window is not increasing at position {}", i + 1),
            ));
        }
        Ok(CosetRep(element))
    }

    pub fn identity(n: usize) -> Self {
        CosetRep(AffineElement::identity(n))
    }

    pub fn element(&self) -> &AffineElement {
        &self.0
    }

    pub fn window(&self) -> &[i64] {
        &self.0.window
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn modulus(&self) -> i64 {
        self.0.modulus()
    }

    /// Writes `w_i = c_i N + σ_i` with `σ_i ∈ {−n, …, −1, 1, …, n}`.
    pub fn decompose(&self) -> (Vec<i64>, SignedPermutation) {
        let n = self.rank() as i64;
        let modulus = self.modulus();
        let mut c = Vec::with_capacity(self.rank());
        let mut sigma = Vec::with_capacity(self.rank());
        for &w in self.window() {
            let r = w.rem_euclid(modulus);
            let s = if r <= n { r } else { r - modulus };
            c.push((w - s) / modulus);
            sigma.push(s);
        }
        (c, SignedPermutation::new_unchecked(sigma))
    }

    /// Class inversions `I_{i,j} = ⌊(w_i − w_j)/N⌋ + ⌊(w_i + w_j)/N⌋` for
    /// `j ≤ i`, evaluated directly from the window.
    pub fn class_inv(&self) -> ClassInversions {
        let w = self.window();
        let modulus = self.modulus();
        let pairs: Vec<Vec<i64>> = (0..w.len())
            .map(|i| {
                (0..=i)
                    .map(|j| (w[i] - w[j]).div_euclid(modulus) + (w[i] + w[j]).div_euclid(modulus))
                    .collect()
            })
            .collect();
        let entries = pairs.iter().map(|row| row.iter().sum()).collect();
        ClassInversions { entries, pairs }
    }

    /// `λ_i = 2i c_i − e_i` with `e = Ψ(σ)`.
    pub fn to_lhp(&self) -> LectureHallPartition {
        let (c, sigma) = self.decompose();
        let e = psi(&sigma);
        let parts = c
            .iter()
            .zip(e.entries())
            .enumerate()
            .map(|(idx, (&ci, &ei))| 2 * (idx as i64 + 1) * ci - ei)
            .collect();
        LectureHallPartition::standard(parts).expect("the image of a coset representative lies in L_n")
    }

    pub fn stats(&self) -> WindowStats {
        let (c, sigma) = self.decompose();
        let inv = self.class_inv();
        let (odd_inv, even_inv) = odd_even_split(&inv.entries);
        let neg = sigma.neg() as i64;
        let beta: i64 = c.iter().sum();
        let n = self.rank() as i64;
        let max = self
            .window()
            .last()
            .map_or(0, |&wn| wn - wn.div_euclid(n + 1) - n);
        WindowStats {
            inv_tilde: inv.inv_tilde(),
            neg,
            alpha: beta - neg,
            beta,
            last: c.last().copied().unwrap_or(0),
            max,
            odd_inv,
            even_inv,
        }
    }

    /// Membership in `T_{n,k}`: exactly `k` window entries exceed `n`.
    pub fn in_tnk(&self, k: usize) -> bool {
        let n = self.rank() as i64;
        self.window().iter().filter(|&&w| w > n).count() == k
    }

    /// Membership in `S_{n,t}`: `w_n ≤ (2t + 1)(n + 1)`.
    pub fn in_snt(&self, t: u32) -> bool {
        let bound = (2 * t as i64 + 1) * (self.rank() as i64 + 1);
        self.window().last().is_none_or(|&wn| wn <= bound)
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CosetRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CosetRep::new(parse_list(s)?)
    }
}

/// Builds `[c_1 N + σ_1, …, c_n N + σ_n]` from a pair in `U_n`.
pub fn compose(c: &[i64], sigma: &SignedPermutation) -> Result<CosetRep> {
    let n = sigma.len();
    if c.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: c.len(),
        });
    }
    let des = sigma.des_set();
    let mut prev = 0;
    for (i, &ci) in c.iter().enumerate() {
        let strict = des.contains(&i);
        if ci < prev || (strict && ci == prev) {
            return Err(Error::invalid(
                "U_n pair",
                format!(
                    "condition fails at index {i}: c_{i} = {prev}, c_{} = {ci}{}",
                    i + 1,
                    if strict { ", and it is a descent of σ" } else { "" }
                ),
            ));
        }
        prev = ci;
    }
    let modulus = 2 * n as i64 + 2;
    let window = c
        .iter()
        .zip(sigma.values())
        .map(|(&ci, &s)| ci * modulus + s)
        .collect();
    Ok(CosetRep(AffineElement { window }))
}

/// Inverse of [`CosetRep::to_lhp`]: decompose `λ` against `(2, 4, …, 2n)`,
/// recover `σ = Ψ⁻¹(e)` and compose.
pub fn from_lhp(lambda: &LectureHallPartition) -> Result<CosetRep> {
    let n = lambda.len();
    let doubled = lambda.with_context(SSequence::type_c(n))?;
    let pair = doubled.to_pair();
    let sigma = psi_inverse(pair.excess())?;
    compose(pair.ceiling(), &sigma)
}

/// `I(w)` together with the triangular table `I_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInversions {
    entries: Vec<i64>,
    pairs: Vec<Vec<i64>>,
}

impl ClassInversions {
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Row `i` holds `I_{i,1}, …, I_{i,i}` (0-based).
    pub fn pairs(&self) -> &[Vec<i64>] {
        &self.pairs
    }

    /// `inv_C̃(w) = Σ I_i`, the Coxeter length.
    pub fn inv_tilde(&self) -> i64 {
        self.entries.iter().sum()
    }
}

/// Window statistics. Serialized with every integer as a decimal string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WindowStats {
    #[serde(with = "decimal")]
    pub inv_tilde: i64,
    #[serde(with = "decimal")]
    pub neg: i64,
    #[serde(with = "decimal")]
    pub alpha: i64,
    #[serde(with = "decimal")]
    pub beta: i64,
    #[serde(with = "decimal")]
    pub last: i64,
    #[serde(with = "decimal")]
    pub max: i64,
    #[serde(with = "decimal")]
    pub odd_inv: i64,
    #[serde(with = "decimal")]
    pub even_inv: i64,
}

impl WindowStats {
    /// The same statistics read off the corresponding partition through
    /// ceiling vectors alone.
    pub fn from_partition(lambda: &LectureHallPartition) -> Result<Self> {
        let n = lambda.len();
        let single = lambda.with_context(SSequence::type_a(n))?.ceiling();
        let doubled = lambda.with_context(SSequence::type_c(n))?.ceiling();
        let single_sum: i64 = single.iter().sum();
        let doubled_sum: i64 = doubled.iter().sum();
        let (odd_inv, even_inv) = lambda.odd_even_weights();
        let parts = lambda.parts();
        Ok(WindowStats {
            inv_tilde: lambda.weight(),
            neg: 2 * doubled_sum - single_sum,
            alpha: single_sum - doubled_sum,
            beta: doubled_sum,
            last: parts.last().map_or(0, |&p| ceil_div(p, 2 * n as i64)),
            max: parts.last().copied().unwrap_or(0),
            odd_inv,
            even_inv,
        })
    }
}

mod decimal {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &i64, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<i64, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// Smallest `max_wn` such that every coset representative of Coxeter length
/// at most `max_weight` has `w_n ≤ max_wn`.
///
/// From `λ_n = 2n c_n − e_n ≥ 2n c_n − (2n − 1)` and `|λ| ≥ λ_n`, a window of
/// length `≤ max_weight` has `c_n ≤ ⌊(max_weight + 2n − 1) / 2n⌋`.
pub fn max_window_for_weight(n: usize, max_weight: i64) -> i64 {
    if n == 0 {
        return 0;
    }
    let n = n as i64;
    let c_max = (max_weight + 2 * n - 1).div_euclid(2 * n);
    c_max * (2 * n + 2) + n
}

/// Every coset representative of rank `n` with `w_n ≤ max_wn`, sorted
/// lexicographically by window.
///
/// Built from `U_n`: for each `σ ∈ C_n` the admissible `c` vectors are
/// generated with the descent constraints, bounded by `c_i N + σ_i ≤ max_wn`.
pub fn enumerate_reps(n: usize, max_wn: i64, limits: &Limits) -> Result<Vec<CosetRep>> {
    limits.check_rank(n)?;
    let modulus = 2 * n as i64 + 2;
    let mut out = Vec::new();
    for sigma in enumerate_cn(n, limits)? {
        let mut strict = vec![false; n];
        for d in sigma.des_set() {
            strict[d] = true;
        }
        let mut c = vec![0i64; n];
        let values = sigma.values();
        extend_c(values, &strict, modulus, max_wn, 0, 0, &mut c, &mut |c| {
            let window = c
                .iter()
                .zip(values)
                .map(|(&ci, &s)| ci * modulus + s)
                .collect();
            out.push(CosetRep(AffineElement { window }));
        });
        limits.check_items(out.len())?;
    }
    out.sort_unstable();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend_c(
    sigma: &[i64],
    strict: &[bool],
    modulus: i64,
    max_wn: i64,
    idx: usize,
    prev: i64,
    c: &mut [i64],
    emit: &mut impl FnMut(&[i64]),
) {
    if idx == sigma.len() {
        emit(c);
        return;
    }
    let mut ci = prev + strict[idx] as i64;
    // Later entries are larger, so every entry is bounded by max_wn.
    while ci * modulus + sigma[idx] <= max_wn {
        c[idx] = ci;
        extend_c(sigma, strict, modulus, max_wn, idx + 1, ci, c, emit);
        ci += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lecturehall::enumerate_by_weight;
    use std::collections::BTreeSet;

    fn rep(w: &[i64]) -> CosetRep {
        CosetRep::new(w.to_vec()).unwrap()
    }

    fn sp(v: &[i64]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn window_validation() {
        assert!(AffineElement::new(vec![9, 11, 14, 19, 20]).is_ok());
        assert!(AffineElement::new(vec![-4, 7]).is_ok());
        // 6 ≡ 0 mod 6 and 3 = n + 1 for n = 2
        assert!(AffineElement::new(vec![1, 6]).is_err());
        assert!(AffineElement::new(vec![1, 3]).is_err());
        // 1 and 5 ≡ −1 collide mod 6
        assert!(AffineElement::new(vec![1, 5]).is_err());
        assert!(CosetRep::new(vec![2, 1]).is_err());
        assert!(CosetRep::new(vec![-1, 2]).is_err());
        assert!(CosetRep::new(vec![]).is_ok());
    }

    #[test]
    fn decompose_and_compose() {
        let w = rep(&[9, 11, 14, 19, 20]);
        let (c, sigma) = w.decompose();
        assert_eq!(c, vec![1, 1, 1, 2, 2]);
        assert_eq!(sigma, sp(&[-3, -1, 2, -5, -4]));
        assert_eq!(compose(&c, &sigma).unwrap(), w);

        let (c, sigma) = CosetRep::identity(4).decompose();
        assert_eq!(c, vec![0; 4]);
        assert_eq!(sigma, SignedPermutation::identity(4));
        assert_eq!(compose(&c, &sigma).unwrap(), CosetRep::identity(4));

        let (c, sigma) = rep(&[3]).decompose();
        assert_eq!((c, sigma), (vec![1], sp(&[-1])));

        // A descent at position 0 needs c_1 > 0.
        assert!(compose(&[0, 1], &sp(&[-1, 2])).is_err());
        // A descent at position 1 needs c_1 < c_2.
        assert!(compose(&[1, 1], &sp(&[2, 1])).is_err());
        assert!(compose(&[1], &sp(&[2, 1])).is_err());
    }

    #[test]
    fn class_inversions_of_the_worked_example() {
        let w = rep(&[9, 11, 14, 19, 20]);
        let inv = w.class_inv();
        assert_eq!(inv.entries(), &[1, 2, 5, 9, 12]);
        assert_eq!(inv.inv_tilde(), 29);
        assert_eq!(inv.pairs().len(), 5);
        assert_eq!(inv.pairs()[4].len(), 5);
        assert!(CosetRep::identity(3).class_inv().entries().iter().all(|&x| x == 0));
        assert_eq!(rep(&[3]).class_inv().entries(), &[1]);
    }

    #[test]
    fn lhp_round_trip_examples() {
        let w = rep(&[9, 11, 14, 19, 20]);
        let l = w.to_lhp();
        assert_eq!(l.parts(), &[1, 2, 5, 9, 12]);
        assert_eq!(from_lhp(&l).unwrap(), w);

        let id = CosetRep::identity(5);
        assert_eq!(id.to_lhp().parts(), &[0; 5]);
        assert_eq!(from_lhp(&LectureHallPartition::standard(vec![0; 5]).unwrap()).unwrap(), id);

        assert_eq!(rep(&[3]).to_lhp().parts(), &[1]);
        assert_eq!(from_lhp(&LectureHallPartition::standard(vec![1]).unwrap()).unwrap(), rep(&[3]));
    }

    #[test]
    fn window_statistics() {
        let s = rep(&[9, 11, 14, 19, 20]).stats();
        assert_eq!(
            s,
            WindowStats {
                inv_tilde: 29,
                neg: 4,
                alpha: 3,
                beta: 7,
                last: 2,
                max: 12,
                odd_inv: 18,
                even_inv: 11
            }
        );
        let id = CosetRep::identity(4).stats();
        assert_eq!(id, WindowStats::from_partition(&LectureHallPartition::zeros(SSequence::type_a(4))).unwrap());
        assert_eq!(id.max, 0);
        assert_eq!(id.inv_tilde, 0);

        let one = rep(&[3]).stats();
        assert_eq!((one.neg, one.beta, one.alpha, one.max, one.last), (1, 1, 0, 1, 1));
    }

    #[test]
    fn stats_serialize_as_decimal_strings() {
        let json = serde_json::to_value(rep(&[3]).stats()).unwrap();
        assert_eq!(json["inv_tilde"], "1");
        assert_eq!(json["even_inv"], "0");
        let keys: BTreeSet<_> = json.as_object().unwrap().keys().cloned().collect();
        let expected: BTreeSet<String> =
            ["inv_tilde", "neg", "alpha", "beta", "last", "max", "odd_inv", "even_inv"]
                .into_iter()
                .map(String::from)
                .collect();
        assert_eq!(keys, expected);
        let back: WindowStats = serde_json::from_value(json).unwrap();
        assert_eq!(back, rep(&[3]).stats());
    }

    #[test]
    fn truncation_and_small_windows() {
        assert!(CosetRep::identity(4).in_tnk(0));
        assert!(rep(&[9, 11, 14, 19, 20]).in_tnk(5));
        assert!(!rep(&[9, 11, 14, 19, 20]).in_tnk(4));

        let lim = Limits::default();
        let s11: Vec<_> = enumerate_reps(1, 100, &lim)
            .unwrap()
            .into_iter()
            .filter(|w| w.in_snt(1))
            .map(|w| w.window().to_vec())
            .collect();
        assert_eq!(s11, vec![vec![1], vec![3], vec![5]]);
    }

    #[test]
    fn rep_enumeration_small_cases() {
        let lim = Limits::default();
        let got: Vec<_> = enumerate_reps(1, 6, &lim)
            .unwrap()
            .into_iter()
            .map(|w| w.window().to_vec())
            .collect();
        assert_eq!(got, vec![vec![1], vec![3], vec![5]]);
        let got: Vec<_> = enumerate_reps(2, 2, &lim).unwrap();
        assert_eq!(got, vec![CosetRep::identity(2)]);
        let s21 = enumerate_reps(2, 9, &lim).unwrap();
        assert_eq!(s21.len(), 9);
        assert_eq!(enumerate_reps(0, 0, &lim).unwrap(), vec![CosetRep::identity(0)]);
    }

    /// Brute force over all increasing positive windows with entries ≤ bound.
    fn brute_reps(n: usize, bound: i64) -> BTreeSet<Vec<i64>> {
        fn rec(n: usize, bound: i64, start: i64, cur: &mut Vec<i64>, out: &mut BTreeSet<Vec<i64>>) {
            if cur.len() == n {
                if AffineElement::new(cur.clone()).is_ok() {
                    out.insert(cur.clone());
                }
                return;
            }
            for v in start..=bound {
                cur.push(v);
                rec(n, bound, v + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = BTreeSet::new();
        rec(n, bound, 1, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn rep_enumeration_matches_brute_force() {
        let lim = Limits::default();
        for (n, bound) in [(1, 20), (2, 25), (3, 24), (4, 22)] {
            let got: Vec<Vec<i64>> = enumerate_reps(n, bound, &lim)
                .unwrap()
                .into_iter()
                .map(|w| w.window().to_vec())
                .collect();
            let set: BTreeSet<_> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len());
            assert!(got.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(set, brute_reps(n, bound), "n = {n}");
        }
    }

    #[test]
    fn window_bound_for_weight_is_sufficient() {
        let lim = Limits::default();
        for n in 1..=4 {
            for qcap in 0..=14 {
                let bound = max_window_for_weight(n, qcap);
                let beyond = enumerate_reps(n, bound + 2 * (2 * n as i64 + 2), &lim).unwrap();
                for w in beyond.iter().filter(|w| *w.window().last().unwrap() > bound) {
                    assert!(w.class_inv().inv_tilde() > qcap, "{w} at qcap {qcap}");
                }
            }
        }
    }

    #[test]
    fn bijection_and_statistics_agree_on_enumerated_windows() {
        let lim = Limits::default();
        for n in 0..=5 {
            let modulus = 2 * n as i64 + 2;
            for w in enumerate_reps(n, 3 * modulus, &lim).unwrap() {
                let lambda = w.to_lhp();
                assert_eq!(lambda.parts(), w.class_inv().entries(), "{w}");
                assert_eq!(from_lhp(&lambda).unwrap(), w);
                let stats = w.stats();
                assert_eq!(stats, WindowStats::from_partition(&lambda).unwrap(), "{w}");
                let single = lambda.with_context(SSequence::type_a(n)).unwrap().ceiling();
                assert_eq!(
                    LectureHallPartition::odd_entries(&single) as i64,
                    stats.beta - stats.alpha
                );
                assert_eq!(single.iter().sum::<i64>(), stats.alpha + stats.beta);
                assert!(w.class_inv().pairs().iter().flatten().all(|&x| x >= 0));
            }
        }
    }

    #[test]
    fn partitions_map_back_onto_windows() {
        let lim = Limits::default();
        for n in 0..=4 {
            let mut seen = BTreeSet::new();
            for lambda in enumerate_by_weight(&SSequence::type_a(n), 30, &lim).unwrap() {
                let w = from_lhp(&lambda).unwrap();
                assert_eq!(w.to_lhp(), lambda);
                assert!(seen.insert(w));
            }
        }
    }

    #[test]
    fn largest_part_and_max_statistic() {
        // (n + 1)(2t + 1) is never an entry; λ_n = 2tn sits just below it.
        let lim = Limits::default();
        for n in 1..=4 {
            let n1 = n as i64 + 1;
            for w in enumerate_reps(n, 7 * n1, &lim).unwrap() {
                let lambda_n = *w.to_lhp().parts().last().unwrap();
                let wn = *w.window().last().unwrap();
                assert_eq!(w.stats().max, lambda_n, "{w}");
                assert_ne!(wn % (2 * n1), n1);
                if lambda_n % (2 * n as i64) == 0 {
                    let t = lambda_n / (2 * n as i64);
                    assert_eq!(wn, n1 * (2 * t + 1) - 1, "{w}");
                }
                for t in 0..=3 {
                    assert_eq!(w.in_snt(t), lambda_n <= 2 * t as i64 * n as i64, "{w}, t = {t}");
                }
            }
        }
    }

    #[test]
    fn generator_indices() {
        let g = AffineElement::identity(2);
        assert!(matches!(
            gen_apply(&g, 3),
            Err(Error::GeneratorOutOfRange { index: 3, rank: 2 })
        ));
        assert_eq!(gen_apply(&g, 0).unwrap().window(), &[-1, 2]);
        assert_eq!(gen_apply(&g, 1).unwrap().window(), &[2, 1]);
        assert_eq!(gen_apply(&g, 2).unwrap().window(), &[1, 4]);
    }

    #[test]
    fn coxeter_relations_on_fixed_windows() {
        let apply = |w: &AffineElement, word: &[usize]| {
            word.iter().fold(w.clone(), |acc, &i| acc.apply_generator(i).unwrap())
        };
        let x = AffineElement::new(vec![5, -8]).unwrap();
        assert_eq!(apply(&x, &[0, 1, 0, 1, 0, 1, 0, 1]), x);
        assert_eq!(apply(&x, &[1, 2, 1, 2, 1, 2, 1, 2]), x);
        assert_ne!(apply(&x, &[0, 1, 0, 1]), x);
        // 8-step orbit of s_0 s_1 on [a, b]
        let orbit: Vec<Vec<i64>> = (1..=8)
            .map(|k| apply(&x, &[0, 1].repeat(4)[..k]).window().to_vec())
            .collect();
        assert_eq!(
            orbit,
            vec![
                vec![-5, -8],
                vec![-8, -5],
                vec![8, -5],
                vec![-5, 8],
                vec![5, 8],
                vec![8, 5],
                vec![-8, 5],
                vec![5, -8]
            ]
        );
    }
}
