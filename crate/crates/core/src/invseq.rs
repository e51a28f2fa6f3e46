//! `s`-inversion sequences and the encodings `Θ: S_n → I_n` and
//! `Ψ: C_n → I_n^(2,4,…,2n)`.
//!
//! All ratio comparisons are done by cross-multiplication in integers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::notation::{format_list, parse_list};
use crate::perms::{Permutation, SignedPermutation};

/// A sequence of positive integers `s = (s_1, …, s_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SSequence(Vec<i64>);

impl SSequence {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|&&v| v < 1) {
            return Err(Error::invalid("s-sequence", format!("entry {bad} is not positive")));
        }
        Ok(SSequence(values))
    }

    /// `(1, 2, …, n)`.
    pub fn type_a(n: usize) -> Self {
        SSequence((1..=n as i64).collect())
    }

    /// `(2, 4, …, 2n)`.
    pub fn type_c(n: usize) -> Self {
        SSequence((1..=n as i64).map(|i| 2 * i).collect())
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

    pub fn is_type_a(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    pub fn is_type_c(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == 2 * (i as i64 + 1))
    }

    /// Number of sequences in `I_n^(s)`, or `None` on overflow.
    pub fn count(&self) -> Option<usize> {
        self.0
            .iter()
            .try_fold(1usize, |acc, &v| acc.checked_mul(v as usize))
    }
}

impl fmt::Display for SSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.0))
    }
}

/// `e` with `0 ≤ e_i < s_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSequence {
    e: Vec<i64>,
    s: SSequence,
}

impl InversionSequence {
    pub fn new(e: Vec<i64>, s: SSequence) -> Result<Self> {
        if e.len() != s.len() {
            return Err(Error::LengthMismatch {
                expected: s.len(),
                found: e.len(),
            });
        }
        for (i, (&ei, &si)) in e.iter().zip(s.values()).enumerate() {
            if !(0..si).contains(&ei) {
                return Err(Error::invalid(
                    "inversion sequence",
                    format!("e_{} = {ei} outside 0..{si}", i + 1),
                ));
            }
        }
        Ok(InversionSequence { e, s })
    }

    pub fn zeros(s: SSequence) -> Self {
        InversionSequence {
            e: vec![0; s.len()],
            s,
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.e
    }

    pub fn context(&self) -> &SSequence {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }

    /// `|e| = Σ e_i`.
    pub fn weight(&self) -> i64 {
        self.e.iter().sum()
    }

    /// Positions `i ∈ {0, …, n−1}` with `e_i/s_i < e_{i+1}/s_{i+1}`, where
    /// `e_0 = 0` and `s_0 = 1`.
    pub fn asc_set(&self) -> Vec<usize> {
        let s = self.s.values();
        let mut out = Vec::new();
        let (mut pe, mut ps) = (0i64, 1i64);
        for (i, (&ce, &cs)) in self.e.iter().zip(s).enumerate() {
            if pe * cs < ce * ps {
                out.push(i);
            }
            (pe, ps) = (ce, cs);
        }
        out
    }

    pub fn asc(&self) -> usize {
        self.asc_set().len()
    }

    /// `amaj^(s)(e) = Σ_{i ∈ Asc} (n − i)`.
    pub fn amaj(&self) -> u64 {
        let n = self.e.len() as u64;
        self.asc_set().into_iter().map(|i| n - i as u64).sum()
    }

    /// `lhp^(s)(e) = −|e| + Σ_{i ∈ Asc} (s_{i+1} + ⋯ + s_n)`.
    pub fn lhp(&self) -> i64 {
        let s = self.s.values();
        let mut suffix = vec![0i64; s.len() + 1];
        for i in (0..s.len()).rev() {
            suffix[i] = suffix[i + 1] + s[i];
        }
        let tail: i64 = self.asc_set().into_iter().map(|i| suffix[i]).sum();
        tail - self.weight()
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} e={}", self.s, format_list(&self.e))
    }
}

impl FromStr for InversionSequence {
    type Err = Error;

    /// Parses `s=[2,4,6] e=[1,2,1]`.
    fn from_str(text: &str) -> Result<Self> {
        let mut s = None;
        let mut e = None;
        let mut rest = text.trim();
        while !rest.is_empty() {
            let (key, after) = rest
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=[...] in {text:?}")))?;
            let close = after
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unterminated list in {text:?}")))?;
            let list = parse_list(&after[..=close])?;
            match key.trim() {
                "s" => s = Some(list),
                "e" => e = Some(list),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
            rest = after[close + 1..].trim_start();
        }
        let s = s.ok_or_else(|| Error::Parse("missing s=[...]".into()))?;
        let e = e.ok_or_else(|| Error::Parse("missing e=[...]".into()))?;
        InversionSequence::new(e, SSequence::new(s)?)
    }
}

/// `Θ(π)_i = #{j < i : π_j > π_i}`, a sequence in `I_n = I_n^(1,2,…,n)`.
pub fn theta(pi: &Permutation) -> InversionSequence {
    let v = pi.values();
    let e = (0..v.len())
        .map(|i| v[..i].iter().filter(|&&x| x > v[i]).count() as i64)
        .collect();
    InversionSequence {
        e,
        s: SSequence::type_a(v.len()),
    }
}

/// Inverse of [`theta`]. Scanning `i` from `n` down to `1`, `π_i` is the
/// `(e_i + 1)`-th largest value not yet placed.
pub fn theta_inverse(e: &InversionSequence) -> Result<Permutation> {
    if !e.s.is_type_a() {
        return Err(Error::invalid(
            "inversion sequence",
            format!("context {} is not (1,2,…,n)", e.s),
        ));
    }
    let n = e.len();
    let mut remaining: Vec<i64> = (1..=n as i64).collect();
    let mut values = vec![0; n];
    for i in (0..n).rev() {
        let idx = remaining.len() - 1 - e.e[i] as usize;
        values[i] = remaining.remove(idx);
    }
    Ok(Permutation::new_unchecked(values))
}

/// `Ψ(σ)_i = e*_i` if `σ_i > 0` and `2i − 1 − e*_i` otherwise, where
/// `e* = Θ(|σ|)`.
pub fn psi(sigma: &SignedPermutation) -> InversionSequence {
    let star = theta(&sigma.magnitudes());
    let e = sigma
        .values()
        .iter()
        .zip(star.entries())
        .enumerate()
        .map(|(idx, (&v, &es))| if v > 0 { es } else { 2 * (idx as i64 + 1) - 1 - es })
        .collect();
    InversionSequence {
        e,
        s: SSequence::type_c(sigma.len()),
    }
}

/// Inverse of [`psi`]: the sign of `σ_i` is positive iff `e_i ≤ i − 1`.
pub fn psi_inverse(e: &InversionSequence) -> Result<SignedPermutation> {
    if !e.s.is_type_c() {
        return Err(Error::invalid(
            "inversion sequence",
            format!("context {} is not (2,4,…,2n)", e.s),
        ));
    }
    let n = e.len();
    let mut star = Vec::with_capacity(n);
    let mut positive = Vec::with_capacity(n);
    for (idx, &ei) in e.e.iter().enumerate() {
        let i = idx as i64 + 1;
        let pos = ei < i;
        positive.push(pos);
        star.push(if pos { ei } else { 2 * i - 1 - ei });
    }
    let mags = theta_inverse(&InversionSequence {
        e: star,
        s: SSequence::type_a(n),
    })?;
    let values = mags
        .values()
        .iter()
        .zip(positive)
        .map(|(&m, pos)| if pos { m } else { -m })
        .collect();
    Ok(SignedPermutation::new_unchecked(values))
}

/// All of `I_n^(s)` in lexicographic order.
pub fn enumerate_invseq(s: &SSequence, limits: &Limits) -> Result<InversionSequences> {
    limits.check_rank(s.len())?;
    let total = s
        .count()
        .ok_or_else(|| Error::ResourceCap("sequence count overflows".into()))?;
    limits.check_items(total)?;
    Ok(InversionSequences {
        s: s.clone(),
        current: Some(vec![0; s.len()]),
    })
}

#[derive(Debug, Clone)]
pub struct InversionSequences {
    s: SSequence,
    current: Option<Vec<i64>>,
}

impl Iterator for InversionSequences {
    type Item = InversionSequence;

    fn next(&mut self) -> Option<InversionSequence> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let s = self.s.values();
        for i in (0..next.len()).rev() {
            if next[i] + 1 < s[i] {
                next[i] += 1;
                self.current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(InversionSequence {
            e: out,
            s: self.s.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::{enumerate_cn, enumerate_sn};

    fn seq(e: &[i64], s: &[i64]) -> InversionSequence {
        InversionSequence::new(e.to_vec(), SSequence::new(s.to_vec()).unwrap()).unwrap()
    }

    fn sp(v: &[i64]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ascent_sets() {
        let e = seq(&[1, 2, 1, 7, 8], &[2, 4, 6, 8, 10]);
        assert_eq!(e.asc_set(), vec![0, 3]);
        assert_eq!(e.asc(), 2);
        assert!(InversionSequence::zeros(SSequence::type_c(4)).asc_set().is_empty());
        assert_eq!(seq(&[0, 1, 2], &[1, 2, 3]).asc_set(), vec![1, 2]);
    }

    #[test]
    fn amaj_and_lhp() {
        let e = seq(&[1, 2, 1, 7, 8], &[2, 4, 6, 8, 10]);
        assert_eq!(e.amaj(), 7);
        assert_eq!(e.lhp(), 29);
        let z = InversionSequence::zeros(SSequence::type_c(3));
        assert_eq!((z.amaj(), z.lhp()), (0, 0));
        let small = seq(&[1, 3], &[2, 4]);
        assert_eq!(small.asc_set(), vec![0, 1]);
        assert_eq!((small.amaj(), small.lhp()), (3, 6));
    }

    #[test]
    fn theta_examples() {
        let pi = Permutation::new(vec![3, 1, 2, 5, 4]).unwrap();
        assert_eq!(theta(&pi).entries(), &[0, 1, 1, 0, 1]);
        assert_eq!(theta(&Permutation::identity(4)).entries(), &[0, 0, 0, 0]);
        assert_eq!(theta(&Permutation::new(vec![2, 1]).unwrap()).entries(), &[0, 1]);

        assert_eq!(theta_inverse(&seq(&[0, 1, 1, 0, 1], &[1, 2, 3, 4, 5])).unwrap(), pi);
        assert_eq!(
            theta_inverse(&InversionSequence::zeros(SSequence::type_a(3))).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(theta_inverse(&seq(&[0, 1], &[1, 2])).unwrap().values(), &[2, 1]);
        assert!(theta_inverse(&seq(&[0, 1], &[2, 4])).is_err());
    }

    #[test]
    fn psi_examples() {
        let sigma = sp(&[-3, -1, 2, -5, -4]);
        let e = psi(&sigma);
        assert_eq!(e.entries(), &[1, 2, 1, 7, 8]);
        assert_eq!(e.context(), &SSequence::type_c(5));
        assert_eq!(psi_inverse(&e).unwrap(), sigma);

        assert_eq!(psi(&SignedPermutation::identity(4)).entries(), &[0, 0, 0, 0]);
        assert_eq!(psi(&sp(&[-1, -2])).entries(), &[1, 3]);
        assert_eq!(psi_inverse(&seq(&[1, 3], &[2, 4])).unwrap(), sp(&[-1, -2]));
        assert!(psi_inverse(&seq(&[0, 1], &[1, 2])).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let lim = Limits::default();
        let s24 = SSequence::new(vec![2, 4]).unwrap();
        assert_eq!(enumerate_invseq(&s24, &lim).unwrap().count(), 8);
        let only: Vec<_> = enumerate_invseq(&SSequence::new(vec![1]).unwrap(), &lim)
            .unwrap()
            .collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].entries(), &[0]);
        let all: Vec<_> = enumerate_invseq(&SSequence::type_c(3), &lim).unwrap().collect();
        assert_eq!(all.len(), 48);
        assert!(all.windows(2).all(|w| w[0].entries() < w[1].entries()));
        assert_eq!(enumerate_invseq(&SSequence::type_c(0), &lim).unwrap().count(), 1);
    }

    #[test]
    fn text_form() {
        let e: InversionSequence = "s=[2,4,6,8,10] e=[1,2,1,7,8]".parse().unwrap();
        assert_eq!(e, seq(&[1, 2, 1, 7, 8], &[2, 4, 6, 8, 10]));
        assert_eq!(e.to_string(), "s=[2,4,6,8,10] e=[1,2,1,7,8]");
        assert!("s=[2,4] e=[2,0]".parse::<InversionSequence>().is_err());
        assert!("s=[2,4]".parse::<InversionSequence>().is_err());
        assert!("s=[0] e=[0]".parse::<InversionSequence>().is_err());
    }

    #[test]
    fn psi_is_a_bijection_preserving_descents_and_length() {
        let lim = Limits::default();
        for n in 0..=6 {
            let mut images = std::collections::HashSet::new();
            for sigma in enumerate_cn(n, &lim).unwrap() {
                let e = psi(&sigma);
                assert!(InversionSequence::new(e.entries().to_vec(), SSequence::type_c(n)).is_ok());
                assert_eq!(psi_inverse(&e).unwrap(), sigma);
                assert_eq!(sigma.des_set(), e.asc_set(), "{sigma}");
                assert_eq!(e.weight() as u64, sigma.inv_c(), "{sigma}");
                assert_eq!(sigma.comaj(), e.amaj());
                assert_eq!(sigma.lhp_c() as i64, e.lhp());
                images.insert(e);
            }
            assert_eq!(images.len(), SSequence::type_c(n).count().unwrap());
            for e in enumerate_invseq(&SSequence::type_c(n), &lim).unwrap() {
                assert_eq!(psi(&psi_inverse(&e).unwrap()), e);
            }
        }
    }

    #[test]
    fn theta_matches_inversions_and_descents() {
        for n in 0..=7 {
            for pi in enumerate_sn(n, &Limits::default()).unwrap() {
                let e = theta(&pi);
                assert_eq!(e.weight() as u64, pi.inv());
                assert_eq!(pi.des_set(), e.asc_set());
                assert_eq!(pi.lhp() as i64, e.lhp());
                assert_eq!(theta_inverse(&e).unwrap(), pi);
            }
        }
    }

    #[test]
    fn product_form_of_psi() {
        // e_i = Σ_{j ≤ i} (χ(σ_j > σ_i) + χ(σ_j + σ_i < 0))
        for n in 0..=5 {
            for sigma in enumerate_cn(n, &Limits::default()).unwrap() {
                let v = sigma.values();
                let direct: Vec<i64> = (0..n)
                    .map(|i| {
                        (0..=i)
                            .map(|j| (v[j] > v[i]) as i64 + (v[j] + v[i] < 0) as i64)
                            .sum()
                    })
                    .collect();
                assert_eq!(psi(&sigma).entries(), direct.as_slice());
            }
        }
    }

    #[test]
    fn magnitude_comparison_splits_by_sign() {
        let chi = |b: bool| b as i64;
        for n in 0..=5 {
            for sigma in enumerate_cn(n, &Limits::default()).unwrap() {
                let v = sigma.values();
                for i in 0..n {
                    for j in 0..i {
                        let mixed = chi(v[j] > v[i]) + chi(v[j] + v[i] < 0);
                        let expected = if v[i] > 0 { mixed } else { 2 - mixed };
                        assert_eq!(chi(v[j].abs() > v[i].abs()), expected);
                    }
                }
            }
        }
    }
}
