//! Generating-function identities checked coefficient by coefficient.
//!
//! Each check enumerates one side exactly (partitions, windows or signed
//! permutations) and builds the other side from q-analogs, both in the same
//! [`Space`]. Series identities are compared under per-variable caps;
//! identities whose enumerated side is a finite polynomial are compared after
//! clearing denominators.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::affine::{enumerate_reps, max_window_for_weight, CosetRep};
use crate::error::{Error, Result};
use crate::invseq::SSequence;
use crate::lecturehall::{enumerate_pairs, for_each_by_last_part, for_each_by_weight, odd_even_split, LectureHallPartition};
use crate::limits::Limits;
use crate::perms::{enumerate_cn, enumerate_sn};
use crate::qseries::{
    falling_pochhammer, pochhammer, pochhammer_inverse, q_binomial, q_bracket, Exponents, Monomial, MultiPoly,
    Space, TermJson,
};

macro_rules! identity_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Registered identities, named as on the command line.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant),*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name),*
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(IdentityId::$variant),)*
                    _ => Err(Error::Parse(format!("unknown identity {s:?}"))),
                }
            }
        }
    };
}

identity_ids! {
    LectureHall => "LHT",
    Bott => "bott",
    RefinedUv => "refined-uv",
    TruncatedBott => "truncated-bott",
    TruncatedBottSum => "truncated-bott-sum",
    OddEven => "odd-even",
    TruncatedOddEven => "truncated-odd-even",
    Box => "box",
    Snt => "snt",
    SntAb => "snt-ab",
    SntDiagonal => "snt-diagonal",
    Ehrhart => "ehrhart",
    ComajLhp => "comaj-lhp",
    QuadLhp => "quadlhp",
    ComajProduct => "comaj-product",
    TypeALhp => "typeA-lhp",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters of a check. Absent values fall back to per-identity defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub n: usize,
    pub k: Option<usize>,
    pub t: Option<u32>,
    pub j: Option<u32>,
    pub qcap: Option<u32>,
    /// Per-variable caps by name, overriding the defaults.
    pub caps: BTreeMap<String, u32>,
}

impl CheckParams {
    pub fn new(n: usize) -> Self {
        CheckParams {
            n,
            ..CheckParams::default()
        }
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn t(mut self, t: u32) -> Self {
        self.t = Some(t);
        self
    }

    pub fn j(mut self, j: u32) -> Self {
        self.j = Some(j);
        self
    }

    pub fn qcap(mut self, qcap: u32) -> Self {
        self.qcap = Some(qcap);
        self
    }

    pub fn cap(mut self, var: &str, cap: u32) -> Self {
        self.caps.insert(var.to_string(), cap);
        self
    }

    fn require_k(&self) -> Result<usize> {
        let k = self.k.ok_or_else(|| Error::Precondition("this identity needs k".into()))?;
        if k > self.n {
            return Err(Error::Precondition(format!("k = {k} exceeds n = {}", self.n)));
        }
        Ok(k)
    }

    fn require_t(&self) -> Result<u32> {
        self.t.ok_or_else(|| Error::Precondition("this identity needs t".into()))
    }

    fn q_cap_or(&self, default: u32) -> u32 {
        self.caps.get("q").copied().or(self.qcap).unwrap_or(default)
    }

    /// Builds the space for `vars`, taking each cap from `caps`, then from
    /// `defaults`.
    fn space(&self, vars: &[&str], defaults: &[Option<u32>]) -> Result<Arc<Space>> {
        if let Some(unknown) = self.caps.keys().find(|v| !vars.contains(&v.as_str())) {
            return Err(Error::Precondition(format!("cap given for unused variable {unknown:?}")));
        }
        let caps: Vec<Option<u32>> = vars
            .iter()
            .zip(defaults)
            .map(|(v, d)| self.caps.get(*v).copied().or(*d))
            .collect();
        Space::new(vars, &caps)
    }
}

/// Outcome of a comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    /// `stage` names which comparison failed; `exps` is the smallest
    /// differing exponent vector.
    Mismatch {
        stage: &'static str,
        exps: Exponents,
        lhs: BigInt,
        rhs: BigInt,
    },
    /// The formula side could not be built, e.g. a division that should be
    /// exact left a remainder.
    FormulaError(String),
}

#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub params: CheckParams,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub verdict: Verdict,
    pub wall_time_ms: u128,
}

impl IdentityCheck {
    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }

    pub fn space(&self) -> &Arc<Space> {
        self.lhs.space()
    }

    pub fn report(&self) -> Report {
        let space = self.space();
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), self.params.n.to_string());
        let optional = [
            ("k", self.params.k.map(|v| v.to_string())),
            ("t", self.params.t.map(|v| v.to_string())),
            ("j", self.params.j.map(|v| v.to_string())),
            ("qcap", self.params.qcap.map(|v| v.to_string())),
        ];
        for (key, value) in optional {
            if let Some(v) = value {
                params.insert(key.to_string(), v);
            }
        }
        let caps = space
            .vars()
            .iter()
            .zip(space.caps())
            .map(|(v, c)| (v.clone(), c.map(|c| c.to_string())))
            .collect();
        let nvars = space.vars().len();
        let (verdict, mismatch, error) = match &self.verdict {
            Verdict::Equal => ("equal", None, None),
            Verdict::Mismatch { stage, exps, lhs, rhs } => (
                "mismatch",
                Some(MismatchReport {
                    stage: stage.to_string(),
                    exps: exps.0[..nvars].to_vec(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }),
                None,
            ),
            Verdict::FormulaError(msg) => ("formula-error", None, Some(msg.clone())),
        };
        Report {
            id: self.id.name().to_string(),
            params,
            caps,
            verdict: verdict.to_string(),
            mismatch,
            error,
            lhs_terms: self.lhs.to_json_terms(),
            rhs_terms: self.rhs.to_json_terms(),
            wall_time_ms: self.wall_time_ms.to_string(),
        }
    }
}

/// Machine-readable form of an [`IdentityCheck`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub caps: BTreeMap<String, Option<String>>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mismatch: Option<MismatchReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub lhs_terms: Vec<TermJson>,
    pub rhs_terms: Vec<TermJson>,
    pub wall_time_ms: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchReport {
    pub stage: String,
    pub exps: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
}

/// Runs one identity.
///
/// Resource problems and malformed parameters are errors; a formula that
/// cannot be evaluated is reported in the verdict.
pub fn run(id: IdentityId, params: &CheckParams, limits: &Limits) -> Result<IdentityCheck> {
    limits.check_rank(params.n)?;
    let start = Instant::now();
    let outcome = match id {
        IdentityId::LectureHall => lecture_hall(params, limits),
        IdentityId::Bott => bott(params, limits),
        IdentityId::RefinedUv => refined_uv(params, limits),
        IdentityId::TruncatedBott => truncated_bott(params, limits),
        IdentityId::TruncatedBottSum => truncated_bott_sum(params, limits),
        IdentityId::OddEven => odd_even(params, limits),
        IdentityId::TruncatedOddEven => truncated_odd_even(params, limits),
        IdentityId::Box => box_count(params, limits),
        IdentityId::Snt => snt(params, limits),
        IdentityId::SntAb => snt_ab(params, limits),
        IdentityId::SntDiagonal => snt_diagonal(params, limits),
        IdentityId::Ehrhart => ehrhart(params, limits),
        IdentityId::ComajLhp => comaj_lhp(params, limits),
        IdentityId::QuadLhp => quad_lhp(params, limits),
        IdentityId::ComajProduct => comaj_product(params, limits),
        IdentityId::TypeALhp => type_a_lhp(params, limits),
    }?;
    let verdict = match outcome.early {
        Some(v) => v,
        None => compare("result", &outcome.lhs, &outcome.rhs),
    };
    Ok(IdentityCheck {
        id,
        params: params.clone(),
        lhs: outcome.lhs,
        rhs: outcome.rhs,
        verdict,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

struct Outcome {
    lhs: MultiPoly,
    rhs: MultiPoly,
    /// A verdict settled before the final comparison.
    early: Option<Verdict>,
}

impl Outcome {
    fn compare(lhs: MultiPoly, rhs: MultiPoly) -> Self {
        Outcome { lhs, rhs, early: None }
    }

    fn formula_error(lhs: MultiPoly, err: Error) -> Self {
        Outcome {
            rhs: MultiPoly::zero(lhs.space()),
            lhs,
            early: Some(Verdict::FormulaError(err.to_string())),
        }
    }
}

fn compare(stage: &'static str, lhs: &MultiPoly, rhs: &MultiPoly) -> Verdict {
    match lhs.first_difference(rhs) {
        None => Verdict::Equal,
        Some((exps, lhs, rhs)) => Verdict::Mismatch { stage, exps, lhs, rhs },
    }
}

/// Builds a formula side, turning arithmetic failures into a verdict.
fn formula(lhs: MultiPoly, rhs: Result<MultiPoly>) -> Outcome {
    match rhs {
        Ok(rhs) => Outcome::compare(lhs, rhs),
        Err(e) => Outcome::formula_error(lhs, e),
    }
}

fn mono(space: &Space, powers: &[(&str, u32)]) -> Monomial {
    space.monomial(powers).expect("variables belong to the space")
}

fn one_plus(space: &Arc<Space>, m: Monomial) -> MultiPoly {
    &MultiPoly::one(space) + &MultiPoly::monomial(space, m)
}

fn one_minus(space: &Arc<Space>, m: Monomial) -> MultiPoly {
    &MultiPoly::one(space) - &MultiPoly::monomial(space, m)
}

fn exps(powers: &[u32]) -> Exponents {
    let mut e = [0u32; 3];
    e[..powers.len()].copy_from_slice(powers);
    Exponents(e)
}

fn to_u32(v: i64) -> u32 {
    u32::try_from(v).expect("statistics are nonnegative")
}

fn tri(m: u32) -> u32 {
    m * (m + 1) / 2
}

/// Coset representatives of Coxeter length at most `qcap`.
fn windows_up_to(n: usize, qcap: u32, limits: &Limits) -> Result<Vec<CosetRep>> {
    let bound = max_window_for_weight(n, qcap as i64);
    let mut reps = enumerate_reps(n, bound, limits)?;
    reps.retain(|w| w.class_inv().inv_tilde() <= qcap as i64);
    Ok(reps)
}

fn lecture_hall(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let qcap = p.q_cap_or(24);
    let space = p.space(&["q"], &[Some(qcap)])?;
    let mut lhs = MultiPoly::zero(&space);
    for_each_by_weight(&SSequence::type_a(p.n), qcap as i64, limits, |parts| {
        lhs.add_term(exps(&[to_u32(parts.iter().sum())]), BigInt::one());
    })?;
    let rhs = (1..=p.n as u32).try_fold(MultiPoly::one(&space), |acc, i| {
        Ok(&acc * &MultiPoly::geom_inverse(&space, mono(&space, &[("q", 2 * i - 1)]))?)
    });
    Ok(formula(lhs, rhs))
}

/// `Σ q^{inv} a^α b^β` over windows, in the space `[a, b, q]`.
fn bott_lhs(space: &Arc<Space>, windows: &[CosetRep]) -> MultiPoly {
    let mut lhs = MultiPoly::zero(space);
    for w in windows {
        let s = w.stats();
        lhs.add_term(
            exps(&[to_u32(s.alpha), to_u32(s.beta), to_u32(s.inv_tilde)]),
            BigInt::one(),
        );
    }
    lhs
}

fn bott_space(p: &CheckParams, qcap: u32) -> Result<Arc<Space>> {
    p.space(&["a", "b", "q"], &[None, None, Some(qcap)])
}

fn bott_rhs(space: &Arc<Space>, n: usize) -> Result<MultiPoly> {
    let n = n as u32;
    let mut rhs = MultiPoly::one(space);
    for i in 1..=n {
        rhs = &rhs * &one_plus(space, mono(space, &[("b", 1), ("q", i)]));
        rhs = &rhs * &MultiPoly::geom_inverse(space, mono(space, &[("a", 1), ("b", 1), ("q", n + i)]))?;
    }
    Ok(rhs)
}

fn bott(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let qcap = p.q_cap_or(12);
    let space = bott_space(p, qcap)?;
    let lhs = bott_lhs(&space, &windows_up_to(p.n, qcap, limits)?);
    Ok(formula(lhs, bott_rhs(&space, p.n)))
}

fn refined_uv(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let n = p.n;
    let qcap = p.q_cap_or(12);
    let space = p.space(&["u", "v", "q"], &[None, None, Some(qcap)])?;
    let s = SSequence::type_a(n);

    let mut from_partitions = MultiPoly::zero(&space);
    for_each_by_weight(&s, qcap as i64, limits, |parts| {
        let lambda = LectureHallPartition::new(parts.to_vec(), s.clone()).expect("enumerated partitions are valid");
        let ceiling = lambda.ceiling();
        from_partitions.add_term(
            exps(&[
                to_u32(ceiling.iter().sum()),
                LectureHallPartition::odd_entries(&ceiling) as u32,
                to_u32(lambda.weight()),
            ]),
            BigInt::one(),
        );
    })?;

    let mut from_windows = MultiPoly::zero(&space);
    for w in windows_up_to(n, qcap, limits)? {
        let st = w.stats();
        from_windows.add_term(
            exps(&[to_u32(st.alpha + st.beta), to_u32(st.beta - st.alpha), to_u32(st.inv_tilde)]),
            BigInt::one(),
        );
    }

    let mut from_pairs = MultiPoly::zero(&space);
    for pair in enumerate_pairs(&s, qcap as i64, limits)? {
        let b = pair.ceiling();
        let weight = pair.to_partition().weight();
        from_pairs.add_term(
            exps(&[
                to_u32(b.iter().sum()),
                LectureHallPartition::odd_entries(b) as u32,
                to_u32(weight),
            ]),
            BigInt::one(),
        );
    }

    for (stage, other) in [("partitions-vs-windows", &from_windows), ("partitions-vs-pairs", &from_pairs)] {
        let v = compare(stage, &from_partitions, other);
        if v != Verdict::Equal {
            return Ok(Outcome {
                lhs: from_partitions,
                rhs: other.clone(),
                early: Some(v),
            });
        }
    }

    let rhs = (1..=n as u32).try_fold(MultiPoly::one(&space), |acc, i| {
        let num = one_plus(&space, mono(&space, &[("u", 1), ("v", 1), ("q", i)]));
        let den = MultiPoly::geom_inverse(&space, mono(&space, &[("u", 2), ("q", n as u32 + i)]))?;
        Ok(&(&acc * &num) * &den)
    });
    Ok(formula(from_partitions, rhs))
}

fn truncated_bott_rhs(space: &Arc<Space>, n: usize, k: usize) -> Result<MultiPoly> {
    let (n, k) = (n as u32, k as u32);
    let q = mono(space, &[("q", 1)]);
    let lead = MultiPoly::monomial(space, mono(space, &[("b", k), ("q", tri(k))]));
    let binom = q_binomial(space, n, k, q)?;
    let num = pochhammer(space, mono(space, &[("a", 1), ("q", n - k + 1)]).negated(), q, k);
    let den = pochhammer_inverse(space, mono(space, &[("a", 1), ("b", 1), ("q", 2 * n - k + 1)]), q, k)?;
    Ok(&(&(&lead * &binom) * &num) * &den)
}

fn truncated_bott(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let k = p.require_k()?;
    let qcap = p.q_cap_or(12);
    let space = bott_space(p, qcap)?;
    let mut windows = windows_up_to(p.n, qcap, limits)?;
    windows.retain(|w| w.in_tnk(k));
    let lhs = bott_lhs(&space, &windows);
    Ok(formula(lhs, truncated_bott_rhs(&space, p.n, k)))
}

/// The windows split by `k` reproduce the full sum, and the truncated
/// formulas sum to the full product.
fn truncated_bott_sum(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let qcap = p.q_cap_or(12);
    let space = bott_space(p, qcap)?;
    let windows = windows_up_to(p.n, qcap, limits)?;
    let full = bott_lhs(&space, &windows);
    let mut split = MultiPoly::zero(&space);
    for k in 0..=p.n {
        let part: Vec<CosetRep> = windows.iter().filter(|w| w.in_tnk(k)).cloned().collect();
        split = &split + &bott_lhs(&space, &part);
    }
    let v = compare("window-partition", &split, &full);
    if v != Verdict::Equal {
        return Ok(Outcome {
            lhs: split,
            rhs: full,
            early: Some(v),
        });
    }
    let summed = (0..=p.n).try_fold(MultiPoly::zero(&space), |acc, k| {
        Ok(&acc + &truncated_bott_rhs(&space, p.n, k)?)
    });
    let summed = match summed {
        Ok(s) => s,
        Err(e) => return Ok(Outcome::formula_error(split, e)),
    };
    Ok(formula(summed, bott_rhs(&space, p.n)))
}

fn odd_even_space(p: &CheckParams) -> Result<(Arc<Space>, u32, u32)> {
    let space = p.space(&["x", "y"], &[Some(10), Some(10)])?;
    let caps = space.caps();
    let (xc, yc) = (caps[0].expect("x is capped"), caps[1].expect("y is capped"));
    Ok((space, xc, yc))
}

/// `Σ x^{|w|_o} y^{|w|_e}` over windows in `T_{n,k}`, or over all windows.
fn odd_even_lhs(
    space: &Arc<Space>,
    n: usize,
    weight_cap: u32,
    k: Option<usize>,
    limits: &Limits,
) -> Result<MultiPoly> {
    let mut lhs = MultiPoly::zero(space);
    for w in windows_up_to(n, weight_cap, limits)? {
        if k.is_some_and(|k| !w.in_tnk(k)) {
            continue;
        }
        let (odd, even) = odd_even_split(w.class_inv().entries());
        lhs.add_term(exps(&[to_u32(odd), to_u32(even)]), BigInt::one());
    }
    Ok(lhs)
}

fn odd_even(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let (space, xc, yc) = odd_even_space(p)?;
    let lhs = odd_even_lhs(&space, p.n, xc + yc, None, limits)?;
    let rhs = (1..=p.n as u32).try_fold(MultiPoly::one(&space), |acc, i| {
        Ok(&acc * &MultiPoly::geom_inverse(&space, mono(&space, &[("x", i), ("y", i - 1)]))?)
    });
    Ok(formula(lhs, rhs))
}

/// Numerator `(x^{⌊k/2⌋+1} y^{⌊k/2⌋})^{⌈k/2⌉} [n − ⌈k/2⌉ choose ⌊k/2⌋]_{xy}`
/// of the truncated odd/even formula.
pub(crate) fn truncated_odd_even_numerator(space: &Arc<Space>, n: usize, k: usize) -> Result<MultiPoly> {
    let (fl, cl) = ((k / 2) as u32, k.div_ceil(2) as u32);
    let lead = mono(space, &[("x", fl + 1), ("y", fl)]).pow(cl);
    let binom = q_binomial(space, n as u32 - cl, fl, mono(space, &[("x", 1), ("y", 1)]))?;
    Ok(&MultiPoly::monomial(space, lead) * &binom)
}

/// Denominator `(x; xy)_{⌈k/2⌉} (x^n y^{n−1}; (xy)^{−1})_{⌊k/2⌋}`.
pub(crate) fn truncated_odd_even_denominator(space: &Arc<Space>, n: usize, k: usize) -> Result<MultiPoly> {
    let (fl, cl) = ((k / 2) as u32, k.div_ceil(2) as u32);
    let n = n as u32;
    let xy = mono(space, &[("x", 1), ("y", 1)]);
    let rising = pochhammer(space, mono(space, &[("x", 1)]), xy, cl);
    let top = mono(space, &[("x", n), ("y", n.saturating_sub(1))]);
    Ok(&rising * &falling_pochhammer(space, top, xy, fl)?)
}

/// Compared after multiplying the enumerated series by the denominator.
fn truncated_odd_even(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let k = p.require_k()?;
    let (space, xc, yc) = odd_even_space(p)?;
    let series = odd_even_lhs(&space, p.n, xc + yc, Some(k), limits)?;
    let den = match truncated_odd_even_denominator(&space, p.n, k) {
        Ok(d) => d,
        Err(e) => return Ok(Outcome::formula_error(series, e)),
    };
    Ok(formula(&series * &den, truncated_odd_even_numerator(&space, p.n, k)))
}

fn count_space() -> Arc<Space> {
    Space::polynomial(&[]).expect("empty variable list is valid")
}

fn box_count(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let k = p.require_k()? as u32;
    let j = p.j.ok_or_else(|| Error::Precondition("this identity needs j".into()))?;
    let n = p.n as u32;
    let count = for_each_by_last_part(p.n, (j * n + k) as i64, limits, |_| {})?;
    let space = count_space();
    let lhs = MultiPoly::from_terms(&space, [(Exponents::default(), BigInt::from(count))]);
    let closed = BigInt::from(j + 1).pow(n - k) * BigInt::from(j + 2).pow(k);
    let rhs = MultiPoly::from_terms(&space, [(Exponents::default(), closed)]);
    Ok(Outcome::compare(lhs, rhs))
}

fn small_windows(n: usize, t: u32, limits: &Limits) -> Result<Vec<CosetRep>> {
    let bound = (2 * t as i64 + 1) * (n as i64 + 1);
    enumerate_reps(n, bound, limits)
}

fn snt(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let t = p.require_t()?;
    let windows = small_windows(p.n, t, limits)?;
    debug_assert!(windows.iter().all(|w| w.in_snt(t)));
    let space = count_space();
    let lhs = MultiPoly::from_terms(&space, [(Exponents::default(), BigInt::from(windows.len()))]);
    let rhs = MultiPoly::from_terms(&space, [(Exponents::default(), BigInt::from(2 * t + 1).pow(p.n as u32))]);
    Ok(Outcome::compare(lhs, rhs))
}

/// `((1 + b − a^t b^{t+1}(1 + a)) / (1 − ab))^n`, with the division exact.
pub(crate) fn small_windows_formula(space: &Arc<Space>, n: usize, t: u32) -> Result<MultiPoly> {
    let one = MultiPoly::one(space);
    let b = MultiPoly::monomial(space, mono(space, &[("b", 1)]));
    let corner = MultiPoly::monomial(space, mono(space, &[("a", t), ("b", t + 1)]));
    let numerator = &(&one + &b) - &(&corner * &one_plus(space, mono(space, &[("a", 1)])));
    let ring = space.uncapped();
    let factor = numerator
        .recap(&ring)?
        .exact_div(&one_minus(&ring, mono(&ring, &[("a", 1), ("b", 1)])))?;
    factor.pow(n as u32).recap(space)
}

fn snt_ab(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let t = p.require_t()?;
    let space = p.space(&["a", "b"], &[None, None])?;
    let mut lhs = MultiPoly::zero(&space);
    for w in small_windows(p.n, t, limits)? {
        let s = w.stats();
        lhs.add_term(exps(&[to_u32(s.alpha), to_u32(s.beta)]), BigInt::one());
    }
    Ok(formula(lhs, small_windows_formula(&space, p.n, t)))
}

fn snt_diagonal(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let t = p.require_t()?;
    let space = p.space(&["a"], &[None])?;
    let mut lhs = MultiPoly::zero(&space);
    for w in small_windows(p.n, t, limits)? {
        let s = w.stats();
        lhs.add_term(exps(&[to_u32(s.alpha + s.beta)]), BigInt::one());
    }
    let rhs = q_bracket(&space, 2 * t + 1, mono(&space, &[("a", 1)])).pow(p.n as u32);
    Ok(Outcome::compare(lhs, rhs))
}

/// `Σ_{σ ∈ C_n} u^{comaj(σ)} q^{lhp_C(σ)}` in the space `[u, q]`.
fn comaj_lhp_sum(space: &Arc<Space>, n: usize, limits: &Limits) -> Result<MultiPoly> {
    let mut table: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for sigma in enumerate_cn(n, limits)? {
        *table.entry((sigma.comaj(), sigma.lhp_c())).or_default() += 1;
    }
    Ok(MultiPoly::from_terms(
        space,
        table
            .into_iter()
            .map(|((u, q), c)| (exps(&[u as u32, q as u32]), BigInt::from(c))),
    ))
}

/// `Π_{i=0}^{n−1} (1 − u^{n−i} q^{2(i+1) + ⋯ + 2n})`.
fn ehrhart_denominator(space: &Arc<Space>, n: usize) -> MultiPoly {
    let n = n as u32;
    (0..n).fold(MultiPoly::one(space), |acc, i| {
        let q_exp = (i + 1..=n).map(|m| 2 * m).sum();
        &acc * &one_minus(space, mono(space, &[("u", n - i), ("q", q_exp)]))
    })
}

fn ehrhart(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let n = p.n;
    let qcap = p.q_cap_or((2 * n * n + 2 * n) as u32);
    let space = p.space(&["u", "q"], &[None, Some(qcap)])?;
    let mut series = MultiPoly::zero(&space);
    for w in windows_up_to(n, qcap, limits)? {
        let s = w.stats();
        series.add_term(exps(&[to_u32(s.beta), to_u32(s.inv_tilde)]), BigInt::one());
    }
    let lhs = &series * &ehrhart_denominator(&space, n);
    let rhs = comaj_lhp_sum(&space, n, limits)?;
    Ok(Outcome::compare(lhs, rhs))
}

/// Both sides multiplied by `Π (1 − u q^{n+i})`, which leaves polynomials.
fn comaj_lhp(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let n = p.n;
    let q_default = p.qcap;
    let space = p.space(&["u", "q"], &[None, q_default])?;
    let nu = n as u32;
    let cleared = (1..=nu).fold(MultiPoly::one(&space), |acc, i| {
        &acc * &one_minus(&space, mono(&space, &[("u", 1), ("q", nu + i)]))
    });
    let lhs = &comaj_lhp_sum(&space, n, limits)? * &cleared;
    let numerator = (1..=nu).fold(MultiPoly::one(&space), |acc, i| {
        &acc * &one_plus(&space, mono(&space, &[("u", 1), ("q", i)]))
    });
    let rhs = &numerator * &ehrhart_denominator(&space, n);
    Ok(Outcome::compare(lhs, rhs))
}

fn quad_lhp(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let n = p.n;
    let space = p.space(&["q"], &[None])?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for sigma in enumerate_cn(n, limits)? {
        *counts.entry(sigma.lhp_c()).or_default() += 1;
    }
    let lhs = MultiPoly::from_terms(&space, counts.into_iter().map(|(d, c)| (exps(&[d as u32]), BigInt::from(c))));
    let nu = n as u32;
    let rhs = (1..=nu).fold(MultiPoly::one(&space), |acc, k| {
        &acc * &q_bracket(&space, 2 * k, mono(&space, &[("q", 2 * (nu - k) + 1)]))
    });
    Ok(Outcome::compare(lhs, rhs))
}

fn comaj_product(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let n = p.n;
    let space = p.space(&["u"], &[None])?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for sigma in enumerate_cn(n, limits)? {
        *counts.entry(sigma.comaj()).or_default() += 1;
    }
    let lhs = MultiPoly::from_terms(&space, counts.into_iter().map(|(d, c)| (exps(&[d as u32]), BigInt::from(c))));
    let u = mono(&space, &[("u", 1)]);
    let rhs = (1..=n as u32).fold(MultiPoly::one(&space), |acc, i| {
        &(&acc * &one_plus(&space, u)) * &q_bracket(&space, i, u)
    });
    Ok(Outcome::compare(lhs, rhs))
}

fn type_a_lhp(p: &CheckParams, limits: &Limits) -> Result<Outcome> {
    let n = p.n;
    let space = p.space(&["q"], &[None])?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for pi in enumerate_sn(n, limits)? {
        *counts.entry(pi.lhp()).or_default() += 1;
    }
    let lhs = MultiPoly::from_terms(&space, counts.into_iter().map(|(d, c)| (exps(&[d as u32]), BigInt::from(c))));
    let nu = n as u32;
    let rhs = (1..=nu).fold(MultiPoly::one(&space), |acc, k| {
        &acc * &q_bracket(&space, k, mono(&space, &[("q", 2 * (nu - k) + 1)]))
    });
    Ok(Outcome::compare(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(id: IdentityId, p: CheckParams) -> IdentityCheck {
        run(id, &p, &Limits::default()).unwrap()
    }

    fn coefs(p: &MultiPoly, var: usize) -> Vec<i64> {
        p.coefficients_in(var).iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn names_round_trip() {
        for &id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert!("nope".parse::<IdentityId>().is_err());
        assert_eq!(IdentityId::ALL.len(), 16);
    }

    #[test]
    fn lecture_hall_small_cases() {
        let c = check(IdentityId::LectureHall, CheckParams::new(2).qcap(5));
        assert!(c.is_equal());
        assert_eq!(coefs(&c.lhs, 0), vec![1, 1, 1, 2, 2, 2]);
        let c = check(IdentityId::LectureHall, CheckParams::new(0).qcap(5));
        assert_eq!(c.lhs, MultiPoly::one(c.space()));
        assert!(c.is_equal());
        assert!(check(IdentityId::LectureHall, CheckParams::new(3).qcap(10)).is_equal());
    }

    #[test]
    fn bott_rank_one_by_hand() {
        let c = check(IdentityId::Bott, CheckParams::new(1).qcap(4));
        assert!(c.is_equal());
        assert_eq!(c.lhs.to_string(), "1 + b*q + a*b*q^2 + a*b^2*q^3 + a^2*b^2*q^4");
        assert!(check(IdentityId::Bott, CheckParams::new(2).qcap(8)).is_equal());
    }

    #[test]
    fn bott_specializes_to_lecture_hall() {
        let b = check(IdentityId::Bott, CheckParams::new(3).qcap(10));
        let l = check(IdentityId::LectureHall, CheckParams::new(3).qcap(10));
        let flat = b.lhs.map_exponents(l.space(), |e| exps(&[e.0[2]]));
        assert_eq!(flat, l.lhs);
    }

    #[test]
    fn refined_uv_rank_one() {
        let c = check(IdentityId::RefinedUv, CheckParams::new(1).qcap(4));
        assert!(c.is_equal());
        assert_eq!(c.lhs.to_string(), "1 + u*v*q + u^2*q^2 + u^3*v*q^3 + u^4*q^4");
        let two = check(IdentityId::RefinedUv, CheckParams::new(2).qcap(6));
        assert!(two.is_equal());
        let l = check(IdentityId::LectureHall, CheckParams::new(2).qcap(6));
        assert_eq!(two.lhs.map_exponents(l.space(), |e| exps(&[e.0[2]])), l.lhs);
    }

    #[test]
    fn truncated_bott_examples() {
        let c = check(IdentityId::TruncatedBott, CheckParams::new(3).k(0).qcap(8));
        assert_eq!(c.lhs, MultiPoly::one(c.space()));
        assert!(c.is_equal());
        let c = check(IdentityId::TruncatedBott, CheckParams::new(2).k(1).qcap(8));
        assert!(c.is_equal());
        assert!(check(IdentityId::TruncatedBottSum, CheckParams::new(2).qcap(8)).is_equal());
        assert!(run(IdentityId::TruncatedBott, &CheckParams::new(2).k(3), &Limits::default()).is_err());
        assert!(run(IdentityId::TruncatedBott, &CheckParams::new(2), &Limits::default()).is_err());
    }

    #[test]
    fn truncated_bott_at_unit_a_b() {
        // b = a = 1 collapses to q^{C(k+1,2)} [n choose k]_q (−q^{n−k+1};q)_k / (q^{2n−k+1};q)_k
        let c = check(IdentityId::TruncatedBott, CheckParams::new(3).k(2).qcap(10));
        let space = Space::new(&["q"], &[Some(10)]).unwrap();
        let flat = c.lhs.map_exponents(&space, |e| exps(&[e.0[2]]));
        let q = mono(&space, &[("q", 1)]);
        let expected = &(&(&MultiPoly::monomial(&space, mono(&space, &[("q", 3)])) * &q_binomial(&space, 3, 2, q).unwrap())
            * &pochhammer(&space, mono(&space, &[("q", 2)]).negated(), q, 2))
            * &pochhammer_inverse(&space, mono(&space, &[("q", 5)]), q, 2).unwrap();
        assert_eq!(flat, expected);
    }

    #[test]
    fn odd_even_examples() {
        let c = check(IdentityId::OddEven, CheckParams::new(1).cap("x", 6).cap("y", 6));
        assert!(c.is_equal());
        assert_eq!(c.lhs.to_string(), "1 + x + x^2 + x^3 + x^4 + x^5 + x^6");
        assert!(check(IdentityId::OddEven, CheckParams::new(2).cap("x", 6).cap("y", 6)).is_equal());
        assert!(check(IdentityId::TruncatedOddEven, CheckParams::new(2).k(1).cap("x", 6).cap("y", 6)).is_equal());
    }

    #[test]
    fn odd_even_at_x_equals_y_is_lecture_hall() {
        let c = check(IdentityId::OddEven, CheckParams::new(3).cap("x", 8).cap("y", 8));
        let l = check(IdentityId::LectureHall, CheckParams::new(3).qcap(8));
        let diag = c.lhs.map_exponents(l.space(), |e| exps(&[e.0[0] + e.0[1]]));
        assert_eq!(diag, l.lhs);
    }

    #[test]
    fn truncated_odd_even_matches_for_every_k() {
        for n in 0..=3 {
            for k in 0..=n {
                let c = check(IdentityId::TruncatedOddEven, CheckParams::new(n).k(k).cap("x", 8).cap("y", 8));
                assert!(c.is_equal(), "n = {n}, k = {k}: {:?}", c.verdict);
            }
        }
    }

    /// The numerator `x^{⌊k/2⌋+1} y^{⌈k/2⌉} [·]_{xy}` read literally does not
    /// even give 1 at `k = 0`, where only the identity window contributes.
    #[test]
    fn literal_truncated_odd_even_numerator_fails() {
        let space = Space::new(&["x", "y"], &[Some(6), Some(6)]).unwrap();
        let literal = |n: usize, k: usize| {
            let (fl, cl) = ((k / 2) as u32, k.div_ceil(2) as u32);
            let lead = mono(&space, &[("x", fl + 1), ("y", cl)]);
            &MultiPoly::monomial(&space, lead)
                * &q_binomial(&space, n as u32 - cl, fl, mono(&space, &[("x", 1), ("y", 1)])).unwrap()
        };
        let lim = Limits::default();
        for (n, k) in [(2, 0), (2, 1), (3, 1)] {
            let series = odd_even_lhs(&space, n, 12, Some(k), &lim).unwrap();
            let cleared = &series * &truncated_odd_even_denominator(&space, n, k).unwrap();
            assert_ne!(cleared, literal(n, k), "n = {n}, k = {k}");
            assert_eq!(cleared, truncated_odd_even_numerator(&space, n, k).unwrap());
        }
    }

    #[test]
    fn box_counts() {
        let c = check(IdentityId::Box, CheckParams::new(2).j(1).k(0));
        assert!(c.is_equal());
        assert_eq!(c.lhs.to_string(), "4");
        assert_eq!(check(IdentityId::Box, CheckParams::new(3).j(0).k(0)).lhs.to_string(), "1");
        let c = check(IdentityId::Box, CheckParams::new(3).j(2).k(2));
        assert_eq!((c.lhs.to_string(), c.is_equal()), ("48".to_string(), true));
    }

    #[test]
    fn small_window_examples() {
        let c = check(IdentityId::Snt, CheckParams::new(1).t(1));
        assert_eq!((c.lhs.to_string(), c.is_equal()), ("3".to_string(), true));
        let c = check(IdentityId::Snt, CheckParams::new(3).t(0));
        assert_eq!(c.lhs.to_string(), "1");
        assert_eq!(check(IdentityId::Snt, CheckParams::new(2).t(1)).lhs.to_string(), "9");

        let c = check(IdentityId::SntAb, CheckParams::new(1).t(1));
        assert!(c.is_equal());
        assert_eq!(c.lhs.to_string(), "1 + b + a*b");
        let c = check(IdentityId::SntAb, CheckParams::new(3).t(0));
        assert_eq!(c.lhs.to_string(), "1");
        assert!(c.is_equal());
        let c = check(IdentityId::SntDiagonal, CheckParams::new(2).t(1));
        assert!(c.is_equal());
        assert_eq!(c.rhs.to_string(), "1 + 2*a + 3*a^2 + 2*a^3 + a^4");
    }

    #[test]
    fn finite_polynomial_identities() {
        let c = check(IdentityId::QuadLhp, CheckParams::new(2));
        assert!(c.is_equal());
        assert_eq!(coefs(&c.lhs, 0), vec![1, 1, 1, 2, 1, 1, 1]);
        assert_eq!(check(IdentityId::QuadLhp, CheckParams::new(1)).lhs.to_string(), "1 + q");
        assert_eq!(check(IdentityId::ComajProduct, CheckParams::new(1)).lhs.to_string(), "1 + u");
        let c = check(IdentityId::TypeALhp, CheckParams::new(3));
        assert!(c.is_equal());
        assert_eq!(coefs(&c.lhs, 0), vec![1, 1, 1, 1, 1, 1]);
        for n in 0..=3 {
            assert!(check(IdentityId::ComajLhp, CheckParams::new(n)).is_equal());
            assert!(check(IdentityId::Ehrhart, CheckParams::new(n)).is_equal());
            assert!(check(IdentityId::ComajProduct, CheckParams::new(n)).is_equal());
        }
    }

    #[test]
    fn mismatch_names_the_first_difference() {
        let space = Space::polynomial(&["q"]).unwrap();
        let a = MultiPoly::from_terms(&space, [(exps(&[0]), BigInt::from(1)), (exps(&[2]), BigInt::from(1))]);
        let b = MultiPoly::from_terms(&space, [(exps(&[0]), BigInt::from(1)), (exps(&[1]), BigInt::from(1))]);
        match compare("result", &a, &b) {
            Verdict::Mismatch { exps: e, lhs, rhs, .. } => {
                assert_eq!(e, exps(&[1]));
                assert_eq!((lhs, rhs), (BigInt::from(0), BigInt::from(1)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reports_carry_decimal_strings() {
        let c = check(IdentityId::QuadLhp, CheckParams::new(2));
        let r = c.report();
        assert_eq!(r.id, "quadlhp");
        assert_eq!(r.verdict, "equal");
        assert_eq!(r.params["n"], "2");
        assert_eq!(r.caps["q"], None);
        assert!(r.mismatch.is_none());
        assert_eq!(r.lhs_terms.len(), 7);
        assert_eq!(r.lhs_terms[3].coef, "2");
    }

    #[test]
    fn unknown_cap_variable_is_rejected() {
        let p = CheckParams::new(2).cap("z", 3);
        assert!(run(IdentityId::LectureHall, &p, &Limits::default()).is_err());
    }

    #[test]
    fn rank_cap_applies() {
        let lim = Limits::with_max_rank(3);
        assert!(matches!(
            run(IdentityId::QuadLhp, &CheckParams::new(4), &lim),
            Err(Error::ResourceCap(_))
        ));
    }
}
