//! Sparse polynomials in up to three variables with big-integer coefficients.
//!
//! Every polynomial lives in a [`Space`] naming its variables and giving an
//! optional truncation degree per variable. Arithmetic discards any term that
//! exceeds a cap, which makes capped spaces rings of truncated power series.

mod qanalog;

pub use qanalog::{falling_pochhammer, pochhammer, pochhammer_inverse, q_binomial, q_bracket, q_factorial};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 3;

/// Variable names and per-variable truncation degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Space {
    vars: Vec<String>,
    caps: Vec<Option<u32>>,
}

impl Space {
    pub fn new(vars: &[&str], caps: &[Option<u32>]) -> Result<Arc<Space>> {
        if vars.len() > MAX_VARS {
            return Err(Error::invalid("space", format!("at most {MAX_VARS} variables")));
        }
        if vars.len() != caps.len() {
            return Err(Error::LengthMismatch {
                expected: vars.len(),
                found: caps.len(),
            });
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || vars[..i].contains(v) {
                return Err(Error::invalid("space", format!("bad or repeated variable name {v:?}")));
            }
        }
        Ok(Arc::new(Space {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            caps: caps.to_vec(),
        }))
    }

    /// A space without caps, i.e. the polynomial ring.
    pub fn polynomial(vars: &[&str]) -> Result<Arc<Space>> {
        Space::new(vars, &vec![None; vars.len()])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn caps(&self) -> &[Option<u32>] {
        &self.caps
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn uncapped(&self) -> Arc<Space> {
        Arc::new(Space {
            vars: self.vars.clone(),
            caps: vec![None; self.vars.len()],
        })
    }

    pub fn is_uncapped(&self) -> bool {
        self.caps.iter().all(Option::is_none)
    }

    pub fn admits(&self, e: &Exponents) -> bool {
        let vars_ok = e.0[self.vars.len()..].iter().all(|&x| x == 0);
        vars_ok && self.caps.iter().zip(e.0).all(|(cap, x)| cap.is_none_or(|c| x <= c))
    }

    /// Monomial `Π name^exp` with coefficient 1.
    pub fn monomial(&self, powers: &[(&str, u32)]) -> Result<Monomial> {
        let mut exps = [0u32; MAX_VARS];
        for &(name, p) in powers {
            let i = self
                .var_index(name)
                .ok_or_else(|| Error::invalid("monomial", format!("unknown variable {name:?}")))?;
            exps[i] += p;
        }
        Ok(Monomial::new(Exponents(exps)))
    }

    fn same_vars(&self, other: &Space) -> bool {
        self.vars == other.vars
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Exponents(pub [u32; MAX_VARS]);

impl Exponents {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn checked_add(&self, other: &Exponents) -> Option<Exponents> {
        let mut out = self.0;
        for (x, &y) in out.iter_mut().zip(&other.0) {
            *x = x.checked_add(y)?;
        }
        Some(Exponents(out))
    }

    pub fn checked_sub(&self, other: &Exponents) -> Option<Exponents> {
        let mut out = self.0;
        for (x, &y) in out.iter_mut().zip(&other.0) {
            *x = x.checked_sub(y)?;
        }
        Some(Exponents(out))
    }

    pub fn scaled(&self, k: u32) -> Option<Exponents> {
        let mut out = self.0;
        for x in out.iter_mut() {
            *x = x.checked_mul(k)?;
        }
        Some(Exponents(out))
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A single term `coef · x^e`, used as a base for q-analogs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: Exponents,
    pub coef: i64,
}

impl Monomial {
    pub fn new(exps: Exponents) -> Self {
        Monomial { exps, coef: 1 }
    }

    pub fn one() -> Self {
        Monomial::new(Exponents::default())
    }

    pub fn negated(self) -> Self {
        Monomial {
            coef: -self.coef,
            ..self
        }
    }

    pub fn times(self, other: Monomial) -> Self {
        Monomial {
            exps: self.exps.checked_add(&other.exps).expect("exponent overflow"),
            coef: self.coef * other.coef,
        }
    }

    pub fn pow(self, k: u32) -> Self {
        Monomial {
            exps: self.exps.scaled(k).expect("exponent overflow"),
            coef: self.coef.pow(k),
        }
    }
}

/// One JSON term: `{"exps": [...], "coef": "..."}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coef: String,
}

/// Sparse polynomial with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    space: Arc<Space>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiPoly {
    pub fn zero(space: &Arc<Space>) -> Self {
        MultiPoly {
            space: Arc::clone(space),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: &Arc<Space>) -> Self {
        MultiPoly::constant(space, 1)
    }

    pub fn constant(space: &Arc<Space>, c: i64) -> Self {
        let mut p = MultiPoly::zero(space);
        p.add_term(Exponents::default(), BigInt::from(c));
        p
    }

    pub fn monomial(space: &Arc<Space>, m: Monomial) -> Self {
        let mut p = MultiPoly::zero(space);
        p.add_term(m.exps, BigInt::from(m.coef));
        p
    }

    pub fn variable(space: &Arc<Space>, name: &str) -> Result<Self> {
        Ok(MultiPoly::monomial(space, space.monomial(&[(name, 1)])?))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeats and dropping over-cap terms.
    pub fn from_terms(space: &Arc<Space>, terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = MultiPoly::zero(space);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Coefficients of a univariate polynomial in order of degree.
    pub fn coefficients_in(&self, var: usize) -> Vec<BigInt> {
        let top = self.terms.keys().map(|e| e.0[var]).max().map_or(0, |d| d as usize + 1);
        let mut out = vec![BigInt::zero(); top];
        for (e, c) in &self.terms {
            out[e.0[var] as usize] += c;
        }
        out
    }

    /// Sum of all coefficients.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Adds `c · x^e` in place; ignored when `e` exceeds a cap.
    pub fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() || !self.space.admits(&e) {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_space(&self, other: &MultiPoly) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        Ok(out)
    }

    /// Product with over-cap partial products skipped.
    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_space(other)?;
        let mut out = MultiPoly::zero(&self.space);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                if let Some(e) = e1.checked_add(e2) {
                    if self.space.admits(&e) {
                        out.add_term(e, c1 * c2);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(&self.space);
        }
        MultiPoly {
            space: Arc::clone(&self.space),
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> MultiPoly {
        let k = BigInt::from(m.coef);
        let mut out = MultiPoly::zero(&self.space);
        for (e, c) in &self.terms {
            if let Some(sum) = e.checked_add(&m.exps) {
                out.add_term(sum, c * &k);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.space);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Moves the polynomial into another space with the same variables,
    /// dropping terms beyond the new caps.
    pub fn recap(&self, space: &Arc<Space>) -> Result<MultiPoly> {
        if !self.space.same_vars(space) {
            return Err(Error::SpaceMismatch);
        }
        Ok(MultiPoly::from_terms(space, self.terms.iter().map(|(e, c)| (*e, c.clone()))))
    }

    /// Substitutes monomials for variables: each exponent vector is sent to
    /// `f(e)` in `space`, then truncated there.
    pub fn map_exponents(&self, space: &Arc<Space>, f: impl Fn(&Exponents) -> Exponents) -> MultiPoly {
        MultiPoly::from_terms(space, self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// The smallest exponent (graded lex) where the two polynomials differ,
    /// with both coefficients.
    pub fn first_difference(&self, other: &MultiPoly) -> Option<(Exponents, BigInt, BigInt)> {
        let mut keys: Vec<&Exponents> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|e| {
            let (a, b) = (self.coeff(e), other.coeff(e));
            (a != b).then_some((*e, a, b))
        })
    }

    /// `self / d` in the polynomial ring, by repeated elimination of the
    /// leading term. The quotient is truncated to this space's caps.
    pub fn exact_div(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.check_space(d)?;
        let ring = self.space.uncapped();
        let (lead_e, lead_c) = match d.terms.iter().next_back() {
            Some((e, c)) => (*e, c.clone()),
            None => return Err(Error::NotDivisible),
        };
        let divisor = d.recap(&ring)?;
        let mut rem = self.recap(&ring)?;
        let mut quotient = MultiPoly::zero(&ring);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let shift = e.checked_sub(&lead_e).ok_or(Error::NotDivisible)?;
            if !(&c % &lead_c).is_zero() {
                return Err(Error::NotDivisible);
            }
            let factor = c / &lead_c;
            for (de, dc) in &divisor.terms {
                let target = de.checked_add(&shift).expect("exponent overflow");
                rem.add_term(target, -(dc * &factor));
            }
            quotient.add_term(shift, factor);
        }
        quotient.recap(&self.space)
    }

    /// `1 / (1 − m)` expanded as `Σ m^k` under the caps.
    pub fn geom_inverse(space: &Arc<Space>, m: Monomial) -> Result<MultiPoly> {
        let grows = space
            .caps
            .iter()
            .zip(m.exps.0)
            .any(|(cap, x)| cap.is_some() && x > 0);
        if !grows {
            if m.coef == 0 {
                return Ok(MultiPoly::one(space));
            }
            return Err(Error::Precondition(format!(
                "1/(1 - {}) does not terminate under the caps",
                MultiPoly::monomial(&space.uncapped(), m)
            )));
        }
        let mut out = MultiPoly::zero(space);
        let mut e = Exponents::default();
        let mut c = BigInt::one();
        let step = BigInt::from(m.coef);
        while space.admits(&e) {
            out.add_term(e, c.clone());
            e = e.checked_add(&m.exps).expect("exponent overflow");
            c *= &step;
        }
        Ok(out)
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        let n = self.space.vars.len();
        self.terms
            .iter()
            .map(|(e, c)| TermJson {
                exps: e.0[..n].to_vec(),
                coef: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(space: &Arc<Space>, terms: &[TermJson]) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(space);
        for t in terms {
            if t.exps.len() != space.vars.len() {
                return Err(Error::LengthMismatch {
                    expected: space.vars.len(),
                    found: t.exps.len(),
                });
            }
            let mut e = [0u32; MAX_VARS];
            e[..t.exps.len()].copy_from_slice(&t.exps);
            let c: BigInt = t.coef.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coef)))?;
            out.add_term(Exponents(e), c);
        }
        Ok(out)
    }

    fn format_monomial(&self, e: &Exponents) -> String {
        let parts: Vec<String> = self
            .space
            .vars
            .iter()
            .zip(e.0)
            .filter(|(_, x)| *x > 0)
            .map(|(v, x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono = self.format_monomial(e);
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), magnitude.is_one()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{magnitude}*{mono}")?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// # Panics
        ///
        /// Panics when the operands live in different spaces.
        impl ops::$trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("operands share a space")
            }
        }

        impl ops::$trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl ops::Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }
}
