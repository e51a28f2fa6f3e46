//! q-analogs with monomial bases.

use std::sync::Arc;

use super::{Exponents, Monomial, MultiPoly, Space};
use crate::error::{Error, Result};

/// `[k]_m = 1 + m + ⋯ + m^{k−1}`.
pub fn q_bracket(space: &Arc<Space>, k: u32, base: Monomial) -> MultiPoly {
    let mut out = MultiPoly::zero(space);
    let mut term = Monomial::one();
    for _ in 0..k {
        out.add_term(term.exps, term.coef.into());
        term = term.times(base);
    }
    out
}

/// `[k]_m! = [1]_m [2]_m ⋯ [k]_m`.
pub fn q_factorial(space: &Arc<Space>, k: u32, base: Monomial) -> MultiPoly {
    (1..=k).fold(MultiPoly::one(space), |acc, i| &acc * &q_bracket(space, i, base))
}

/// Gaussian binomial `[n choose k]_m`, computed as an exact quotient of
/// factorials in the polynomial ring and then truncated.
pub fn q_binomial(space: &Arc<Space>, n: u32, k: u32, base: Monomial) -> Result<MultiPoly> {
    if k > n {
        return Ok(MultiPoly::zero(space));
    }
    let ring = space.uncapped();
    let num = q_factorial(&ring, n, base);
    let den = &q_factorial(&ring, k, base) * &q_factorial(&ring, n - k, base);
    num.exact_div(&den)?.recap(space)
}

/// `(a; m)_count = Π_{j<count} (1 − a m^j)`.
pub fn pochhammer(space: &Arc<Space>, a: Monomial, step: Monomial, count: u32) -> MultiPoly {
    let mut out = MultiPoly::one(space);
    let mut factor = a;
    for _ in 0..count {
        out = &out - &out.mul_monomial(factor);
        factor = factor.times(step);
    }
    out
}

/// `1 / (a; m)_count` as a truncated series.
pub fn pochhammer_inverse(space: &Arc<Space>, a: Monomial, step: Monomial, count: u32) -> Result<MultiPoly> {
    let mut out = MultiPoly::one(space);
    let mut factor = a;
    for _ in 0..count {
        out = &out * &MultiPoly::geom_inverse(space, factor)?;
        factor = factor.times(step);
    }
    Ok(out)
}

/// `(a; m^{−1})_count = Π_{j<count} (1 − a m^{−j})`, defined when every
/// factor keeps nonnegative exponents.
pub fn falling_pochhammer(space: &Arc<Space>, a: Monomial, step: Monomial, count: u32) -> Result<MultiPoly> {
    if count == 0 {
        return Ok(MultiPoly::one(space));
    }
    let reach = step.exps.scaled(count - 1).expect("exponent overflow");
    if a.exps.checked_sub(&reach).is_none() {
        return Err(Error::Precondition(format!(
            "falling Pochhammer with {count} factors leaves the polynomial ring"
        )));
    }
    let mut out = MultiPoly::one(space);
    for j in 0..count {
        let shift = step.exps.scaled(j).expect("exponent overflow");
        let exps: Exponents = a.exps.checked_sub(&shift).expect("checked above");
        out = &out - &out.mul_monomial(Monomial { exps, coef: a.coef });
    }
    Ok(out)
}
