//! Exact left- and right-hand sides of the q-side claims.

use super::terms::{one_minus, one_plus, FracSum};
use super::{ClaimId, ClaimKind, ClaimParams};
use crate::dense::IntPoly;
use crate::error::{Error, Result};
use crate::numtheory::jacobi;
use crate::poly::{LaurentPoly, Rational};
use crate::qcomb::{pochhammer_int, qbinom_int, MonomialArg};
use crate::ratfun::RatFun;

pub(crate) fn sign(x: i64) -> i64 {
    if x.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `num / den`, which must be an integer.
pub(crate) fn exact_exp(num: i64, den: i64) -> Result<i64> {
    if num.rem_euclid(den) != 0 {
        return Err(Error::NonIntegralExponent { numerator: num, denominator: den });
    }
    Ok(num / den)
}

pub(crate) fn c2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn mono(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(Rational::from_integer(c.into()), e)
}

/// `sum_{k=lo}^{hi} f(k)` with the signed convention `sum_{lo}^{hi} = -sum_{hi+1}^{lo-1}` when `hi < lo - 1`.
pub fn signed_range_sum(lo: i64, hi: i64, mut f: impl FnMut(i64) -> LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    if hi >= lo {
        for k in lo..=hi {
            acc += &f(k);
        }
    } else {
        for k in hi + 1..lo {
            acc -= &f(k);
        }
    }
    acc
}

fn plain_range_sum(lo: i64, hi: i64, mut f: impl FnMut(i64) -> LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for k in lo..=hi {
        acc += &f(k);
    }
    acc
}

/// Checks the parameter domain of a q-side claim; the error text explains a SKIP.
pub(crate) fn check_domain(claim: ClaimId, params: &ClaimParams) -> std::result::Result<(), String> {
    use ClaimId::*;
    let n = params.n.ok_or("missing n")?;
    if n < 1 {
        return Err(format!("n = {n} < 1"));
    }
    let d = params.d.unwrap_or(0);
    if claim == QcLp {
        if d != 0 {
            return Err("QC-LP has d = 0".into());
        }
    } else if params.d.is_none() {
        return Err("missing d".into());
    }
    if let Some(e) = params.e {
        if e < 1 {
            return Err(format!("modulus power {e} < 1"));
        }
    }
    let (lo, hi) = match claim {
        // d = n is an extended check of the base case S(n, n) = 0.
        IdT11_1 | IdT11_2 => (0, n),
        _ => claim.d_range_q(n).ok_or_else(|| format!("{claim} has no q-side domain"))?,
    };
    if claim.kind() == ClaimKind::QCongruence && claim != QcLp && n < 2 {
        return Err("modulus Phi_1 is not checked for this claim".into());
    }
    if d < lo || d > hi {
        return Err(format!("d = {d} outside [{lo}, {hi}]"));
    }
    Ok(())
}

fn nd(claim: ClaimId, params: &ClaimParams) -> Result<(i64, i64)> {
    check_domain(claim, params).map_err(Error::OutOfDomain)?;
    Ok((params.n.unwrap(), params.d.unwrap_or(0)))
}

/// Left-hand side of a q-side claim as an exact rational function.
pub fn build_lhs(claim: ClaimId, params: &ClaimParams) -> Result<RatFun> {
    use ClaimId::*;
    if !matches!(claim.kind(), ClaimKind::Identity | ClaimKind::QCongruence) {
        return Err(Error::OutOfDomain(format!("{claim} has no q-side sums")));
    }
    let (n, d) = nd(claim, params)?;
    Ok(match claim {
        IdT11_1 | QcC12_1 => RatFun::from_poly(t11_lhs(n, d, false)?.into_laurent()),
        IdT11_2 | QcC12_2 => RatFun::from_poly(t11_lhs(n, d, true)?.into_laurent()),
        IdT14_1 => t14_lhs(n, d, false)?,
        IdT14_2 => t14_lhs(n, d, true)?,
        QcC15_1 => &RatFun::from_poly(q_int(d)) * &t14_lhs(n, d, false)?,
        QcC15_2 => &RatFun::from_poly(q_int(d)) * &t14_lhs(n, d, true)?,
        QcGz1 => RatFun::from_poly(gz_lhs(n, d, false)?.into_laurent()),
        QcGz2 => RatFun::from_poly(gz_lhs(n, d, true)?.into_laurent()),
        QcTau | QcLp => RatFun::from_poly(tau_lhs(n, d)?.into_laurent()),
        _ => unreachable!(),
    })
}

/// Right-hand side of a q-side claim as an exact rational function.
pub fn build_rhs(claim: ClaimId, params: &ClaimParams) -> Result<RatFun> {
    use ClaimId::*;
    if !matches!(claim.kind(), ClaimKind::Identity | ClaimKind::QCongruence) {
        return Err(Error::OutOfDomain(format!("{claim} has no q-side sums")));
    }
    let (n, d) = nd(claim, params)?;
    match claim {
        IdT11_1 => t11_1_rhs(n, d),
        IdT11_2 => t11_2_rhs(n, d),
        IdT14_1 => t14_1_rhs(n, d),
        IdT14_2 => t14_2_rhs(n, d),
        QcC12_1 => Ok(RatFun::from_poly(c12_1_rhs(n, d)?)),
        QcC12_2 => Ok(RatFun::from_poly(plain_range_sum(d + 1, n, |k| mono(1, c2(n) + c2(k) - d * d)))),
        QcC15_1 => Ok(RatFun::from_poly(c15_1_rhs_with(n, d, dyn_signed)?)),
        QcC15_2 => Ok(RatFun::from_poly(mono(if n % 2 == 1 { 2 } else { -2 }, -c2(d)))),
        QcGz1 => gz_rhs(n, d, false),
        QcGz2 => gz_rhs(n, d, true),
        QcTau => {
            let j = jacobi(n - d, 3)?;
            if j == 0 {
                return Ok(RatFun::zero());
            }
            let r = 2 * (n - d) / 3;
            Ok(RatFun::from_poly(mono(j as i64, exact_exp(3 * r * (r + 1), 2)? + d * (2 * r + 1))))
        }
        QcLp => {
            let j = jacobi(n, 3)?;
            if j == 0 {
                return Ok(RatFun::zero());
            }
            Ok(RatFun::from_poly(mono(j as i64, exact_exp(n * n - 1, 3)?)))
        }
        _ => unreachable!(),
    }
}

pub(crate) fn q_int(k: i64) -> LaurentPoly {
    crate::qcomb::q_int(k).expect("nonnegative")
}

/// `(-q^s; q)_m` repeated `times` times onto `acc`.
fn mul_neg_poch(acc: &mut IntPoly, s: i64, m: i64, times: usize) {
    for i in 0..m {
        for _ in 0..times {
            acc.mul_binomial(1, s + i);
        }
    }
}

/// `sum_{k=0}^{n-1} q^k [2k, k+d] (-q^{k+1}; q)_{n-1-k}^{1 or 2}`, any `d >= 0`.
pub(crate) fn t11_lhs(n: i64, d: i64, squared: bool) -> Result<IntPoly> {
    let mut acc = IntPoly::zero();
    for k in d.max(0)..n {
        let mut term = qbinom_int(2 * k, k + d)?;
        term.shift(k);
        mul_neg_poch(&mut term, k + 1, n - 1 - k, if squared { 2 } else { 1 });
        acc.add_assign(&term);
    }
    Ok(acc)
}

/// `sum_k q^k [2k, k+d] (-q^{k+1}; q)_{n-k}^{1 or 2} / [k]`, with `k` up to `n-1`
/// for the first form and `n` for the squared one.
pub(crate) fn t14_lhs(n: i64, d: i64, squared: bool) -> Result<RatFun> {
    let upper = if squared { n } else { n - 1 };
    let mut sum = FracSum::new();
    for k in d.max(1)..=upper {
        let mut term = qbinom_int(2 * k, k + d)?;
        term.shift(k);
        mul_neg_poch(&mut term, k + 1, n - k, if squared { 2 } else { 1 });
        term.mul_binomial(-1, 1);
        sum.push(term, &[one_minus(k)]);
    }
    sum.into_ratfun()
}

fn gz_lhs(n: i64, d: i64, second: bool) -> Result<IntPoly> {
    let mut acc = IntPoly::zero();
    for k in d.max(0)..n {
        let mut term = qbinom_int(2 * k, k + d)?;
        term.shift(-exact_exp(k * (k + 3), 2)?);
        let start = if second { k } else { k + 1 };
        let poch = pochhammer_int(MonomialArg::neg_q_pow(start), n - 1 - k)?;
        acc.add_assign(&term.mul(&poch));
    }
    Ok(acc)
}

pub(crate) fn tau_lhs(n: i64, d: i64) -> Result<IntPoly> {
    let mut acc = IntPoly::zero();
    for k in d.max(0)..n {
        let mut term = qbinom_int(2 * k, k + d)?;
        term.shift(k);
        acc.add_assign(&term);
    }
    Ok(acc)
}

fn t11_1_rhs(n: i64, d: i64) -> Result<RatFun> {
    let mut sum = FracSum::new();
    // k = 0 carries the factor 1 - q^0 = 0
    let mut k = (n - d).rem_euclid(2);
    while k <= n - d {
        if k > 0 {
            let e = exact_exp(3 * ((n - k) * (n - k) - d * d), 4)? + n - k;
            let mut term = qbinom_int(2 * n, k)?;
            term.scale(&sign((n - d - k) / 2).into());
            term.shift(e);
            term.mul_binomial(-1, k);
            term.mul_binomial(1, n - k + 1);
            sum.push(term, &[one_minus(2 * n - k + 1), one_plus(n)]);
        }
        k += 2;
    }
    sum.into_ratfun()
}

fn t11_2_rhs(n: i64, d: i64) -> Result<RatFun> {
    let mut sum = FracSum::new();
    for k in d + 1..=n {
        for j in k + 1..=n + 1 {
            let e = exact_exp(j * j - 3 * j + k * k - k, 2)? - d * d + 1;
            let mut term = qbinom_int(2 * n, n - j + 1)?;
            term.shift(e);
            term.mul_binomial(1, j - 1);
            sum.push(term, &[one_plus(n)]);
        }
    }
    sum.into_ratfun()
}

fn t14_1_rhs(n: i64, d: i64) -> Result<RatFun> {
    let mut sum = FracSum::new();
    for k in 1..=(n + 1 - d).div_euclid(2) {
        let mut term = qbinom_int(2 * n, n - d - 2 * k + 1)?;
        // leading minus and (-1)^k
        term.scale(&(-sign(k)).into());
        term.shift(3 * k * k + (3 * d - 5) * k - 2 * d + 2);
        // [2d+4k-2] / ([d][n]) = (1 - q^{2d+4k-2})(1 - q) / ((1 - q^d)(1 - q^n))
        term.mul_binomial(-1, 2 * d + 4 * k - 2);
        term.mul_binomial(-1, 1);
        sum.push(term, &[one_minus(d), one_minus(n)]);
    }
    sum.into_ratfun()
}

fn t14_2_rhs(n: i64, d: i64) -> Result<RatFun> {
    let mut sum = FracSum::new();
    for k in d..n {
        let mut term = qbinom_int(2 * n + 1, n - k)?;
        term.shift(c2(k + 1) - c2(d));
        term.mul_binomial(-1, 1);
        sum.push(term, &[one_minus(d)]);
    }
    let mut last = IntPoly::monomial(1, c2(n + 1) - c2(d));
    last.mul_binomial(-1, 1);
    sum.push(last, &[one_minus(d)]);
    sum.into_ratfun()
}

fn c12_1_rhs(n: i64, d: i64) -> Result<LaurentPoly> {
    if (n - d).rem_euclid(2) == 0 {
        return Ok(LaurentPoly::zero());
    }
    let e = exact_exp(3 * (n - 1) * (n - 1) - 3 * d * d, 4)? - 1;
    if (n - d - 1).rem_euclid(4) == 0 {
        Ok(mono(1, e))
    } else {
        debug_assert_eq!((n - d + 1).rem_euclid(4), 0);
        Ok(mono(-1, e))
    }
}

type RangeSum = fn(i64, i64, &mut dyn FnMut(i64) -> LaurentPoly) -> LaurentPoly;

fn dyn_signed(lo: i64, hi: i64, f: &mut dyn FnMut(i64) -> LaurentPoly) -> LaurentPoly {
    signed_range_sum(lo, hi, f)
}

#[cfg(test)]
fn dyn_plain(lo: i64, hi: i64, f: &mut dyn FnMut(i64) -> LaurentPoly) -> LaurentPoly {
    plain_range_sum(lo, hi, f)
}

/// Both branches of the `[d] * (...)` congruence, with a pluggable convention for the inner range.
pub(crate) fn c15_1_rhs_with(n: i64, d: i64, range: RangeSum) -> Result<LaurentPoly> {
    let mut inner = |k: i64| {
        let mut t = mono(sign(k), k * k + (d - 2) * k + 1);
        t = &t + &t.shift(d + 2 * k - 1);
        t
    };
    let tail = &mono(2, -c2(n) - c2(d)) * &(&LaurentPoly::one() + &LaurentPoly::q_pow(d + 1));
    let lead = -c2(n + 1) - c2(d + 1);
    if (n - d).rem_euclid(2) != 0 {
        let u = exact_exp(n + 1 - d, 2)?;
        let s = range(2, u - 1, &mut inner);
        let mid = mono(-2 * sign(u), -exact_exp(n * n + 3 * d * d - 2 * d - 1, 4)?);
        Ok(&(&(&mono(-2, lead) * &s) + &mid) + &tail)
    } else {
        let u = exact_exp(n - d, 2)?;
        let s = range(2, u - 1, &mut inner);
        let e = exact_exp(-n * n - 2 * n - 3 * d * d + 2 * d, 4)?;
        let mid = &mono(2 * sign(u), e) * &LaurentPoly::from_i64_coeffs(&[1, 1]);
        Ok(&(&(&mono(2, lead) * &s) + &mid) - &tail)
    }
}

fn gz_rhs(n: i64, d: i64, second: bool) -> Result<RatFun> {
    if (n - d).rem_euclid(2) == 0 {
        let s = sign(exact_exp(n + d - 2, 2)?);
        let top = if second { 9 } else { 5 };
        let e = exact_exp(top - (n - d + 1) * (n - d + 1), 4)?;
        let mut num = IntPoly::monomial(s, e);
        num.mul_binomial(-1, n - d);
        if second {
            FracSum::single(num, &[one_plus(1)])
        } else {
            Ok(RatFun::from_poly(num.into_laurent()))
        }
    } else {
        let s = sign(exact_exp(n + d - 1, 2)?);
        let e = exact_exp(5 - (n - d) * (n - d), 4)?;
        Ok(RatFun::from_poly(mono(s, e)))
    }
}
