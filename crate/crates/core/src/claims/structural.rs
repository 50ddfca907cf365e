//! Lemma checks modulo `Phi_n` and exact three-term recurrences of the sums.

use num_bigint::BigInt;

use super::builders::{t11_lhs, t14_lhs};
use super::terms::{one_minus, one_plus, Binom, FracSum};
use super::{ClaimId, ClaimParams, Outcome, Witness};
use crate::cyclotomic::{CyclotomicCache, ResidueRing};
use crate::dense::IntPoly;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::qcomb::{binomial, qbinom_int};
use crate::ratfun::RatFun;

fn get(v: Option<i64>, name: &str) -> std::result::Result<i64, String> {
    v.ok_or_else(|| format!("missing {name}"))
}

/// `(lhs q-binomial (t, b), rhs integer multiplier, rhs q-binomial (t', b'))`.
fn lemma_sides(claim: ClaimId, params: &ClaimParams) -> std::result::Result<(i64, (i64, i64), BigInt, (i64, i64)), String> {
    let n = get(params.n, "n")?;
    if n < 2 {
        return Err(format!("n = {n} < 2"));
    }
    let int = |x: i64| BigInt::from(x);
    match claim {
        ClaimId::LemQLucas => {
            let (a, b, c, d) = (get(params.a, "a")?, get(params.b, "b")?, get(params.c, "c")?, get(params.d, "d")?);
            if a < 0 || c < 0 || !(0..n).contains(&b) || !(0..n).contains(&d) {
                return Err("need a, c >= 0 and 0 <= b, d < n".into());
            }
            let coef = binomial(a, c).map_err(|e| e.to_string())?;
            Ok((n, (a * n + b, c * n + d), coef, (b, d)))
        }
        ClaimId::LemAn => {
            let (a, k) = (get(params.a, "a")?, get(params.k, "k")?);
            if a < 1 || !(0..=a * n).contains(&k) {
                return Err("need a >= 1 and 0 <= k <= a n".into());
            }
            let coef = if k % n == 0 { binomial(a, k / n).map_err(|e| e.to_string())? } else { int(0) };
            Ok((n, (a * n, k), coef, (0, 0)))
        }
        ClaimId::Lem2N1 => {
            let k = get(params.k, "k")?;
            if !(0..=2 * n + 1).contains(&k) {
                return Err("need 0 <= k <= 2n + 1".into());
            }
            let v = if [0, 1, 2 * n, 2 * n + 1].contains(&k) {
                1
            } else if k == n || k == n + 1 {
                2
            } else {
                0
            };
            Ok((n, (2 * n + 1, k), int(v), (0, 0)))
        }
        _ => Err(format!("{claim} is not a lemma")),
    }
}

pub(crate) fn lemma_outcome(claim: ClaimId, params: &ClaimParams, cache: &CyclotomicCache) -> Outcome {
    let (n, (t, b), coef, (t2, b2)) = match lemma_sides(claim, params) {
        Ok(s) => s,
        Err(why) => return Outcome::Skip(why),
    };
    let run = || -> Result<LaurentPoly> {
        let ring = ResidueRing::new(n as u64, 1, cache)?;
        let lhs = ring.reduce_integral(&qbinom_int(t, b)?.into_laurent());
        let rhs = ring.reduce_integral(&qbinom_int(t2, b2)?.into_laurent());
        let diff = ring.sub(&lhs, &ring.scale(&rhs, &coef));
        Ok(ring.to_laurent(&diff))
    };
    match run() {
        Ok(r) if r.is_zero() => Outcome::Pass,
        Ok(r) => Outcome::Fail(Witness::Residue(r)),
        Err(e) => Outcome::Fail(Witness::Message(e.to_string())),
    }
}

fn poly(p: IntPoly) -> RatFun {
    RatFun::from_poly(p.into_laurent())
}

/// `prod_{i=lo}^{hi} (1 - q^i)` as binomial factors.
fn poch_factors(lo: i64, hi: i64) -> Vec<Binom> {
    (lo..=hi).map(one_minus).collect()
}

fn frac(num: IntPoly, den: &[Binom]) -> Result<RatFun> {
    FracSum::single(num, den)
}

/// Both sides of a recurrence at `(n, d)`.
pub(crate) fn recurrence_sides(claim: ClaimId, n: i64, d: i64) -> Result<(RatFun, RatFun)> {
    let mono = |c: i64, e: i64| IntPoly::monomial(c, e);
    match claim {
        ClaimId::RecQb18 => {
            let x = |d| t11_lhs(n, d, false).map(poly);
            let mut shifted = x(d + 2)?;
            shifted = &shifted * &RatFun::from_poly(LaurentPoly::q_pow(3 * d + 3));
            let lhs = &x(d)? + &shifted;
            let mut num = qbinom_int(2 * n, n + d)?;
            num.shift(d);
            num.mul_binomial(-1, n - d);
            num.mul_binomial(1, d + 1);
            Ok((lhs, frac(num, &[one_minus(n + d + 1), one_plus(n)])?))
        }
        ClaimId::RecT11_2 => {
            let x = |d| t11_lhs(n, d, true).map(poly);
            let mut mid = mono(-1, d);
            mid.mul_binomial(1, d + 1);
            let lhs = &(&x(d)? + &(&poly(mid) * &x(d + 1)?)) + &(&RatFun::from_poly(LaurentPoly::q_pow(3 * d + 3)) * &x(d + 2)?);
            let mut num = mono(1, d);
            num.mul_binomial(-1, n);
            num.mul_binomial(1, d + 1);
            for i in 1..=2 * n - 1 {
                num.mul_binomial(-1, i);
            }
            let mut den = poch_factors(1, n - d - 1);
            den.extend(poch_factors(1, n + d + 1));
            Ok((lhs, frac(num, &den)?))
        }
        ClaimId::RecT14_1 => {
            let x = |d| t14_lhs(n, d, false);
            let mut c = mono(1, 2 + 3 * d);
            c.mul_binomial(-1, d + 2);
            let lhs = &(&frac(c, &[one_minus(d)])? * &x(d + 2)?) + &x(d)?;
            let mut num = mono(1, d);
            num.mul_binomial(1, n);
            num.mul_binomial(-1, 2 * d + 2);
            for i in 1..=2 * n - 1 {
                num.mul_binomial(-1, i);
            }
            let mut den = vec![one_minus(d)];
            den.extend(poch_factors(1, n + d + 1));
            // (q^2; q)_m = (1 - q^2) ... (1 - q^{m+1})
            den.extend(poch_factors(2, n - d - 1));
            Ok((lhs, frac(num, &den)?))
        }
        ClaimId::RecT14_2 => {
            let x = |d| t14_lhs(n, d, true);
            // (1 - q^{-d}) / (1 - q^{d+1}) = -q^{-d} (1 - q^d) / (1 - q^{d+1})
            let mut c = mono(-1, -d);
            c.mul_binomial(-1, d);
            let lhs = &x(d + 1)? + &(&frac(c, &[one_minus(d + 1)])? * &x(d)?);
            // -[2n+1, n-d] / [d+1] = -(1 - q) [2n+1, n-d] / (1 - q^{d+1})
            let mut num = qbinom_int(2 * n + 1, n - d)?;
            num.negate();
            num.mul_binomial(-1, 1);
            Ok((lhs, frac(num, &[one_minus(d + 1)])?))
        }
        _ => Err(Error::OutOfDomain(format!("{claim} is not a recurrence"))),
    }
}

pub(crate) fn recurrence_outcome(claim: ClaimId, params: &ClaimParams) -> Outcome {
    let (n, d) = match (params.n, params.d) {
        (Some(n), Some(d)) => (n, d),
        _ => return Outcome::Skip("missing n or d".into()),
    };
    let Some((lo, hi)) = claim.d_range_q(n) else {
        return Outcome::Skip(format!("{claim} is not a recurrence"));
    };
    if n < claim.min_n() || d < lo || d > hi {
        return Outcome::Skip(format!("(n, d) = ({n}, {d}) outside the domain"));
    }
    match recurrence_sides(claim, n, d) {
        Ok((l, r)) if l == r => Outcome::Pass,
        Ok((l, r)) => Outcome::Fail(Witness::Difference(&l - &r)),
        Err(e) => Outcome::Fail(Witness::Message(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn passes(o: Outcome) -> bool {
        matches!(o, Outcome::Pass)
    }

    #[test]
    fn lemma_examples() {
        let cache = CyclotomicCache::new();
        assert!(passes(lemma_outcome(ClaimId::LemQLucas, &ClaimParams::qlucas(3, 1, 2, 0, 2), &cache)));
        let p = ClaimParams { n: Some(3), k: Some(3), ..Default::default() };
        assert!(passes(lemma_outcome(ClaimId::Lem2N1, &p, &cache)));
        let p = ClaimParams { n: Some(3), a: Some(2), k: Some(3), ..Default::default() };
        assert!(passes(lemma_outcome(ClaimId::LemAn, &p, &cache)));
    }

    #[test]
    fn recurrence_examples() {
        for (c, n, d) in [(ClaimId::RecQb18, 1, 0), (ClaimId::RecQb18, 4, 1), (ClaimId::RecT14_2, 3, 1)] {
            assert!(passes(recurrence_outcome(c, &ClaimParams::nd(n, d))), "{c} {n} {d}");
        }
    }

    #[test]
    fn small_recurrence_sweep() {
        for &c in &[ClaimId::RecQb18, ClaimId::RecT11_2, ClaimId::RecT14_1, ClaimId::RecT14_2] {
            for n in c.min_n()..=7 {
                let (lo, hi) = c.d_range_q(n).unwrap();
                for d in lo..=hi {
                    assert!(passes(recurrence_outcome(c, &ClaimParams::nd(n, d))), "{c} n={n} d={d}");
                }
            }
        }
    }
}
