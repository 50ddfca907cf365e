//! q-integers, q-Pochhammer symbols with monomial arguments, and Gaussian
//! binomial coefficients (including negative upper index).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dense::IntPoly;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Rational};

/// The Pochhammer argument `sign * q^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialArg {
    pub sign: i8,
    pub exponent: i64,
}

impl MonomialArg {
    pub fn new(sign: i8, exponent: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        Self { sign, exponent }
    }

    /// `q^s`
    pub fn q_pow(s: i64) -> Self {
        Self::new(1, s)
    }

    /// `-q^s`
    pub fn neg_q_pow(s: i64) -> Self {
        Self::new(-1, s)
    }
}

/// `[n] = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    Ok(LaurentPoly::from_terms((0..n).map(|i| (i, Rational::one()))))
}

/// `(x; q)_m = (1 - x)(1 - xq)...(1 - xq^{m-1})`.
pub fn q_pochhammer(x: MonomialArg, m: i64) -> Result<LaurentPoly> {
    Ok(pochhammer_int(x, m)?.into_laurent())
}

pub(crate) fn pochhammer_int(x: MonomialArg, m: i64) -> Result<IntPoly> {
    if m < 0 {
        return Err(Error::NegativeArgument(m));
    }
    let mut acc = IntPoly::one();
    for i in 0..m {
        acc.mul_binomial(-(x.sign as i64), x.exponent + i);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Gaussian binomial coefficient, extended to every integer `t` by the
/// product formula `prod_{i=1}^{b} (1 - q^{t-i+1}) / (1 - q^i)`.
pub fn q_binomial(t: i64, b: i64) -> Result<LaurentPoly> {
    Ok(qbinom_int(t, b)?.into_laurent())
}

pub(crate) fn qbinom_int(t: i64, b: i64) -> Result<IntPoly> {
    if b < 0 || (t >= 0 && b > t) {
        return Ok(IntPoly::zero());
    }
    let b = if t >= 0 { b.min(t - b) } else { b };
    let mut acc = IntPoly::one();
    for i in 1..=b {
        acc.mul_binomial(-1, t - i + 1);
        acc.div_one_minus_q_pow(i)?;
    }
    Ok(acc)
}

/// Ordinary binomial coefficient, zero outside `0 <= c <= a`.
pub fn binomial(a: i64, c: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::NegativeArgument(a));
    }
    if c < 0 || c > a {
        return Ok(BigInt::zero());
    }
    let c = c.min(a - c);
    let mut r = BigInt::one();
    for i in 0..c {
        r *= a - i;
        r /= i + 1;
    }
    Ok(r)
}
