//! Sparse Laurent polynomials in one indeterminate `q` over exact rationals.
//!
//! A [`LaurentPoly`] is a sorted list of `(exponent, coefficient)` pairs with
//! no zero coefficients, so structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modgcd;

/// Exact rational coefficient, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, Rational)>,
}

/// Ring operation selector for [`ring_op`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    /// Negates `a`; `b` is ignored.
    Neg,
}

pub fn ring_op(op: RingOp, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    match op {
        RingOp::Add => a + b,
        RingOp::Sub => a - b,
        RingOp::Mul => a * b,
        RingOp::Neg => -a,
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn monomial(c: Rational, exponent: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exponent, c)] }
        }
    }

    /// `q^exponent`.
    pub fn q_pow(exponent: i64) -> Self {
        Self::monomial(Rational::one(), exponent)
    }

    /// `sign * q^exponent` for `sign` in {+1, -1}.
    pub fn signed_q_pow(sign: i64, exponent: i64) -> Self {
        Self::monomial(Rational::from_integer(sign.into()), exponent)
    }

    /// Builds a polynomial from arbitrary terms; repeated exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Ascending integer coefficients starting at `q^0`.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (i as i64, Rational::from_integer((*c).into())))
                .collect(),
        }
    }

    pub fn from_dense(offset: i64, coeffs: Vec<Rational>) -> Self {
        Self {
            terms: coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (offset + i as i64, c))
                .collect(),
        }
    }

    pub fn from_int_dense(offset: i64, coeffs: Vec<BigInt>) -> Self {
        Self {
            terms: coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (offset + i as i64, Rational::from_integer(c)))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(i64, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> Rational {
        match self.terms.binary_search_by_key(&exponent, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True if there are no negative exponents.
    pub fn is_ordinary(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a rational point. Returns `None` when `q = 0` meets a negative exponent.
    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        if q.is_zero() {
            if self.min_exp().map_or(false, |e| e < 0) {
                return None;
            }
            return Some(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(q.clone(), *e as usize)
            } else {
                num_traits::pow(q.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        Some(acc)
    }

    /// Dense integer coefficients from the minimal exponent, if every coefficient is an integer.
    pub fn to_int_dense(&self) -> Option<(i64, Vec<BigInt>)> {
        let lo = match self.min_exp() {
            Some(e) => e,
            None => return Some((0, Vec::new())),
        };
        let hi = self.max_exp().unwrap();
        let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out[(e - lo) as usize] = c.numer().clone();
        }
        Some((lo, out))
    }

    /// Returns `(scale, offset, coeffs)` with `self = q^offset * coeffs / scale`, `scale > 0`.
    pub fn clear_denominators(&self) -> (BigInt, i64, Vec<BigInt>) {
        let lcm = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(-1);
        let mut out = vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.numer() * (&lcm / c.denom());
        }
        (lcm, lo, out)
    }

    /// Euclidean division for ordinary polynomials: `self = quotient * divisor + remainder`.
    pub fn divrem(&self, divisor: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if !self.is_ordinary() || !divisor.is_ordinary() {
            return Err(Error::NegativeExponent);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let db = divisor.max_exp().unwrap() as usize;
        let da = self.max_exp().unwrap() as usize;
        if da < db {
            return Ok((Self::zero(), self.clone()));
        }
        let lc = divisor.leading_coeff().unwrap();
        if lc.is_one() && divisor.is_integral() && self.is_integral() {
            let (_, mut rem) = self.to_int_dense_from_zero();
            let div: Vec<(usize, BigInt)> = divisor
                .terms
                .iter()
                .map(|(e, c)| (*e as usize, c.numer().clone()))
                .collect();
            let quot = long_div(&mut rem, &div, db, |c| c.clone());
            return Ok((Self::from_int_dense(0, quot), Self::from_int_dense(0, rem)));
        }
        let mut rem = vec![Rational::zero(); da + 1];
        for (e, c) in &self.terms {
            rem[*e as usize] = c.clone();
        }
        let div: Vec<(usize, Rational)> = divisor
            .terms
            .iter()
            .map(|(e, c)| (*e as usize, c.clone()))
            .collect();
        let lc_inv = lc.recip();
        let quot = long_div(&mut rem, &div, db, |c| c * &lc_inv);
        Ok((Self::from_dense(0, quot), Self::from_dense(0, rem)))
    }

    /// Exact division in the Laurent ring; fails with `InexactDivision` on a nonzero remainder.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let sa = self.min_exp().unwrap();
        let sb = divisor.min_exp().unwrap();
        let (quot, rem) = self.shift(-sa).divrem(&divisor.shift(-sb))?;
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!(
                "({self}) / ({divisor}) leaves remainder {rem}"
            )));
        }
        Ok(quot.shift(sa - sb))
    }

    fn to_int_dense_from_zero(&self) -> (i64, Vec<BigInt>) {
        let hi = self.max_exp().unwrap_or(-1);
        let mut out = vec![BigInt::zero(); (hi + 1).max(0) as usize];
        for (e, c) in &self.terms {
            out[*e as usize] = c.numer().clone();
        }
        (0, out)
    }

    fn merge(&self, other: &LaurentPoly, negate_other: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let take_b = |c: &Rational| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, take_b(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, take_b(c))));
        LaurentPoly { terms: out }
    }

    fn product(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.scale(c).shift(*e);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.scale(c).shift(*e);
        }
        let lo = self.min_exp().unwrap() + other.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let span = (hi - lo + 1) as usize;
        let dense = span <= 4 * self.terms.len() * other.terms.len() + 64;
        if self.is_integral() && other.is_integral() {
            let a: Vec<(i64, BigInt)> = self.terms.iter().map(|(e, c)| (*e, c.numer().clone())).collect();
            let b: Vec<(i64, BigInt)> = other.terms.iter().map(|(e, c)| (*e, c.numer().clone())).collect();
            if dense {
                Self::from_int_dense(lo, dense_product(&a, &b, lo, span))
            } else {
                Self::from_terms(
                    sparse_product(&a, &b)
                        .into_iter()
                        .map(|(e, c)| (e, Rational::from_integer(c))),
                )
            }
        } else if dense {
            Self::from_dense(lo, dense_product(&self.terms, &other.terms, lo, span))
        } else {
            Self::from_terms(sparse_product(&self.terms, &other.terms))
        }
    }
}

fn dense_product<T>(a: &[(i64, T)], b: &[(i64, T)], lo: i64, span: usize) -> Vec<T>
where
    T: Zero + Clone + AddAssign,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    let mut acc = vec![T::zero(); span];
    for (ea, ca) in a {
        for (eb, cb) in b {
            acc[(ea + eb - lo) as usize] += ca * cb;
        }
    }
    acc
}

fn sparse_product<T>(a: &[(i64, T)], b: &[(i64, T)]) -> BTreeMap<i64, T>
where
    T: Zero + Clone + AddAssign,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    let mut acc: BTreeMap<i64, T> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *acc.entry(ea + eb).or_insert_with(T::zero) += ca * cb;
        }
    }
    acc
}

/// Schoolbook long division on a dense remainder against a sparse divisor of degree `db`.
/// `scale_lead` turns a remainder coefficient into the next quotient coefficient.
fn long_div<T, F>(rem: &mut Vec<T>, divisor: &[(usize, T)], db: usize, scale_lead: F) -> Vec<T>
where
    T: Zero + Clone + for<'x> SubAssign<&'x T>,
    for<'x> &'x T: Mul<&'x T, Output = T>,
    F: Fn(&T) -> T,
{
    let da = rem.len() - 1;
    let mut quot = vec![T::zero(); da - db + 1];
    for i in (db..=da).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let qc = scale_lead(&rem[i]);
        let shift = i - db;
        for (e, c) in divisor {
            let t = &qc * c;
            rem[shift + e] -= &t;
        }
        quot[shift] = qc;
    }
    rem.truncate(db);
    quot
}

/// Monic gcd of two ordinary polynomials over the rationals.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    if !a.is_ordinary() || !b.is_ordinary() {
        return Err(Error::NegativeExponent);
    }
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::BothZero),
        (true, false) => Ok(b.monic()),
        (false, true) => Ok(a.monic()),
        (false, false) => Ok(gcd_nonzero(a, b)),
    }
}

/// Gcd of nonzero polynomials, where negative exponents are allowed and
/// q-power content is kept as the smaller of the two minimal exponents.
pub(crate) fn gcd_nonzero(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let va = a.min_exp().unwrap();
    let vb = b.min_exp().unwrap();
    let v = va.min(vb);
    let pa = primitive_part(&a.shift(-va));
    let pb = primitive_part(&b.shift(-vb));
    let g = if pa.len() == 1 || pb.len() == 1 {
        vec![BigInt::one()]
    } else {
        modgcd::gcd_primitive(&pa, &pb)
    };
    LaurentPoly::from_int_dense(v, g).monic()
}

/// Primitive integer coefficients (ascending from `q^0`) of an ordinary polynomial.
pub(crate) fn primitive_part(p: &LaurentPoly) -> Vec<BigInt> {
    let (_, lo, mut coeffs) = p.clear_denominators();
    if lo > 0 {
        let mut padded = vec![BigInt::zero(); lo as usize];
        padded.append(&mut coeffs);
        coeffs = padded;
    }
    let content = coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let negate = coeffs.last().map_or(false, |c| c.is_negative());
    for c in coeffs.iter_mut() {
        *c = &*c / &content;
        if negate {
            *c = -&*c;
        }
    }
    coeffs
}

impl fmt::Display for LaurentPoly {
    /// `c0 + c1*q + c2*q^2`, ascending exponents, coefficients in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match *e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.product(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, true);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64_coeffs(c)
    }

    #[test]
    fn ring_op_examples() {
        // (q + 1) + (q - 1) = 2q
        assert_eq!(ring_op(RingOp::Add, &p(&[1, 1]), &p(&[-1, 1])), p(&[0, 2]));
        assert_eq!(ring_op(RingOp::Mul, &p(&[1, 1]), &p(&[1, -1])), p(&[1, 0, -1]));
        let inv_plus_one = &LaurentPoly::q_pow(-1) + &LaurentPoly::one();
        assert_eq!(ring_op(RingOp::Mul, &inv_plus_one, &LaurentPoly::q_pow(1)), p(&[1, 1]));
        assert_eq!(ring_op(RingOp::Neg, &p(&[1, -1]), &LaurentPoly::zero()), p(&[-1, 1]));
        assert_eq!(ring_op(RingOp::Sub, &p(&[3]), &p(&[3])), LaurentPoly::zero());
    }

    #[test]
    fn canonical_form_has_no_zero_terms() {
        let x = LaurentPoly::from_terms(vec![
            (2, Rational::from_integer(1.into())),
            (2, Rational::from_integer((-1).into())),
            (0, Rational::from_integer(5.into())),
        ]);
        assert_eq!(x, LaurentPoly::from_int(5));
        assert_eq!(x.len(), 1);
    }

    #[test]
    fn divrem_examples() {
        let (quo, rem) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!((quo, rem), (p(&[1, 1]), LaurentPoly::zero()));
        let (quo, rem) = p(&[0, 0, 0, 1]).divrem(&p(&[1, 0, 1])).unwrap();
        assert_eq!((quo, rem), (p(&[0, 1]), p(&[0, -1])));
        // q^6 - 1 over (q^4 + q^3 - q - 1) is q^2 - q + 1 exactly.
        let (quo, rem) = p(&[-1, 0, 0, 0, 0, 0, 1]).divrem(&p(&[-1, -1, 0, 1, 1])).unwrap();
        assert_eq!((quo, rem), (p(&[1, -1, 1]), LaurentPoly::zero()));
    }

    #[test]
    fn divrem_errors() {
        assert_eq!(p(&[1, 1]).divrem(&LaurentPoly::zero()), Err(Error::DivisionByZeroPoly));
        assert_eq!(
            LaurentPoly::q_pow(-1).divrem(&p(&[1, 1])),
            Err(Error::NegativeExponent)
        );
    }

    #[test]
    fn divrem_rational_divisor() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 0, 2]);
        let (quo, rem) = a.divrem(&b).unwrap();
        assert_eq!(&(&quo * &b) + &rem, a);
        assert!(rem.max_exp().unwrap() < 2);
        assert!(!quo.is_integral());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[1, 1]), &p(&[1, 1, 1])).unwrap(), LaurentPoly::one());
        assert_eq!(gcd(&LaurentPoly::zero(), &p(&[-3, 3])).unwrap(), p(&[-1, 1]));
        assert_eq!(gcd(&LaurentPoly::zero(), &LaurentPoly::zero()), Err(Error::BothZero));
    }

    #[test]
    fn gcd_keeps_common_q_power() {
        // gcd(q^2 (q+1), q (q+1)(q-1)) = q (q+1)
        let a = p(&[0, 0, 1, 1]);
        let b = p(&[0, -1, 0, 1]);
        assert_eq!(gcd(&a, &b).unwrap(), p(&[0, 1, 1]));
    }

    #[test]
    fn exact_div_laurent() {
        // (1 - q^-3) / (1 - q) = -q^-3 (1 + q + q^2)
        let a = &LaurentPoly::one() - &LaurentPoly::q_pow(-3);
        let b = p(&[1, -1]);
        let expect = LaurentPoly::from_terms(vec![
            (-3, Rational::from_integer((-1).into())),
            (-2, Rational::from_integer((-1).into())),
            (-1, Rational::from_integer((-1).into())),
        ]);
        assert_eq!(a.exact_div(&b).unwrap(), expect);
        assert!(matches!(p(&[1, 0, 1]).exact_div(&b), Err(Error::InexactDivision(_))));
    }

    #[test]
    fn eval_and_display() {
        let x = &p(&[1, -2]) + &LaurentPoly::monomial(Rational::new(3.into(), 2.into()), -1);
        assert_eq!(x.to_string(), "3/2*q^-1 + 1 + -2*q");
        assert_eq!(x.eval(&Rational::from_integer(2.into())), Some(Rational::new((-9).into(), 4.into())));
        assert_eq!(x.eval(&Rational::zero()), None);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn sparse_product_for_spread_exponents() {
        let a = &LaurentPoly::one() + &LaurentPoly::q_pow(10_000);
        let b = &LaurentPoly::one() - &LaurentPoly::q_pow(10_000);
        assert_eq!(&a * &b, &LaurentPoly::one() - &LaurentPoly::q_pow(20_000));
    }
}
