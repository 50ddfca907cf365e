//! Dense integer Laurent polynomials for the hot loops of q-products.
//!
//! Multiplying by a binomial `1 + c q^s` and dividing by `1 - q^i` are both a
//! single pass of additions, which keeps q-binomials and Pochhammer products
//! cheap at degrees in the thousands.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { offset: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i64, exponent: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { offset: exponent, coeffs: vec![BigInt::from(c)] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&mut self, k: i64) {
        self.offset += k;
    }

    pub fn negate(&mut self) {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
    }

    /// Multiplies in place by `1 + sign * q^s`.
    pub fn mul_binomial(&mut self, sign: i64, s: i64) {
        if self.coeffs.is_empty() {
            return;
        }
        if s == 0 {
            let factor = BigInt::from(1 + sign);
            for c in self.coeffs.iter_mut() {
                *c *= &factor;
            }
            self.trim();
            return;
        }
        let shift = s.unsigned_abs() as usize;
        let len = self.coeffs.len();
        if s > 0 {
            self.coeffs.resize(len + shift, BigInt::zero());
            // new[j] = old[j] + sign * old[j - s], walking downwards
            for j in (shift..len + shift).rev() {
                let moved = self.coeffs[j - shift].clone();
                if sign > 0 {
                    self.coeffs[j] += moved;
                } else {
                    self.coeffs[j] -= moved;
                }
            }
        } else {
            // 1 + c q^{-t} = q^{-t} (c + q^t)
            let old = std::mem::replace(&mut self.coeffs, vec![BigInt::zero(); len + shift]);
            for (j, c) in old.into_iter().enumerate() {
                if sign > 0 {
                    self.coeffs[j] += &c;
                } else {
                    self.coeffs[j] -= &c;
                }
                self.coeffs[j + shift] += c;
            }
            self.offset -= shift as i64;
        }
        self.trim();
    }

    /// Divides in place by `1 - q^i` for `i >= 1`, failing on a nonzero remainder.
    pub fn div_one_minus_q_pow(&mut self, i: i64) -> Result<()> {
        self.div_binomial(-1, i)
    }

    /// Divides in place by `1 + sign * q^m` for `m >= 1`, failing on a nonzero remainder.
    /// On failure the value is unspecified; use [`IntPoly::try_div_binomial`] to keep it.
    pub fn div_binomial(&mut self, sign: i64, m: i64) -> Result<()> {
        assert!(m >= 1);
        self.trim();
        if self.coeffs.is_empty() {
            return Ok(());
        }
        let step = m as usize;
        let len = self.coeffs.len();
        if len <= step {
            return Err(Error::InexactDivision(format!("degree too small to divide by 1 + ({sign})q^{m}")));
        }
        let qlen = len - step;
        // (1 + s q^m) Q = R  =>  Q_j = R_j - s Q_{j-m}
        for j in step..qlen {
            let prev = self.coeffs[j - step].clone();
            if sign < 0 {
                self.coeffs[j] += prev;
            } else {
                self.coeffs[j] -= prev;
            }
        }
        for j in qlen..len {
            let carried = if j >= step { Some(&self.coeffs[j - step]) } else { None };
            let rem = match carried {
                Some(c) if sign < 0 => &self.coeffs[j] + c,
                Some(c) => &self.coeffs[j] - c,
                None => self.coeffs[j].clone(),
            };
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!("remainder modulo 1 + ({sign})q^{m}")));
            }
        }
        self.coeffs.truncate(qlen);
        self.trim();
        Ok(())
    }

    pub fn try_div_binomial(&self, sign: i64, m: i64) -> Option<IntPoly> {
        let mut c = self.clone();
        c.div_binomial(sign, m).ok().map(|_| c)
    }

    pub fn scale(&mut self, c: &BigInt) {
        if c.is_zero() {
            *self = IntPoly::zero();
            return;
        }
        for x in self.coeffs.iter_mut() {
            *x *= c;
        }
    }

    pub fn add_assign(&mut self, other: &IntPoly) {
        if other.coeffs.is_empty() {
            return;
        }
        if self.coeffs.is_empty() {
            *self = other.clone();
            return;
        }
        let lo = self.offset.min(other.offset);
        let hi = (self.offset + self.coeffs.len() as i64).max(other.offset + other.coeffs.len() as i64);
        if lo < self.offset {
            let pad = (self.offset - lo) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.offset = lo;
        }
        self.coeffs.resize((hi - lo) as usize, BigInt::zero());
        let base = (other.offset - lo) as usize;
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[base + k] += c;
        }
        self.trim();
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut r = IntPoly { offset: self.offset + other.offset, coeffs: out };
        r.trim();
        r
    }

    #[cfg(test)]
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_int_dense(self.offset, self.coeffs.clone())
    }

    pub fn into_laurent(self) -> LaurentPoly {
        LaurentPoly::from_int_dense(self.offset, self.coeffs)
    }

    #[cfg(test)]
    pub fn from_laurent(p: &LaurentPoly) -> Option<IntPoly> {
        let (offset, coeffs) = p.to_int_dense()?;
        let mut r = IntPoly { offset, coeffs };
        r.trim();
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64_coeffs(c)
    }

    #[test]
    fn binomial_products() {
        let mut x = IntPoly::one();
        x.mul_binomial(1, 1);
        x.mul_binomial(1, 2);
        assert_eq!(x.to_laurent(), lp(&[1, 1, 1, 1]));
        let mut y = IntPoly::one();
        y.mul_binomial(-1, 1);
        y.mul_binomial(-1, 2);
        assert_eq!(y.to_laurent(), lp(&[1, -1, -1, 1]));
    }

    #[test]
    fn negative_shift_binomial() {
        // (1 - q^-2)(1 + q) = 1 + q - q^-2 - q^-1
        let mut x = IntPoly::one();
        x.mul_binomial(1, 1);
        x.mul_binomial(-1, -2);
        let expect = &(&lp(&[1, 1]) - &LaurentPoly::q_pow(-2)) - &LaurentPoly::q_pow(-1);
        assert_eq!(x.to_laurent(), expect);
    }

    #[test]
    fn division_by_one_plus_q_pow() {
        let mut x = IntPoly::from_laurent(&lp(&[1, 0, 0, 0, -1])).unwrap();
        x.div_binomial(1, 2).unwrap();
        assert_eq!(x.to_laurent(), lp(&[1, 0, -1]));
        assert!(IntPoly::from_laurent(&lp(&[1, 0, 1])).unwrap().try_div_binomial(1, 1).is_none());
    }

    #[test]
    fn exact_division_by_cyclotomic_binomial() {
        let mut x = IntPoly::from_laurent(&lp(&[1, 0, 0, -1])).unwrap();
        x.div_one_minus_q_pow(1).unwrap();
        assert_eq!(x.to_laurent(), lp(&[1, 1, 1]));
        let mut y = IntPoly::from_laurent(&lp(&[1, 1])).unwrap();
        assert!(y.div_one_minus_q_pow(1).is_err());
    }
}
