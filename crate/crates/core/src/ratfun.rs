//! Normalized rational functions in `q`.
//!
//! Canonical form: the denominator is monic with a nonzero constant term, the
//! numerator carries every power of `q` (possibly negative), and the two are
//! coprime. Equal functions therefore have identical fields.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{gcd_nonzero, LaurentPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    /// Normalizes `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True if the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn into_parts(self) -> (LaurentPoly, LaurentPoly) {
        (self.num, self.den)
    }

    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        let d = self.den.eval(q)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q)? / d)
    }

    pub fn checked_div(&self, other: &RatFun) -> Result<RatFun> {
        if other.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let inv = RatFun::normalize(other.den.clone(), other.num.clone());
        Ok(self * &inv)
    }

    /// Sums `num_i / den_i` pairs, grouping identical denominators before normalizing.
    pub fn sum_fractions<I>(terms: I) -> Result<RatFun>
    where
        I: IntoIterator<Item = (LaurentPoly, LaurentPoly)>,
    {
        let mut groups: HashMap<LaurentPoly, LaurentPoly> = HashMap::new();
        let mut order: Vec<LaurentPoly> = Vec::new();
        for (num, den) in terms {
            if den.is_zero() {
                return Err(Error::DivisionByZeroPoly);
            }
            if num.is_zero() {
                continue;
            }
            match groups.get_mut(&den) {
                Some(acc) => *acc += &num,
                None => {
                    order.push(den.clone());
                    groups.insert(den, num);
                }
            }
        }
        let mut total = RatFun::zero();
        for den in order {
            let num = groups.remove(&den).unwrap();
            total = &total + &RatFun::normalize(num, den);
        }
        Ok(total)
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let s = num.min_exp().unwrap() - den.min_exp().unwrap();
        let mut n = num.shift(-num.min_exp().unwrap());
        let mut d = den.shift(-den.min_exp().unwrap());
        if d.len() > 1 && n.len() > 0 {
            let g = gcd_nonzero(&n, &d);
            if !g.is_one() {
                n = n.exact_div(&g).expect("gcd divides numerator");
                d = d.exact_div(&g).expect("gcd divides denominator");
            }
        }
        let lc = d.leading_coeff().unwrap().clone();
        let inv = lc.recip();
        Self { num: n.scale(&inv).shift(s), den: d.scale(&inv) }
    }

    /// Adds fractions whose denominators are already normalized, using the
    /// fact that only factors of `gcd(den_a, den_b)` can cancel.
    fn add_normalized(&self, other: &RatFun, negate: bool) -> RatFun {
        let other_num = if negate { -&other.num } else { other.num.clone() };
        if self.is_zero() {
            return RatFun { num: other_num, den: other.den.clone() };
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(&self.num + &other_num, self.den.clone());
        }
        let g = gcd_nonzero(&self.den, &other.den);
        let (a_cof, b_cof) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.exact_div(&g).expect("gcd divides"),
                other.den.exact_div(&g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &b_cof) + &(&other_num * &a_cof);
        if num.is_zero() {
            return Self::zero();
        }
        let den = &a_cof * &other.den;
        if g.is_one() {
            return RatFun { num, den };
        }
        let shift = num.min_exp().unwrap();
        let n0 = num.shift(-shift);
        let h = gcd_nonzero(&n0, &g);
        if h.is_one() {
            RatFun { num, den }
        } else {
            RatFun {
                num: n0.exact_div(&h).expect("gcd divides").shift(shift),
                den: den.exact_div(&h).expect("gcd divides"),
            }
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        self.add_normalized(rhs, false)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self.add_normalized(rhs, true)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        // Cancel across the diagonal first; the halves are already reduced.
        let cancel = |n: &LaurentPoly, d: &LaurentPoly| -> (LaurentPoly, LaurentPoly) {
            if d.is_one() {
                return (n.clone(), d.clone());
            }
            let s = n.min_exp().unwrap();
            let n0 = n.shift(-s);
            let g = gcd_nonzero(&n0, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (
                    n0.exact_div(&g).expect("gcd divides").shift(s),
                    d.exact_div(&g).expect("gcd divides"),
                )
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading_coeff().unwrap().recip();
        RatFun { num: num.scale(&lc), den: den.scale(&lc) }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}
