//! Sums of fractions whose denominators are products of binomials `1 + s q^m`.
//!
//! Terms are brought over the least common multiset of binomials; the
//! combined numerator is then divided by those binomials greedily before the
//! remaining fraction is normalized, so most gcd work disappears.

use std::collections::BTreeMap;

use crate::dense::IntPoly;
use crate::error::Result;
use crate::ratfun::RatFun;

/// `(sign, m)` standing for `1 + sign * q^m`, `m >= 1`.
pub(crate) type Binom = (i64, i64);

pub(crate) fn one_minus(m: i64) -> Binom {
    (-1, m)
}

pub(crate) fn one_plus(m: i64) -> Binom {
    (1, m)
}

#[derive(Default)]
pub(crate) struct FracSum {
    terms: Vec<(IntPoly, BTreeMap<Binom, u32>)>,
}

impl FracSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, num: IntPoly, den: &[Binom]) {
        if num.is_zero() {
            return;
        }
        let mut ms = BTreeMap::new();
        for &b in den {
            debug_assert!(b.1 >= 1);
            *ms.entry(b).or_insert(0) += 1;
        }
        self.terms.push((num, ms));
    }

    pub fn single(num: IntPoly, den: &[Binom]) -> Result<RatFun> {
        let mut s = FracSum::new();
        s.push(num, den);
        s.into_ratfun()
    }

    pub fn into_ratfun(self) -> Result<RatFun> {
        let mut common: BTreeMap<Binom, u32> = BTreeMap::new();
        for (_, den) in &self.terms {
            for (b, k) in den {
                let e = common.entry(*b).or_insert(0);
                *e = (*e).max(*k);
            }
        }
        let mut total = IntPoly::zero();
        for (mut num, den) in self.terms {
            for (b, k) in &common {
                let have = den.get(b).copied().unwrap_or(0);
                for _ in have..*k {
                    num.mul_binomial(b.0, b.1);
                }
            }
            total.add_assign(&num);
        }
        if total.is_zero() {
            return Ok(RatFun::zero());
        }
        let mut den = IntPoly::one();
        for (b, k) in common {
            let mut left = k;
            while left > 0 {
                match total.try_div_binomial(b.0, b.1) {
                    Some(q) => {
                        total = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            for _ in 0..left {
                den.mul_binomial(b.0, b.1);
            }
        }
        RatFun::new(total.into_laurent(), den.into_laurent())
    }
}
