//! Cyclotomic polynomials and arithmetic modulo `Phi_n(q)^e`.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Rational};
use crate::ratfun::RatFun;

pub fn moebius(n: i64) -> Result<i8> {
    if n < 1 {
        return Err(Error::NegativeArgument(n));
    }
    let mut m = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

pub fn euler_phi(n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::NegativeArgument(n));
    }
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Memo table `n -> Phi_n` (ascending integer coefficients).
///
/// Reads are concurrent; inserts are idempotent because every entry is canonical.
#[derive(Debug, Default)]
pub struct CyclotomicCache {
    entries: RwLock<BTreeMap<u64, Arc<Vec<i64>>>>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Seeds the cache from stored entries. Every entry is recomputed and
    /// compared; returns `false` (and seeds nothing) if any entry is wrong.
    pub fn with_entries(entries: BTreeMap<u64, Vec<i64>>) -> (Self, bool) {
        let fresh = CyclotomicCache::new();
        for (n, coeffs) in &entries {
            let ok = *n >= 1 && fresh.coefficients(*n).map_or(false, |c| c.as_slice() == coeffs.as_slice());
            if !ok {
                return (CyclotomicCache::new(), false);
            }
        }
        let cache = CyclotomicCache::new();
        {
            let mut w = cache.entries.write().unwrap();
            for (n, coeffs) in entries {
                w.insert(n, Arc::new(coeffs));
            }
        }
        (cache, true)
    }

    pub fn snapshot(&self) -> BTreeMap<u64, Vec<i64>> {
        self.entries.read().unwrap().iter().map(|(n, c)| (*n, c.as_ref().clone())).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, n: u64) -> bool {
        self.entries.read().unwrap().contains_key(&n)
    }

    /// Coefficients of `Phi_n`, computing and memoizing on a miss.
    pub fn coefficients(&self, n: u64) -> Result<Arc<Vec<i64>>> {
        if n == 0 {
            return Err(Error::NegativeArgument(0));
        }
        if let Some(c) = self.entries.read().unwrap().get(&n) {
            return Ok(c.clone());
        }
        // q^n - 1 divided by every Phi_d with d a proper divisor of n
        let mut divisor = LaurentPoly::one();
        for d in divisors(n) {
            if d < n {
                let phi_d = self.coefficients(d)?;
                divisor = &divisor * &LaurentPoly::from_i64_coeffs(&phi_d);
            }
        }
        let top = &LaurentPoly::q_pow(n as i64) - &LaurentPoly::one();
        let phi = top.exact_div(&divisor)?;
        let (_, dense) = phi.to_int_dense().expect("integral quotient");
        let coeffs: Vec<i64> = dense
            .iter()
            .map(|c| c.to_i64().expect("cyclotomic coefficient fits in i64"))
            .collect();
        let coeffs = Arc::new(coeffs);
        self.entries.write().unwrap().entry(n).or_insert_with(|| coeffs.clone());
        Ok(coeffs)
    }
}

pub fn cyclotomic(n: i64, cache: &CyclotomicCache) -> Result<LaurentPoly> {
    if n < 1 {
        return Err(Error::NegativeArgument(n));
    }
    Ok(LaurentPoly::from_i64_coeffs(&cache.coefficients(n as u64)?))
}

/// Dense residue in `Z[q] / (Phi_n^e)`, ascending coefficients of length `degree`.
pub type Residue = Vec<BigInt>;

/// The quotient ring `Z[q] / (Phi_n(q)^e)`.
#[derive(Clone, Debug)]
pub struct ResidueRing {
    n: u64,
    e: u32,
    degree: usize,
    modulus: Vec<BigInt>,
    sparse: Vec<(usize, BigInt)>,
    q_inv: Residue,
}

impl ResidueRing {
    pub fn new(n: u64, e: u32, cache: &CyclotomicCache) -> Result<Self> {
        if n == 0 {
            return Err(Error::NegativeArgument(0));
        }
        if e == 0 {
            return Err(Error::NegativeArgument(0));
        }
        let phi = LaurentPoly::from_i64_coeffs(&cache.coefficients(n)?);
        let m = phi.pow(e);
        let (_, modulus) = m.to_int_dense().expect("integral modulus");
        let degree = modulus.len() - 1;
        let sparse = modulus[..degree]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        // M = q R + c with c = +-1, so q^{-1} = -c R.
        let c = modulus[0].clone();
        debug_assert!(c.abs().is_one());
        let mut q_inv: Residue = modulus[1..].iter().map(|r| -(&c * r)).collect();
        q_inv.truncate(degree);
        q_inv.resize(degree, BigInt::zero());
        // R has degree `degree - 1` with leading coefficient 1: already reduced.
        Ok(Self { n, e, degree, modulus, sparse, q_inv })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> LaurentPoly {
        LaurentPoly::from_int_dense(0, self.modulus.clone())
    }

    pub fn zero(&self) -> Residue {
        vec![BigInt::zero(); self.degree]
    }

    pub fn one(&self) -> Residue {
        self.from_int(1)
    }

    pub fn from_int(&self, c: i64) -> Residue {
        let mut r = self.zero();
        r[0] = BigInt::from(c);
        r
    }

    pub fn is_zero(&self, r: &Residue) -> bool {
        r.iter().all(|c| c.is_zero())
    }

    /// Reduces a dense integer polynomial with nonnegative exponents (in place) by long division.
    fn reduce_ordinary(&self, mut a: Vec<BigInt>) -> Residue {
        let d = self.degree;
        if a.len() > d {
            for i in (d..a.len()).rev() {
                let c = std::mem::take(&mut a[i]);
                if c.is_zero() {
                    continue;
                }
                let base = i - d;
                for (j, m) in &self.sparse {
                    a[base + j] -= &c * m;
                }
            }
        }
        a.resize(d, BigInt::zero());
        a
    }

    /// Residue of `q^offset * sum coeffs[i] q^i`.
    pub fn reduce_int(&self, offset: i64, coeffs: &[BigInt]) -> Residue {
        if self.e == 1 {
            // q^n = 1 modulo Phi_n: fold exponents first
            let n = self.n as i64;
            let mut folded = vec![BigInt::zero(); self.n as usize];
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    folded[(offset + i as i64).rem_euclid(n) as usize] += c;
                }
            }
            return self.reduce_ordinary(folded);
        }
        let r = self.reduce_ordinary(coeffs.to_vec());
        if offset == 0 {
            r
        } else {
            self.mul(&r, &self.q_pow(offset))
        }
    }

    pub fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        let d = self.degree;
        if d == 0 {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        self.reduce_ordinary(out)
    }

    pub fn add(&self, a: &Residue, b: &Residue) -> Residue {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &Residue, c: &BigInt) -> Residue {
        a.iter().map(|x| x * c).collect()
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(&self, k: i64) -> Residue {
        if self.e == 1 {
            let r = k.rem_euclid(self.n as i64) as usize;
            let mut v = vec![BigInt::zero(); r + 1];
            v[r] = BigInt::one();
            return self.reduce_ordinary(v);
        }
        if k >= 0 && (k as usize) < self.degree {
            let mut v = self.zero();
            v[k as usize] = BigInt::one();
            return v;
        }
        let base = if k >= 0 {
            let mut v = vec![BigInt::zero(); 2];
            v[1] = BigInt::one();
            self.reduce_ordinary(v)
        } else {
            self.q_inv.clone()
        };
        self.pow(&base, k.unsigned_abs())
    }

    pub fn pow(&self, base: &Residue, mut k: u64) -> Residue {
        let mut acc = self.one();
        let mut b = base.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            k >>= 1;
            if k > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Residue of a Laurent polynomial with integer coefficients.
    pub fn reduce_integral(&self, f: &LaurentPoly) -> Residue {
        let (offset, coeffs) = f.to_int_dense().expect("integral polynomial");
        self.reduce_int(offset, &coeffs)
    }

    /// Canonical residue of `f` (rational coefficients allowed).
    pub fn reduce(&self, f: &LaurentPoly) -> LaurentPoly {
        if f.is_zero() {
            return LaurentPoly::zero();
        }
        let (scale, offset, coeffs) = f.clear_denominators();
        let r = self.reduce_int(offset, &coeffs);
        let inv = Rational::from_integer(scale).recip();
        LaurentPoly::from_int_dense(0, r).scale(&inv)
    }

    pub fn to_laurent(&self, r: &Residue) -> LaurentPoly {
        LaurentPoly::from_int_dense(0, r.clone())
    }

    /// True if `Phi_n` divides `f`, i.e. `f` is not a unit candidate modulo `Phi_n^e`.
    pub fn phi_divides(&self, f: &LaurentPoly, cache: &CyclotomicCache) -> Result<bool> {
        let phi = cyclotomic(self.n as i64, cache)?;
        let (_, _, coeffs) = f.clear_denominators();
        let g = LaurentPoly::from_int_dense(0, coeffs);
        let (_, rem) = g.divrem(&phi)?;
        Ok(rem.is_zero())
    }

    /// Reduced cross product `num(a) den(b) - num(b) den(a)`.
    pub fn cross_difference(&self, a: &RatFun, b: &RatFun) -> LaurentPoly {
        let (sa, oa, na) = a.num().clear_denominators();
        let (sb, ob, nb) = b.num().clear_denominators();
        let (ta, pa, da) = a.den().clear_denominators();
        let (tb, pb, db) = b.den().clear_denominators();
        let x = self.mul(&self.reduce_int(oa, &na), &self.reduce_int(pb, &db));
        let y = self.mul(&self.reduce_int(ob, &nb), &self.reduce_int(pa, &da));
        // Bring both products over the common integer scale sa*tb*sb*ta.
        let x = self.scale(&x, &(&sb * &ta));
        let y = self.scale(&y, &(&sa * &tb));
        let diff = self.sub(&x, &y);
        let total = &sa * &tb * &sb * &ta;
        LaurentPoly::from_int_dense(0, diff).scale(&Rational::from_integer(total).recip())
    }
}

/// Canonical residue of `f` modulo `Phi_n(q)^e`, with exponents in `[0, e * phi(n))`.
pub fn reduce_mod_cyclotomic(f: &LaurentPoly, n: i64, e: i64, cache: &CyclotomicCache) -> Result<LaurentPoly> {
    let ring = ring_for(n, e, cache)?;
    Ok(ring.reduce(f))
}

fn ring_for(n: i64, e: i64, cache: &CyclotomicCache) -> Result<ResidueRing> {
    if n < 1 {
        return Err(Error::NegativeArgument(n));
    }
    if e < 1 {
        return Err(Error::NegativeArgument(e));
    }
    ResidueRing::new(n as u64, e as u32, cache)
}

/// Residue of `num(a) den(b) - num(b) den(a)` modulo `Phi_n^e`; zero iff `a == b` there.
pub fn congruence_witness(a: &RatFun, b: &RatFun, n: i64, e: i64, cache: &CyclotomicCache) -> Result<LaurentPoly> {
    let ring = ring_for(n, e, cache)?;
    if ring.phi_divides(a.den(), cache)? || ring.phi_divides(b.den(), cache)? {
        return Err(Error::DenominatorNotUnit(n as u64));
    }
    Ok(ring.cross_difference(a, b))
}

pub fn congruent_mod_cyclotomic(a: &RatFun, b: &RatFun, n: i64, e: i64, cache: &CyclotomicCache) -> Result<bool> {
    Ok(congruence_witness(a, b, n, e, cache)?.is_zero())
}
