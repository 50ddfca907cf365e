//! Fibonacci numbers, Lucas sequences `u_n(x)`, `v_n(x)`, the Jacobi symbol
//! and rationals reduced modulo an odd prime.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

/// `F_n` for any integer `n`, with `F_{-n} = (-1)^{n+1} F_n`.
pub fn fibonacci(n: i64) -> BigInt {
    let m = n.unsigned_abs();
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..m {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    if n < 0 && m % 2 == 0 {
        -a
    } else {
        a
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LucasKind {
    U,
    V,
}

/// `w_{n+1} = x w_n - w_{n-1}` with `u_0 = 0, u_1 = 1` and `v_0 = 2, v_1 = x`.
pub fn lucas_seq(kind: LucasKind, n: i64, x: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::IndexOutOfRange(n));
    }
    let x = BigInt::from(x);
    let (w0, w1) = match kind {
        LucasKind::U => (BigInt::zero(), BigInt::one()),
        LucasKind::V => (BigInt::from(2), x.clone()),
    };
    if n == -1 {
        return Ok(&x * &w0 - &w1);
    }
    let (mut a, mut b) = (w0, w1);
    for _ in 0..n {
        let next = &x * &b - &a;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
pub fn jacobi(a: i64, n: i64) -> Result<i8> {
    if n <= 0 || n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    Ok(if n == 1 { t } else { 0 })
}

pub fn is_prime(n: u64) -> bool {
    crate::modgcd::is_prime_u64(n)
}

/// A residue class modulo an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModPValue {
    residue: u64,
    prime: u64,
}

impl ModPValue {
    pub fn new(value: &BigInt, prime: u64) -> Self {
        assert!(prime >= 3 && is_prime(prime), "modulus must be an odd prime");
        let r = value.mod_floor(&BigInt::from(prime)).to_u64().unwrap();
        Self { residue: r, prime }
    }

    pub fn from_i64(value: i64, prime: u64) -> Self {
        Self::new(&BigInt::from(value), prime)
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }
}

impl fmt::Display for ModPValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.prime)
    }
}

/// `num / den` reduced modulo `p`.
pub fn modp_rational(num: &BigInt, den: &BigInt, p: u64) -> Result<ModPValue> {
    if den.is_zero() {
        return Err(Error::DenominatorDivisible(p));
    }
    modp(&Rational::new(num.clone(), den.clone()), p)
}

pub fn modp(x: &Rational, p: u64) -> Result<ModPValue> {
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(Error::DenominatorDivisible(p));
    }
    // Fermat inverse of the denominator
    let inv = den.modpow(&(&pb - 2u32), &pb);
    let r = (x.numer().mod_floor(&pb) * inv).mod_floor(&pb);
    debug_assert!(!r.is_negative());
    Ok(ModPValue { residue: r.to_u64().unwrap(), prime: p })
}
