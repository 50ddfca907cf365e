//! Multi-modular gcd of primitive integer polynomials.
//!
//! Images modulo word-size primes are combined by CRT until the lifted
//! candidate divides both inputs exactly over the integers; the trial
//! division makes the result unconditional.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Gcd of two primitive integer polynomials (ascending coefficients, positive
/// leading coefficient, degree >= 1). Result is primitive with positive leading coefficient.
pub(crate) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lca = a.last().expect("nonzero");
    let lcb = b.last().expect("nonzero");
    let gamma = lca.gcd(lcb);
    let mut best_deg = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<Vec<BigInt>> = None;

    for p in Primes::below(1u64 << 62) {
        let pb = BigInt::from(p);
        if (lca % &pb).is_zero() || (lcb % &pb).is_zero() {
            continue;
        }
        let g = gcd_mod(reduce(a, p), reduce(b, p), p);
        let deg = g.len() - 1;
        if deg == 0 {
            return vec![BigInt::one()];
        }
        if deg > best_deg {
            continue;
        }
        if deg < best_deg {
            best_deg = deg;
            acc = vec![BigInt::zero(); deg + 1];
            modulus = BigInt::one();
            last = None;
        }
        let gp = (&gamma % &pb + &pb) % &pb;
        let gp = gp.to_u64().unwrap();
        let m_inv = inv_mod((&modulus % &pb).to_u64().unwrap(), p);
        for (slot, c) in acc.iter_mut().zip(&g) {
            let target = mul_mod(*c, gp, p);
            let cur = (&*slot % &pb + &pb) % &pb;
            let diff = (target + p - cur.to_u64().unwrap()) % p;
            let t = mul_mod(diff, m_inv, p);
            *slot += &modulus * BigInt::from(t);
        }
        modulus *= &pb;

        let half = &modulus >> 1;
        let lifted: Vec<BigInt> = acc
            .iter()
            .map(|c| if c > &half { c - &modulus } else { c.clone() })
            .collect();
        let candidate = make_primitive(lifted);
        let small = {
            let bound = modulus.bits() / 2;
            candidate.iter().all(|c| c.bits() + 2 < bound)
        };
        if (small || last.as_ref() == Some(&candidate))
            && divides(a, &candidate)
            && divides(b, &candidate)
        {
            return candidate;
        }
        last = Some(candidate);
    }
    unreachable!("prime stream is unbounded for practical inputs")
}

fn make_primitive(mut c: Vec<BigInt>) -> Vec<BigInt> {
    while c.len() > 1 && c.last().map_or(false, |x| x.is_zero()) {
        c.pop();
    }
    let content = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return c;
    }
    let negate = c.last().unwrap().is_negative();
    c.into_iter()
        .map(|x| {
            let y = x / &content;
            if negate {
                -y
            } else {
                y
            }
        })
        .collect()
}

/// True if `d` divides `a` exactly in Z[q].
fn divides(a: &[BigInt], d: &[BigInt]) -> bool {
    if d.len() > a.len() {
        return false;
    }
    let db = d.len() - 1;
    let lc = &d[db];
    let mut rem = a.to_vec();
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let (qc, r) = rem[i].div_rem(lc);
        if !r.is_zero() {
            return false;
        }
        let shift = i - db;
        for (j, c) in d.iter().enumerate() {
            if !c.is_zero() {
                rem[shift + j] -= &qc * c;
            }
        }
    }
    rem[..db].iter().all(|c| c.is_zero())
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    a.iter()
        .map(|c| {
            let r = c % &pb;
            let r = if r.is_negative() { r + &pb } else { r };
            r.to_u64().unwrap()
        })
        .collect()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn make_monic(v: &mut [u64], p: u64) {
    let inv = inv_mod(*v.last().unwrap(), p);
    for c in v.iter_mut() {
        *c = mul_mod(*c, inv, p);
    }
}

/// Monic gcd over F_p. Inputs need not be trimmed.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        make_monic(&mut b, p);
        rem_monic(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
    }
    make_monic(&mut a, p);
    a
}

/// `a <- a mod b` for monic `b`; result trimmed.
fn rem_monic(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    while a.len() > db {
        let top = a.len() - 1;
        let c = a[top];
        if c != 0 {
            let shift = top - db;
            for (j, bc) in b.iter().enumerate() {
                if *bc != 0 {
                    let t = mul_mod(c, *bc, p);
                    let slot = &mut a[shift + j];
                    *slot = if *slot >= t { *slot - t } else { *slot + p - t };
                }
            }
        }
        a.pop();
    }
    trim(a);
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Descending primes below a bound.
struct Primes {
    next: u64,
}

impl Primes {
    fn below(bound: u64) -> Self {
        Self { next: bound - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 2 {
            let c = self.next;
            self.next -= 1;
            if is_prime_u64(c) {
                return Some(c);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0..2000u64 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), trial, "{n}");
        }
        assert!(is_prime_u64((1u64 << 61) - 1));
    }

    #[test]
    fn gcd_with_large_coefficients() {
        // (3q^2 + 1000000007) * (q + 5) and (3q^2 + 1000000007) * (2q - 1)
        let g = v(&[1_000_000_007, 0, 3]);
        let a = v(&[5_000_000_035, 1_000_000_007, 15, 3]);
        let b = v(&[-1_000_000_007, 2_000_000_014, -3, 6]);
        assert_eq!(gcd_primitive(&a, &b), g);
    }

    #[test]
    fn coprime_inputs() {
        assert_eq!(gcd_primitive(&v(&[1, 1]), &v(&[1, 1, 1])), v(&[1]));
    }
}
