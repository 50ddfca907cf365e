//! Fast q-congruence checks modulo `Phi_n` through the cyclic ring `Z[q]/(q^n - 1)`.
//!
//! Every `e = 1` congruence only needs the left-hand sums modulo `Phi_n`, and
//! `Phi_n` divides `q^n - 1`, so all products can be folded into length-`n`
//! vectors. Reduction to `Phi_n` happens once, on the final cross difference.
//! The per-`n` tables (q-binomials of rows `2k`, Pochhammer tails) are shared
//! by all `d` and all claims.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::builders::{build_lhs, build_rhs};
use super::{ClaimId, ClaimParams};
use crate::cyclotomic::{congruence_witness, CyclotomicCache, ResidueRing};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

type Cyc = Vec<BigInt>;

fn zero(n: usize) -> Cyc {
    vec![BigInt::zero(); n]
}

fn monomial(n: usize, e: i64) -> Cyc {
    let mut v = zero(n);
    v[e.rem_euclid(n as i64) as usize] = BigInt::one();
    v
}

fn add_rot(out: &mut Cyc, v: &Cyc, s: usize) {
    let n = out.len();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out[(i + s) % n] += c;
        }
    }
}

fn rot(v: &Cyc, s: i64) -> Cyc {
    let n = v.len();
    let mut out = zero(n);
    add_rot(&mut out, v, s.rem_euclid(n as i64) as usize);
    out
}

/// `v * (1 + q^s)`.
fn mul_one_plus(v: &Cyc, s: i64) -> Cyc {
    let mut out = v.clone();
    add_rot(&mut out, v, s.rem_euclid(v.len() as i64) as usize);
    out
}

fn mul(a: &Cyc, b: &Cyc) -> Cyc {
    let n = a.len();
    let mut out = zero(n);
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let t = if i + j >= n { i + j - n } else { i + j };
                out[t] += x * y;
            }
        }
    }
    out
}

/// Multiply-accumulate `out += a * b`.
fn mul_add(out: &mut Cyc, a: &Cyc, b: &Cyc) {
    let n = a.len();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let t = if i + j >= n { i + j - n } else { i + j };
                out[t] += x * y;
            }
        }
    }
}

fn scaled(v: &Cyc, c: &BigInt) -> Cyc {
    v.iter().map(|x| x * c).collect()
}

/// `[d] = 1 + q + ... + q^{d-1}` folded.
fn q_int(n: usize, d: i64) -> Cyc {
    let mut v = zero(n);
    for i in 0..d {
        v[(i as usize) % n] += 1;
    }
    v
}

/// `f = fold / scale` in the cyclic ring.
fn fold(f: &LaurentPoly, n: usize) -> (BigInt, Cyc) {
    if f.is_zero() {
        return (BigInt::one(), zero(n));
    }
    let (scale, offset, coeffs) = f.clear_denominators();
    let mut v = zero(n);
    for (i, c) in coeffs.iter().enumerate() {
        v[(offset + i as i64).rem_euclid(n as i64) as usize] += c;
    }
    (scale, v)
}

const WEIGHT_KINDS: usize = 7;

pub(crate) struct CyclicTables {
    n: usize,
    /// `rows[k][j] = [2k, k+j]` for `0 <= j <= k < n`.
    rows: Vec<Vec<Cyc>>,
    /// `last[d] = [2n-1, n+d-1]`.
    last: Vec<Cyc>,
    /// `a[k] = prod_{i=k+1}^{n-1} (1 + q^i)`.
    a: Vec<Cyc>,
    /// `b[k] = prod_{i=k}^{n-2} (1 + q^i)`.
    b: Vec<Cyc>,
    /// `prod_{j=1}^{n-1} [j]` and its cofactors `den0 / [k]`.
    den0: OnceLock<(Cyc, Vec<Cyc>)>,
    weights: [OnceLock<Vec<Cyc>>; WEIGHT_KINDS],
}

impl fmt::Debug for CyclicTables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CyclicTables").field("n", &self.n).finish_non_exhaustive()
    }
}

impl CyclicTables {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut rows = Vec::with_capacity(n);
        let mut last = Vec::new();
        // Pascal: [t, b] = [t-1, b-1] + q^b [t-1, b]
        let mut prev: Vec<Cyc> = vec![monomial(n, 0)];
        rows.push(vec![prev[0].clone()]);
        for t in 1..2 * n {
            let mut row = Vec::with_capacity(t + 1);
            for b in 0..=t {
                let mut v = if b >= 1 { prev[b - 1].clone() } else { zero(n) };
                if b < t {
                    add_rot(&mut v, &prev[b], b % n);
                }
                row.push(v);
            }
            if t % 2 == 0 && t / 2 < n {
                let k = t / 2;
                rows.push(row[k..=2 * k].to_vec());
            }
            if t == 2 * n - 1 {
                last = row[n - 1..2 * n - 1].to_vec();
            }
            prev = row;
        }
        let mut a = vec![monomial(n, 0); n];
        let mut b = vec![monomial(n, 0); n];
        for k in (0..n - 1).rev() {
            a[k] = mul_one_plus(&a[k + 1], k as i64 + 1);
            b[k] = mul_one_plus(&b[k + 1], k as i64);
        }
        Self { n, rows, last, a, b, den0: OnceLock::new(), weights: Default::default() }
    }

    fn den0(&self) -> &(Cyc, Vec<Cyc>) {
        self.den0.get_or_init(|| {
            let n = self.n;
            // prefix[j] = [1]...[j], suffix[j] = [j]...[n-1]
            let mut prefix = vec![monomial(n, 0)];
            for j in 1..n {
                prefix.push(mul(&prefix[j - 1], &q_int(n, j as i64)));
            }
            let mut suffix = vec![monomial(n, 0); n + 1];
            for j in (1..n).rev() {
                suffix[j] = mul(&suffix[j + 1], &q_int(n, j as i64));
            }
            let mut ex = vec![zero(n)];
            for k in 1..n {
                ex.push(mul(&prefix[k - 1], &suffix[k + 1]));
            }
            (prefix[n - 1].clone(), ex)
        })
    }

    fn weights(&self, claim: ClaimId) -> &[Cyc] {
        use ClaimId::*;
        let slot = match claim {
            QcC12_1 => 0,
            QcC12_2 => 1,
            QcGz1 => 2,
            QcGz2 => 3,
            QcTau => 4,
            QcC15_1 => 5,
            QcC15_2 => 6,
            _ => unreachable!(),
        };
        self.weights[slot].get_or_init(|| {
            let n = self.n;
            (0..n)
                .map(|k| {
                    let ki = k as i64;
                    match claim {
                        QcC12_1 => rot(&self.a[k], ki),
                        QcC12_2 => rot(&mul(&self.a[k], &self.a[k]), ki),
                        QcGz1 => rot(&self.a[k], -ki * (ki + 3) / 2),
                        QcGz2 => rot(&self.b[k], -ki * (ki + 3) / 2),
                        QcTau => monomial(n, ki),
                        QcC15_1 | QcC15_2 if k == 0 => zero(n),
                        QcC15_1 => {
                            let w = mul(&self.a[k], &self.den0().1[k]);
                            rot(&scaled(&w, &BigInt::from(2)), ki)
                        }
                        QcC15_2 => {
                            let sq = mul(&self.a[k], &self.a[k]);
                            let w = mul(&sq, &self.den0().1[k]);
                            rot(&scaled(&w, &BigInt::from(4)), ki)
                        }
                        _ => unreachable!(),
                    }
                })
                .collect()
        })
    }

    /// Left-hand side as `(numerator, denominator)` in the cyclic ring.
    fn lhs(&self, claim: ClaimId, d: usize) -> (Cyc, Cyc) {
        let n = self.n;
        let w = self.weights(claim);
        let mut s = zero(n);
        for k in d..n {
            mul_add(&mut s, &self.rows[k][d], &w[k]);
        }
        let di = d as i64;
        match claim {
            ClaimId::QcC15_1 => (mul(&q_int(n, di), &s), self.den0().0.clone()),
            ClaimId::QcC15_2 => {
                // k = n term: q^n [2n, n+d] / [n] = q^n (1 + q^n) [2n-1, n+d-1] / [n+d]
                let den0 = &self.den0().0;
                let top = q_int(n, n as i64 + di);
                let mut inner = mul(&top, &s);
                mul_add(&mut inner, &scaled(&self.last[d], &BigInt::from(2)), den0);
                (mul(&q_int(n, di), &inner), mul(den0, &top))
            }
            _ => (s, monomial(n, 0)),
        }
    }
}

pub(crate) fn supports(claim: ClaimId) -> bool {
    use ClaimId::*;
    matches!(claim, QcC12_1 | QcC12_2 | QcC15_1 | QcC15_2 | QcGz1 | QcGz2 | QcTau)
}

/// Residue of the congruence at `e = 1`; zero means it holds. A nonzero
/// residue is recomputed along the exact path so the witness is canonical.
pub(crate) fn check(tables: &CyclicTables, claim: ClaimId, params: &ClaimParams, cache: &CyclotomicCache) -> Result<LaurentPoly> {
    let n = tables.n;
    let d = params.d.unwrap() as usize;
    let ring = ResidueRing::new(n as u64, 1, cache)?;
    let rhs = build_rhs(claim, params)?;
    let (ln, ld) = tables.lhs(claim, d);
    let (sn, rn) = fold(rhs.num(), n);
    let (sd, rd) = fold(rhs.den(), n);
    let ld_r = ring.reduce_int(0, &ld);
    let rd_r = ring.reduce_int(0, &rd);
    if ring.is_zero(&ld_r) || ring.is_zero(&rd_r) {
        return Err(Error::DenominatorNotUnit(n as u64));
    }
    // lhs = ln / ld, rhs = (rn / sn) / (rd / sd)
    let x = ring.scale(&ring.mul(&ring.reduce_int(0, &ln), &rd_r), &sn);
    let y = ring.scale(&ring.mul(&ring.reduce_int(0, &rn), &ld_r), &sd);
    let diff = ring.sub(&x, &y);
    if ring.is_zero(&diff) {
        return Ok(LaurentPoly::zero());
    }
    let lhs = build_lhs(claim, params)?;
    congruence_witness(&lhs, &rhs, n as i64, 1, cache)
}
