use num_bigint::BigInt;
use qcong_core::{
    binomial, build_lhs, build_rhs, congruence_witness, pside_values, q_binomial, q_int, q_one_specialization, q_pochhammer,
    ClaimId, ClaimKind, ClaimParams, CyclotomicCache, LaurentPoly, ModPValue, MonomialArg, RatFun, Status, Verifier, Witness,
};

fn p(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64_coeffs(c)
}

fn status(v: &Verifier, c: ClaimId, params: &ClaimParams) -> Status {
    v.verify(c, params).status
}

/// Direct left-hand sums from the public q-series API only.
fn oracle_lhs(claim: ClaimId, n: i64, d: i64) -> RatFun {
    use ClaimId::*;
    let neg = MonomialArg::neg_q_pow;
    let mut acc = RatFun::zero();
    let (lo, hi) = match claim {
        IdT14_1 => (1, n - 1),
        IdT14_2 => (1, n),
        _ => (0, n - 1),
    };
    for k in lo..=hi {
        let qb = q_binomial(2 * k, k + d).unwrap();
        let term = match claim {
            IdT11_1 => &(&qb * &q_pochhammer(neg(k + 1), n - 1 - k).unwrap()) * &LaurentPoly::q_pow(k),
            IdT11_2 => &(&qb * &q_pochhammer(neg(k + 1), n - 1 - k).unwrap().pow(2)) * &LaurentPoly::q_pow(k),
            IdT14_1 | IdT14_2 => {
                let power = if claim == IdT14_1 { 1 } else { 2 };
                let top = &(&qb * &q_pochhammer(neg(k + 1), n - k).unwrap().pow(power)) * &LaurentPoly::q_pow(k);
                acc = &acc + &RatFun::new(top, q_int(k).unwrap()).unwrap();
                continue;
            }
            QcGz1 => &(&qb * &q_pochhammer(neg(k + 1), n - 1 - k).unwrap()) * &LaurentPoly::q_pow(-k * (k + 3) / 2),
            QcGz2 => &(&qb * &q_pochhammer(neg(k), n - 1 - k).unwrap()) * &LaurentPoly::q_pow(-k * (k + 3) / 2),
            QcTau => &qb * &LaurentPoly::q_pow(k),
            _ => unreachable!(),
        };
        acc = &acc + &RatFun::from_poly(term);
    }
    acc
}

#[test]
fn left_sides_match_direct_summation() {
    use ClaimId::*;
    for n in 1..=9 {
        for d in 0..=n {
            for claim in [IdT11_1, IdT11_2, IdT14_1, IdT14_2, QcGz1, QcGz2, QcTau] {
                let params = ClaimParams::nd(n, d);
                if let Ok(lhs) = build_lhs(claim, &params) {
                    assert_eq!(lhs, oracle_lhs(claim, n, d), "{claim} n={n} d={d}");
                }
            }
        }
    }
}

#[test]
fn builder_examples() {
    let nd = ClaimParams::nd;
    assert_eq!(build_lhs(ClaimId::IdT11_1, &nd(2, 1)).unwrap(), RatFun::from_poly(LaurentPoly::q_pow(1)));
    assert_eq!(build_lhs(ClaimId::IdT11_1, &nd(2, 0)).unwrap(), RatFun::from_poly(p(&[1, 2, 1])));
    assert_eq!(build_lhs(ClaimId::IdT11_1, &nd(1, 0)).unwrap(), RatFun::one());
    assert_eq!(build_rhs(ClaimId::IdT11_1, &nd(2, 0)).unwrap(), RatFun::from_poly(p(&[1, 2, 1])));
    assert_eq!(build_rhs(ClaimId::QcTau, &nd(4, 1)).unwrap(), RatFun::zero());
    let lp = ClaimParams { n: Some(4), ..Default::default() };
    assert_eq!(build_rhs(ClaimId::QcLp, &lp).unwrap(), RatFun::from_poly(LaurentPoly::q_pow(5)));
}

#[test]
fn verifier_examples() {
    let v = Verifier::default();
    let nd = ClaimParams::nd;
    for (c, n, d) in [(ClaimId::IdT11_1, 2, 1), (ClaimId::IdT11_2, 3, 1), (ClaimId::IdT14_1, 5, 2)] {
        assert_eq!(status(&v, c, &nd(n, d)), Status::Pass, "{c}");
    }
    // both sides vanish for n = d (mod 2)
    assert_eq!(status(&v, ClaimId::QcC12_1, &nd(3, 1)), Status::Pass);
    assert!(build_rhs(ClaimId::QcC12_1, &nd(3, 1)).unwrap().is_zero());
    let cache = CyclotomicCache::new();
    let one = RatFun::one();
    let gz = nd(2, 1);
    for side in [build_lhs(ClaimId::QcGz2, &gz).unwrap(), build_rhs(ClaimId::QcGz2, &gz).unwrap()] {
        assert!(congruence_witness(&side, &one, 2, 1, &cache).unwrap().is_zero());
    }
    assert_eq!(build_lhs(ClaimId::QcGz2, &gz).unwrap(), RatFun::from_poly(LaurentPoly::q_pow(-2)));
    assert_eq!(build_rhs(ClaimId::QcGz2, &gz).unwrap(), RatFun::from_poly(LaurentPoly::signed_q_pow(-1, 1)));
    let lp = ClaimParams { n: Some(4), d: Some(0), e: Some(2), ..Default::default() };
    assert_eq!(status(&v, ClaimId::QcLp, &lp), Status::Pass);
}

#[test]
fn out_of_domain_skips() {
    let v = Verifier::default();
    let nd = ClaimParams::nd;
    assert_eq!(status(&v, ClaimId::QcC12_1, &nd(1, 0)), Status::Skip);
    assert_eq!(status(&v, ClaimId::IdT14_1, &nd(4, 0)), Status::Skip);
    assert_eq!(status(&v, ClaimId::IdT11_1, &nd(3, 4)), Status::Skip);
    assert_eq!(status(&v, ClaimId::RecT14_1, &nd(3, 2)), Status::Skip);
    assert_eq!(status(&v, ClaimId::PcStM, &ClaimParams::pside(5, 1, 2)), Status::Skip);
    assert_eq!(status(&v, ClaimId::PcC13_4, &ClaimParams::pside(15, 1, 2)), Status::Skip);
    let r = v.verify(ClaimId::QcC12_1, &nd(1, 0));
    assert!(r.witness.is_none() && r.note.is_some());
    // the kind-specific entry points refuse other kinds
    assert_eq!(v.verify_identity(ClaimId::QcC12_1, &nd(3, 1)).status, Status::Skip);
}

#[test]
fn extended_base_case_at_d_equal_n() {
    let v = Verifier::default();
    for n in 1..=8 {
        let params = ClaimParams::nd(n, n);
        assert!(build_lhs(ClaimId::IdT11_1, &params).unwrap().is_zero());
        assert_eq!(status(&v, ClaimId::IdT11_1, &params), Status::Pass);
        assert_eq!(status(&v, ClaimId::IdT11_2, &params), Status::Pass);
    }
}

#[test]
fn identities_imply_congruences() {
    use ClaimId::*;
    let v = Verifier::default();
    for n in 2..=12 {
        for (id, qc) in [(IdT11_1, QcC12_1), (IdT11_2, QcC12_2), (IdT14_1, QcC15_1), (IdT14_2, QcC15_2)] {
            let (lo, hi) = qc.d_range_q(n).unwrap();
            for d in lo..=hi {
                let params = ClaimParams::nd(n, d);
                if status(&v, id, &params) == Status::Pass {
                    assert_eq!(status(&v, qc, &params), Status::Pass, "{qc} n={n} d={d}");
                }
            }
        }
    }
}

#[test]
fn fast_path_agrees_with_exact_path() {
    let v = Verifier::default();
    for &claim in ClaimId::ALL.iter().filter(|c| c.kind() == ClaimKind::QCongruence && **c != ClaimId::QcLp) {
        for n in 2..=14 {
            let (lo, hi) = claim.d_range_q(n).unwrap();
            for d in lo..=hi {
                let params = ClaimParams::nd(n, d);
                let fast = v.verify(claim, &params);
                let exact = v.verify_qcongruence_exact(claim, &params);
                assert_eq!((fast.status, fast.witness), (exact.status, exact.witness), "{claim} n={n} d={d}");
            }
        }
    }
}

#[test]
fn higher_modulus_power_is_checked_exactly() {
    // The e = 1 folding shortcut must not leak into e = 2 checks: compare with
    // reducing the plain difference of the two polynomial sides.
    let v = Verifier::default();
    let cache = CyclotomicCache::new();
    let mut fails = 0;
    for n in 2..=9 {
        for d in 0..n {
            let params = ClaimParams::nd(n, d).with_e(2);
            let diff = &build_lhs(ClaimId::QcC12_2, &params).unwrap() - &build_rhs(ClaimId::QcC12_2, &params).unwrap();
            assert!(diff.is_laurent());
            let holds = qcong_core::reduce_mod_cyclotomic(diff.num(), n, 2, &cache).unwrap().is_zero();
            let r = v.verify(ClaimId::QcC12_2, &params);
            assert_eq!(r.status == Status::Pass, holds, "n={n} d={d}");
            fails += usize::from(!holds);
        }
    }
    assert!(fails > 0);
}

#[test]
fn pside_examples() {
    let v = Verifier::default();
    let r = v.verify(ClaimId::PcC13_2, &ClaimParams::pside(5, 1, 0));
    assert_eq!(r.status, Status::Pass);
    let vals = pside_values(ClaimId::PcC13_2, &ClaimParams::pside(5, 1, 0)).unwrap();
    assert_eq!(vals.computed.residue(), 1);
    let vals = pside_values(ClaimId::PcC13_4, &ClaimParams::pside(3, 1, 1)).unwrap();
    assert_eq!(vals.computed, ModPValue::from_i64(-1, 3));
    let r = v.verify(ClaimId::PcC16_4, &ClaimParams::pside(3, 1, 1));
    assert_eq!(r.status, Status::Fail);
    match r.witness.unwrap() {
        Witness::ModP { computed, expected } => {
            assert_eq!(computed.residue(), 2);
            assert_eq!(expected.residue(), 1);
        }
        w => panic!("unexpected witness {w}"),
    }
    assert_eq!(v.verify(ClaimId::PcC16_4, &ClaimParams::pside(3, 1, 2)).status, Status::Pass);
}

#[test]
fn pside_sums_against_naive_rationals() {
    use num_rational::BigRational;
    // sum_{k<=3} binom(2k,k+d)/(k 4^k) is 29/64 at d = 1 and 1/16 at d = 2
    let sum = |d: i64| -> BigRational {
        (1..=3i64)
            .map(|k| {
                BigRational::new(binomial(2 * k, k + d).unwrap(), BigInt::from(k) * BigInt::from(4).pow(k as u32))
            })
            .sum()
    };
    assert_eq!(sum(1), BigRational::new(29.into(), 64.into()));
    assert_eq!(sum(2), BigRational::new(1.into(), 16.into()));
    assert_eq!(pside_values(ClaimId::PcC16_4, &ClaimParams::pside(3, 1, 1)).unwrap().computed, qcong_core::modp(&sum(1), 3).unwrap());
    let two = BigRational::from_integer(2.into());
    assert_eq!(pside_values(ClaimId::PcC16_4, &ClaimParams::pside(3, 1, 2)).unwrap().computed, qcong_core::modp(&(sum(2) * two), 3).unwrap());
}

#[test]
fn pside_is_symmetric_in_d() {
    for k in 0..30 {
        for d in 0..=k {
            assert_eq!(binomial(2 * k, k + d).unwrap(), binomial(2 * k, k - d).unwrap());
        }
    }
}

#[test]
fn q_one_specialization_chain() {
    for pr in [3, 5, 7] {
        for d in 0..pr {
            let s = q_one_specialization(ClaimId::QcC12_2, pr, d).unwrap();
            let direct = pside_values(ClaimId::PcC13_4, &ClaimParams::pside(pr, 1, d)).unwrap();
            assert_eq!(s.computed, direct.computed);
            assert_eq!(s.expected, direct.expected);
        }
    }
}

#[test]
fn corrected_half_follows_from_q_congruence() {
    // At q = 1 the squared-Pochhammer congruence forces d * sum = 1/2 for every d,
    // including the branch where the printed statement says -1/2.
    let v = Verifier::default();
    for pr in [3, 5, 7, 11] {
        for d in 1..pr {
            assert_eq!(status(&v, ClaimId::QcC15_2, &ClaimParams::nd(pr, d)), Status::Pass);
            let s = q_one_specialization(ClaimId::QcC15_2, pr, d).unwrap();
            assert_eq!(s.computed, s.expected);
            let printed = pside_values(ClaimId::PcC16_4, &ClaimParams::pside(pr, 1, d)).unwrap();
            assert_eq!(printed.computed, s.computed);
            assert_eq!(printed.computed == printed.expected, (pr - d) % 2 != 0);
        }
    }
}

#[test]
fn recurrence_and_lemma_examples() {
    let v = Verifier::default();
    for (c, n, d) in [(ClaimId::RecQb18, 1, 0), (ClaimId::RecQb18, 4, 1), (ClaimId::RecT14_2, 3, 1)] {
        assert_eq!(status(&v, c, &ClaimParams::nd(n, d)), Status::Pass);
    }
    assert_eq!(status(&v, ClaimId::LemQLucas, &ClaimParams::qlucas(3, 1, 2, 0, 2)), Status::Pass);
    let k = |n, a: Option<i64>, k| ClaimParams { n: Some(n), a, k: Some(k), ..Default::default() };
    assert_eq!(status(&v, ClaimId::Lem2N1, &k(3, None, 3)), Status::Pass);
    assert_eq!(status(&v, ClaimId::LemAn, &k(3, Some(2), 3)), Status::Pass);
}

#[test]
fn broken_right_side_is_caught() {
    // A perturbed right-hand side must not pass: (1+q)^2 + q^3 differs from S(2, 0).
    let lhs = build_lhs(ClaimId::IdT11_1, &ClaimParams::nd(2, 0)).unwrap();
    let wrong = RatFun::from_poly(p(&[1, 2, 1, 1]));
    assert_ne!(lhs, wrong);
    let cache = CyclotomicCache::new();
    assert!(!congruence_witness(&lhs, &RatFun::from_poly(p(&[2])), 3, 1, &cache).unwrap().is_zero());
}
