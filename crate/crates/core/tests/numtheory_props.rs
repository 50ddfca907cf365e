use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use qcong_core::{fibonacci, is_prime, jacobi, lucas_seq, modp, modp_rational, LucasKind, Rational};

proptest! {
    #[test]
    fn fibonacci_addition_law(m in 0i64..=50, n in 0i64..=50) {
        prop_assert_eq!(fibonacci(m + n), fibonacci(m) * fibonacci(n + 1) + fibonacci(m - 1) * fibonacci(n));
    }

    #[test]
    fn lucas_interlock(n in 0i64..=50, x in -10i64..=10) {
        let u = lucas_seq(LucasKind::U, n, x).unwrap();
        let v = lucas_seq(LucasKind::V, n, x).unwrap();
        prop_assert_eq!(&v * &v - BigInt::from(x * x - 4) * &u * &u, BigInt::from(4));
    }

    #[test]
    fn modp_is_a_ring_map(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let p = 10007u64;
        let x = Rational::new(a.into(), b.into());
        let y = Rational::new(c.into(), d.into());
        let r = |z: &Rational| modp(z, p).unwrap().residue() as u128;
        let pp = p as u128;
        prop_assert_eq!(r(&(&x + &y)), (r(&x) + r(&y)) % pp);
        prop_assert_eq!(r(&(&x * &y)), (r(&x) * r(&y)) % pp);
    }
}

#[test]
fn negative_fibonacci_reflection() {
    for n in 1..40 {
        let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
        assert_eq!(fibonacci(-n), fibonacci(n) * sign);
    }
}

#[test]
fn lucas_special_arguments() {
    for n in 0..40 {
        assert_eq!(lucas_seq(LucasKind::U, n, 2).unwrap(), BigInt::from(n));
        assert_eq!(lucas_seq(LucasKind::V, n, 2).unwrap(), BigInt::from(2));
        let u0 = [0, 1, 0, -1][(n % 4) as usize];
        let v0 = [2, 0, -2, 0][(n % 4) as usize];
        assert_eq!(lucas_seq(LucasKind::U, n, 0).unwrap(), BigInt::from(u0));
        assert_eq!(lucas_seq(LucasKind::V, n, 0).unwrap(), BigInt::from(v0));
    }
}

#[test]
fn jacobi_matches_euler_criterion() {
    for p in (3..=97u64).filter(|&p| is_prime(p)) {
        for a in 0..p {
            let pow = BigInt::from(a).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
            let expect = if pow.is_zero() {
                0
            } else if pow == BigInt::from(1) {
                1
            } else {
                -1
            };
            assert_eq!(jacobi(a as i64, p as i64).unwrap() as i32, expect, "a={a} p={p}");
        }
    }
}

#[test]
fn jacobi_is_multiplicative_in_the_modulus() {
    for a in -20i64..20 {
        for (m, n) in [(3, 5), (3, 7), (5, 7), (9, 11), (15, 7)] {
            assert_eq!(jacobi(a, m * n).unwrap(), jacobi(a, m).unwrap() * jacobi(a, n).unwrap());
        }
    }
}

#[test]
fn modp_rational_examples() {
    let b = |x: i64| BigInt::from(x);
    assert_eq!(modp_rational(&b(1), &b(2), 5).unwrap().residue(), 3);
    assert_eq!(modp_rational(&b(35), &b(8), 5).unwrap().residue(), 0);
    assert!(modp_rational(&b(1), &b(5), 5).is_err());
    assert!(modp_rational(&b(-7), &b(3), 11).unwrap().residue() < 11);
}
