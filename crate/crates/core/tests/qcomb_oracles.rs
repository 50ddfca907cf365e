use num_bigint::BigInt;
use qcong_core::{binomial, q_binomial, q_int, q_pochhammer, LaurentPoly, MonomialArg, Rational};

/// Rows of the q-Pascal recurrence `C(t,b) = C(t-1,b-1) + q^b C(t-1,b)`.
fn pascal(rows: usize) -> Vec<Vec<LaurentPoly>> {
    let mut out: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::one()]];
    for t in 1..=rows {
        let prev = &out[t - 1];
        let row = (0..=t)
            .map(|b| {
                let left = if b >= 1 { prev[b - 1].clone() } else { LaurentPoly::zero() };
                let right = if b < t { prev[b].shift(b as i64) } else { LaurentPoly::zero() };
                &left + &right
            })
            .collect();
        out.push(row);
    }
    out
}

#[test]
fn product_formula_matches_pascal() {
    let rows = pascal(40);
    for t in 0..=40i64 {
        for b in 0..=t {
            assert_eq!(q_binomial(t, b).unwrap(), rows[t as usize][b as usize], "t={t} b={b}");
        }
    }
}

#[test]
fn symmetry_and_specialization() {
    let one = Rational::from_integer(1.into());
    for t in 0..=30i64 {
        for b in 0..=t {
            let v = q_binomial(t, b).unwrap();
            assert_eq!(v, q_binomial(t, t - b).unwrap());
            assert_eq!(v.eval(&one).unwrap(), Rational::from_integer(binomial(t, b).unwrap()));
        }
    }
}

#[test]
fn negative_top() {
    for k in 0..=20i64 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(q_binomial(-1, k).unwrap(), LaurentPoly::signed_q_pow(sign, -k * (k + 1) / 2));
    }
    // negative tops through the Pascal recurrence run backwards: C(t-1,b) = q^{-b}(C(t,b) - C(t-1,b-1))
    for t in -5i64..=-1 {
        for b in 1..=10 {
            let lhs = q_binomial(t, b).unwrap();
            let rhs = &q_binomial(t + 1, b).unwrap() - &q_binomial(t, b - 1).unwrap();
            assert_eq!(lhs, rhs.shift(-b), "t={t} b={b}");
        }
    }
    assert_eq!(q_binomial(5, -1).unwrap(), LaurentPoly::zero());
    assert_eq!(q_binomial(3, 4).unwrap(), LaurentPoly::zero());
}

#[test]
fn q_int_is_first_binomial() {
    for n in 1..=40 {
        assert_eq!(q_int(n).unwrap(), q_binomial(n, 1).unwrap());
    }
    assert!(q_int(0).unwrap().is_zero());
    assert!(q_int(-1).is_err());
}

#[test]
fn pochhammer_against_direct_products() {
    for sign in [-1i8, 1] {
        for s in -3..4 {
            for m in 0..6 {
                let mut direct = LaurentPoly::one();
                for i in 0..m {
                    let factor = &LaurentPoly::one() - &LaurentPoly::signed_q_pow(sign as i64, s + i);
                    direct = &direct * &factor;
                }
                assert_eq!(q_pochhammer(MonomialArg::new(sign, s), m).unwrap(), direct);
            }
        }
    }
    assert!(q_pochhammer(MonomialArg::q_pow(1), -1).is_err());
}

#[test]
fn binomial_against_factorials() {
    let fact = |n: i64| (1..=n).fold(BigInt::from(1), |acc, k| acc * k);
    for a in 0..25 {
        for c in 0..=a {
            assert_eq!(binomial(a, c).unwrap(), fact(a) / (fact(c) * fact(a - c)));
        }
        assert_eq!(binomial(a, a + 1).unwrap(), BigInt::from(0));
        assert_eq!(binomial(a, -1).unwrap(), BigInt::from(0));
    }
}
