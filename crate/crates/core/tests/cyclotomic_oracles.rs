use proptest::prelude::*;
use qcong_core::{
    congruent_mod_cyclotomic, cyclotomic, euler_phi, is_prime, moebius, reduce_mod_cyclotomic, CyclotomicCache, LaurentPoly,
    RatFun, Rational,
};

fn x_pow_minus_one(n: i64) -> LaurentPoly {
    &LaurentPoly::q_pow(n) - &LaurentPoly::one()
}

fn prime_power_base(n: u64) -> Option<u64> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    (m == 1 && is_prime(p)).then_some(p)
}

#[test]
fn divisor_products_and_structure() {
    let cache = CyclotomicCache::new();
    for n in 1..=200i64 {
        let mut prod = LaurentPoly::one();
        for d in (1..=n).filter(|d| n % d == 0) {
            prod = &prod * &cyclotomic(d, &cache).unwrap();
        }
        assert_eq!(prod, x_pow_minus_one(n), "n={n}");
        let phi = cyclotomic(n, &cache).unwrap();
        assert_eq!(phi.max_exp(), Some(euler_phi(n).unwrap()));
        assert!(phi.is_integral());
        if n >= 2 {
            let deg = phi.max_exp().unwrap();
            for (e, c) in phi.terms() {
                assert_eq!(&phi.coeff(deg - e), c, "palindromic n={n}");
            }
        }
        let at_one = phi.eval(&Rational::from_integer(1.into())).unwrap();
        let expect = match n {
            1 => 0,
            _ => prime_power_base(n as u64).map_or(1, |p| p as i64),
        };
        assert_eq!(at_one, Rational::from_integer(expect.into()), "n={n}");
    }
}

#[test]
fn moebius_product_oracle() {
    let cache = CyclotomicCache::new();
    for n in 1..=100i64 {
        let mut num = LaurentPoly::one();
        let mut den = LaurentPoly::one();
        for d in (1..=n).filter(|d| n % d == 0) {
            match moebius(n / d).unwrap() {
                1 => num = &num * &x_pow_minus_one(d),
                -1 => den = &den * &x_pow_minus_one(d),
                _ => {}
            }
        }
        let oracle = RatFun::new(num, den).unwrap();
        assert_eq!(oracle, RatFun::from_poly(cyclotomic(n, &cache).unwrap()), "n={n}");
    }
}

#[test]
fn totient_by_counting() {
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    for n in 1..=300 {
        let count = (1..=n).filter(|k| gcd(*k, n) == 1).count() as i64;
        assert_eq!(euler_phi(n).unwrap(), count);
    }
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-30i64..30, prop::collection::vec(-20i64..21, 0..40)).prop_map(|(s, c)| LaurentPoly::from_i64_coeffs(&c).shift(s))
}

proptest! {
    #[test]
    fn reduction_is_multiplicative(f in poly(), g in poly(), n in 1i64..40, e in 1i64..4) {
        let cache = CyclotomicCache::new();
        let r = |x: &LaurentPoly| reduce_mod_cyclotomic(x, n, e, &cache).unwrap();
        prop_assert_eq!(r(&(&f * &g)), r(&(&r(&f) * &r(&g))));
        prop_assert_eq!(r(&(&f + &g)), &r(&f) + &r(&g));
        let res = r(&f);
        if !res.is_zero() {
            prop_assert!(res.min_exp().unwrap() >= 0);
            prop_assert!(res.max_exp().unwrap() < e * euler_phi(n).unwrap());
        }
        // f - r(f) is divisible by Phi_n^e
        let m = cyclotomic(n, &cache).unwrap().pow(e as u32);
        let diff = &f - &res;
        let lo = diff.min_exp().unwrap_or(0).min(0);
        prop_assert!(diff.shift(-lo).divrem(&m).unwrap().1.is_zero());
    }

    #[test]
    fn congruence_is_an_equivalence_respecting_operations(
        a in poly(), b in poly(), c in poly(), n in 2i64..25,
    ) {
        let cache = CyclotomicCache::new();
        let phi = cyclotomic(n, &cache).unwrap();
        let rf = RatFun::from_poly;
        let cong = |x: &RatFun, y: &RatFun| congruent_mod_cyclotomic(x, y, n, 1, &cache).unwrap();
        let (x, y, z) = (rf(a.clone()), rf(&a + &(&phi * &b)), rf(c.clone()));
        prop_assert!(cong(&x, &x));
        prop_assert!(cong(&x, &y) && cong(&y, &x));
        let w = rf(&y.num().clone() - &(&phi * &c));
        prop_assert!(cong(&y, &w) && cong(&x, &w));
        prop_assert!(cong(&(&x + &z), &(&y + &z)));
        prop_assert!(cong(&(&x * &z), &(&y * &z)));
    }
}
