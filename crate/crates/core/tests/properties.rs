mod common;

use fibsum::arith::{format_rational, isqrt, parse_rational, quad_to_decimal, BigInt, BigRational, QuadRat};
use fibsum::identities::{check_identity, sweep_identities, IdentityId};
use fibsum::sequences::{fib, lucas, phi_pow, phi_powi};
use fibsum::telescope::{lemma_product_finite, telescope_finite, telescope_finite_alt, ProductMode, SeqFn};
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

fn quad() -> impl Strategy<Value = QuadRat> {
    (-50i64..50, -50i64..50, 1i64..30).prop_map(|(a, b, d)| QuadRat::new(a.into(), b.into(), d.into()).unwrap())
}

/// Rough value for ordering checks on well-separated inputs.
fn approx(x: &QuadRat) -> f64 {
    let (a, b, d) = x.parts();
    let f = |n: &BigInt| n.to_string().parse::<f64>().unwrap();
    (f(a) + f(b) * 5f64.sqrt()) / f(d)
}

proptest! {
    #[test]
    fn field_axioms(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, QuadRat::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), QuadRat::one());
        }
    }

    #[test]
    fn order_agrees_with_magnitude(x in quad(), y in quad()) {
        let (ax, ay) = (approx(&x), approx(&y));
        if (ax - ay).abs() > 1e-6 {
            prop_assert_eq!(x < y, ax < ay);
        }
        prop_assert_eq!(x.signum(), if x.is_zero() { 0 } else if ax > 0.0 { 1 } else { -1 });
    }

    #[test]
    fn string_round_trip(x in quad()) {
        prop_assert_eq!(x.to_string().parse::<QuadRat>().unwrap(), x);
    }

    #[test]
    fn rational_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = BigRational::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    /// Decimal digits against `floor((a·10^k + isqrt(5·b²·10^{2k}))/d)` for
    /// non-negative parts.
    #[test]
    fn decimal_truncation_oracle(a in 0i64..1000, b in 0i64..1000, d in 1i64..1000, k in 1usize..30) {
        let x = QuadRat::new(a.into(), b.into(), d.into()).unwrap();
        let s = quad_to_decimal(&x, k).unwrap();
        let (a, b, d) = x.parts();
        let scale = num_traits::pow(BigInt::from(10), k);
        let sb = b * &scale;
        let floor = (a * &scale + isqrt(&(&sb * &sb * 5))).div_floor(d);
        let printed: BigInt = s.replace('.', "").parse().unwrap();
        prop_assert!(printed == floor || printed == &floor + 1, "{} vs floor {}", s, floor);
    }

    #[test]
    fn docagne(m in 0u64..400, n in 0u64..400) {
        let (m, n) = (m.max(n), m.min(n));
        let lhs = fib(m) * fib(n + 1) - fib(m + 1) * fib(n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(lhs, fib(m - n) * sign);
    }

    #[test]
    fn lucas_from_neighbours(n in 1u64..3000) {
        prop_assert_eq!(lucas(n), fib(n - 1) + fib(n + 1));
    }

    #[test]
    fn phi_power_additive(a in 0u64..300, b in 0u64..300) {
        prop_assert_eq!(phi_pow(a + b), phi_pow(a) * phi_pow(b));
    }

    #[test]
    fn phi_negative_powers(e in -200i64..200) {
        prop_assert_eq!(phi_powi(e) * phi_powi(-e), QuadRat::one());
    }

    /// Summing 9a and 9b gives `2F_{u+v} + (-1)^v 2F_{u-v} = 2F_u L_v`.
    #[test]
    fn nine_a_plus_nine_b(u in 0i64..500, v in 0i64..500) {
        let (u, v) = (u.max(v), u.min(v));
        prop_assert!(check_identity(IdentityId::I9a, &[u, v]).unwrap());
        prop_assert!(check_identity(IdentityId::I9b, &[u, v]).unwrap());
        let sign = if v % 2 == 0 { 1 } else { -1 };
        let lhs = fib((u + v) as u64) * 2 + fib((u - v) as u64) * 2 * sign;
        prop_assert_eq!(lhs, fib(u as u64) * lucas(v as u64) * 2);
    }

    #[test]
    fn telescoping_plain(q in 1u64..6, extra in 0u64..10) {
        let (l, r) = telescope_finite(&SeqFn::recip_fib(), q, q + extra).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn telescoping_alternating(q in 1u64..6, n in 1u64..12) {
        let (l, r) = telescope_finite_alt(&SeqFn::fib_over_lucas(), q, n).unwrap();
        prop_assert_eq!(l, r);
    }

    /// The product lemma against a double loop written out here.
    #[test]
    fn product_lemma_brute_force(m in 1u64..4, n in 1u64..4, q in 1u64..5, big_n in 1u64..8) {
        let f = SeqFn::lucas_over_fib();
        let mode = if q % 2 == 0 { ProductMode::AltQEven } else { ProductMode::AltQOdd };
        for mode in [ProductMode::Plain, mode] {
            let (lhs, rhs) = lemma_product_finite(&f, m, n, q, big_n, mode).unwrap();
            let mut brute = QuadRat::zero();
            for k in 1..=big_n {
                let mut prod = QuadRat::one();
                for j in 1..m {
                    prod = prod * f.at(n * k + j * n * q);
                }
                let outer = f.at(n * k + m * n * q);
                let bracket = match mode {
                    ProductMode::AltQOdd => f.at(n * k) + outer,
                    _ => f.at(n * k) - outer,
                };
                let s = if mode != ProductMode::Plain && k % 2 == 0 { -QuadRat::one() } else { QuadRat::one() };
                brute = brute + s * bracket * prod;
            }
            prop_assert_eq!(&lhs, &brute);
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn fast_doubling_matches_iteration() {
    for i in 0..5000u64 {
        assert_eq!(fib(i), common::fib(i as i64), "F_{i}");
    }
    for i in (0..5000u64).step_by(7) {
        assert_eq!(lucas(i), common::luc(i as i64), "L_{i}");
    }
}

#[test]
fn sweep_is_deterministic_and_clean() {
    let a = sweep_identities(300, 200, 11).unwrap();
    let b = sweep_identities(300, 200, 11).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.failure_count(), 0);
    let c = sweep_identities(300, 200, 12).unwrap();
    assert_ne!(a.identities[0].witness, c.identities[0].witness);
}

#[test]
fn isqrt_bounds() {
    for n in [0u64, 1, 2, 3, 4, 99, 100, 101, 1 << 40] {
        let r = isqrt(&BigInt::from(n));
        assert!(&r * &r <= BigInt::from(n) && (&r + 1) * (&r + 1) > BigInt::from(n));
        assert!(!r.is_negative());
    }
}
