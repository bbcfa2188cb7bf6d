//! Test-side oracles, written without the library's evaluators.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::OnceLock;

const TABLE: usize = 6000;

fn tables() -> &'static (Vec<BigInt>, Vec<BigInt>) {
    static T: OnceLock<(Vec<BigInt>, Vec<BigInt>)> = OnceLock::new();
    T.get_or_init(|| {
        let mut f = vec![BigInt::zero(), BigInt::one()];
        let mut l = vec![BigInt::from(2), BigInt::one()];
        for i in 2..TABLE {
            f.push(&f[i - 1] + &f[i - 2]);
            l.push(&l[i - 1] + &l[i - 2]);
        }
        (f, l)
    })
}

/// F_i by plain iteration.
pub fn fib(i: i64) -> BigInt {
    assert!((0..TABLE as i64).contains(&i), "oracle index {i}");
    tables().0[i as usize].clone()
}

/// L_i by plain iteration.
pub fn luc(i: i64) -> BigInt {
    assert!((0..TABLE as i64).contains(&i), "oracle index {i}");
    tables().1[i as usize].clone()
}

pub fn rat(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

fn prod(seq: fn(i64) -> BigInt, lo: i64, hi: i64, ix: impl Fn(i64) -> i64) -> BigInt {
    (lo..=hi).map(|j| seq(ix(j))).product()
}

fn sq(x: BigInt) -> BigInt {
    &x * &x
}

/// `(-1)^e`.
fn sgn(e: i64) -> BigInt {
    BigInt::from(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// Summand `k` of catalog entry `id`, written out directly.
pub fn naive_term(id: &str, m: i64, n: i64, q: i64, p: i64, k: i64) -> BigRational {
    let nk = n * k;
    let b = |j: i64| nk + j * n * q;
    let b2 = |j: i64| nk + 2 * j * n * q;
    let h = |j: i64| 2 * nk + 2 * j * n * q;
    let x = nk + m * n * q;
    let y = 2 * nk + m * n * q;
    let alt = sgn(k - 1);
    let altnk = sgn(nk - 1);
    let f: fn(i64) -> BigInt = fib;
    let l: fn(i64) -> BigInt = luc;
    let one = BigInt::one;
    match id {
        "A1" => rat(altnk * prod(l, 1, m - 1, b), prod(f, 0, m, b)),
        "A2" => rat(prod(l, 1, m - 1, b), prod(f, 0, m, b)),
        "A3" => rat(one(), prod(f, 0, m - 1, b) * prod(f, m + 1, 2 * m, b)),
        "A4" => rat(alt, prod(f, 0, m - 1, b) * prod(f, m + 1, 2 * m, b)),
        "A5" => rat(alt * fib(y) * prod(l, 1, m - 1, b), prod(f, 0, m, b)),
        "A5c" => rat(
            alt * sq(luc(x)) * prod(l, 1, m - 1, b) * prod(l, m + 1, 2 * m - 1, b),
            prod(f, 0, m - 1, b) * prod(f, m + 1, 2 * m, b),
        ),
        "A6" => rat(altnk * prod(f, 1, m - 1, |j| b(j) + n * p), prod(f, 0, m, b)),
        "A7" => rat(prod(f, 1, m - 1, |j| b(j) + n * p), prod(f, 0, m, b)),
        "B1" => rat(altnk * prod(f, 1, m - 1, b), prod(l, 0, m, b)),
        "B2" => rat(prod(f, 1, m - 1, b), prod(l, 0, m, b)),
        "B3" => rat(one(), prod(l, 0, m - 1, b) * prod(l, m + 1, 2 * m, b)),
        "B4" => rat(alt, prod(l, 0, m - 1, b) * prod(l, m + 1, 2 * m, b)),
        "B5" => rat(alt * fib(y) * prod(f, 1, m - 1, b), prod(l, 0, m, b)),
        "B5c" => rat(
            alt * sq(fib(x)) * prod(f, 1, m - 1, b) * prod(f, m + 1, 2 * m - 1, b),
            prod(l, 0, m - 1, b) * prod(l, m + 1, 2 * m, b),
        ),
        "B6" => rat(altnk * prod(l, 1, m - 1, |j| b(j) + n * p), prod(l, 0, m, b)),
        "B7" => rat(prod(l, 1, m - 1, |j| b(j) + n * p), prod(l, 0, m, b)),
        "C1" => rat(luc(x), prod(f, 0, 2 * m, b)),
        "C2" => rat(alt * luc(x), prod(f, 0, 2 * m, b)),
        "D1" => rat(fib(x), prod(l, 0, 2 * m, b)),
        "D2" => rat(alt * fib(x), prod(l, 0, 2 * m, b)),
        "E1" => rat(fib(x), prod(f, 0, m, b2)),
        "E1a" => rat(alt * fib(x), prod(f, 0, m, b2)),
        "E2" => rat(luc(x), prod(f, 0, m, b2)),
        "E2a" => rat(alt * luc(x), prod(f, 0, m, b2)),
        "G1" => rat(luc(x), prod(l, 0, m, b2)),
        "G1a" => rat(alt * luc(x), prod(l, 0, m, b2)),
        "G2" => rat(fib(x), prod(l, 0, m, b2)),
        "G2a" => rat(alt * fib(x), prod(l, 0, m, b2)),
        "H1" => rat(fib(y), prod(f, 0, m, h)),
        "H2" => rat(alt * fib(y), prod(f, 0, m, h)),
        "H3" => rat(luc(y), prod(f, 0, m, h)),
        "H4" => rat(alt * luc(y), prod(f, 0, m, h)),
        "I1" => rat(luc(y), prod(l, 0, m, h)),
        "I2" => rat(alt * luc(y), prod(l, 0, m, h)),
        "I3" => rat(fib(y), prod(l, 0, m, h)),
        "I4" => rat(alt * fib(y), prod(l, 0, m, h)),
        "J1" => rat(fib(y), sq(prod(f, 0, m, b))),
        "J2" => rat(alt * fib(y), sq(prod(f, 0, m, b))),
        "J1c" => rat(luc(x), fib(x) * sq(prod(f, 0, m - 1, b) * prod(f, m + 1, 2 * m, b))),
        "J2c" => rat(alt * luc(x), fib(x) * sq(prod(f, 0, m - 1, b) * prod(f, m + 1, 2 * m, b))),
        "J3" => rat(altnk * fib(y) * sq(prod(l, 1, m - 1, b)), sq(prod(f, 0, m, b))),
        "J4" => rat(fib(y) * sq(prod(l, 1, m - 1, b)), sq(prod(f, 0, m, b))),
        "K1" => rat(fib(y), sq(prod(l, 0, m, b))),
        "K2" => rat(alt * fib(y), sq(prod(l, 0, m, b))),
        "K1c" => rat(fib(x), luc(x) * sq(prod(l, 0, m - 1, b) * prod(l, m + 1, 2 * m, b))),
        "K2c" => rat(alt * fib(x), luc(x) * sq(prod(l, 0, m - 1, b) * prod(l, m + 1, 2 * m, b))),
        "K3" => rat(altnk * fib(y) * sq(prod(f, 1, m - 1, b)), sq(prod(l, 0, m, b))),
        "K4" => rat(fib(y) * sq(prod(f, 1, m - 1, b)), sq(prod(l, 0, m, b))),
        "L1" => rat(fib(y + n * p), prod(f, 0, m, b) * prod(f, 0, m, |j| b(j) + n * p)),
        "L2" => rat(alt * fib(y + n * p), prod(f, 0, m, b) * prod(f, 0, m, |j| b(j) + n * p)),
        "M1" => rat(fib(y + n * p), prod(l, 0, m, b) * prod(l, 0, m, |j| b(j) + n * p)),
        "M2" => rat(alt * fib(y + n * p), prod(l, 0, m, b) * prod(l, 0, m, |j| b(j) + n * p)),
        "N1" => rat(
            altnk * fib(y + 2) * sq(prod(f, 1, m - 1, |j| b(j) + 1)),
            prod(f, 0, m, b) * prod(f, 0, m, |j| b(j) + 2),
        ),
        "N2" => rat(fib(y + 2) * sq(prod(f, 1, m - 1, |j| b(j) + 1)), prod(f, 0, m, b) * prod(f, 0, m, |j| b(j) + 2)),
        "N3" => rat(fib(2 * k + 3), fib(k).pow(4) * fib(k + 1).pow(3) * fib(k + 2).pow(3) * fib(k + 3).pow(4)),
        "N3L" => rat(fib(2 * k + 3), luc(k).pow(4) * luc(k + 1).pow(3) * luc(k + 2).pow(3) * luc(k + 3).pow(4)),
        "N4" => rat(fib(3 * k + 1) * fib(3 * k + 2) * fib(6 * k + 3), fib(3 * k).pow(4) * fib(3 * k + 3).pow(4)),
        "N4L" => rat(luc(3 * k + 1) * luc(3 * k + 2) * fib(6 * k + 3), luc(3 * k).pow(4) * luc(3 * k + 3).pow(4)),
        other => panic!("no oracle for {other}"),
    }
}

/// `Σ_{k=1}^{N}` of the oracle summands.
pub fn naive_partial(id: &str, m: i64, n: i64, q: i64, p: i64, terms: i64) -> BigRational {
    (1..=terms).map(|k| naive_term(id, m, n, q, p, k)).sum()
}

/// Oracle parity predicates, stated directly.
pub fn naive_valid(id: &str, m: i64, n: i64, q: i64, p: i64) -> bool {
    let odd = |v: i64| v % 2 != 0;
    let p0 = p == 0;
    let pos = m >= 1 && n >= 1 && q >= 1;
    if !pos {
        return false;
    }
    match id {
        "A1" | "B1" | "J3" | "K3" | "N1" | "J1c" | "K1c" => p0,
        "A2" | "B2" | "J4" | "K4" | "N2" => p0 && odd(n) && !odd(q),
        "A3" | "B3" | "E1" | "E1a" | "G1" | "G1a" | "H1" | "I1" => p0 && odd(m) && odd(n) && odd(q),
        "A4" | "B4" | "H2" | "I2" => p0 && odd(q) && !odd(m * n),
        "A5" | "A5c" | "B5" | "B5c" => p0 && odd(q),
        "A6" | "B6" => p >= 1,
        "A7" | "B7" => p >= 1 && odd(n) && !odd(q),
        "C1" | "D1" | "E2" | "E2a" | "G2" | "G2a" | "H3" | "I3" | "J1" | "K1" => p0 && !odd(m * n * q),
        "C2" | "D2" | "H4" | "I4" | "J2" | "K2" => p0 && (!odd(q) || odd(m * n * q)),
        "J2c" | "K2c" => p0 && !odd(q),
        "L1" | "M1" => p >= 0 && !odd(m * n * q),
        "L2" | "M2" => p >= 0 && (!odd(q) || odd(m * n * q)),
        "N3" | "N3L" => (m, n, q, p) == (1, 1, 1, 0),
        "N4" | "N4L" => (m, n, q, p) == (1, 3, 1, 0),
        other => panic!("no oracle for {other}"),
    }
}
