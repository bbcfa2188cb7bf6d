//! Fibonacci and Lucas numbers, powers of φ and √5, and the ratio limits
//! `F_{N+m}/F_{N+n} → φ^{m-n}`, `L_{N+m}/L_{N+n} → φ^{m-n}`,
//! `F_{N+m}/L_{N+n} → φ^{m-n}/√5`.

use crate::arith::{ArithError, QuadRat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{OnceLock, RwLock};
use thiserror::Error;

/// Memo of `n → (F_n, F_{n+1})` for requested indices.
///
/// Only top-level requests are stored. Intermediate fast-doubling pairs are
/// cheap to recompute and would otherwise dominate memory on random sweeps.
#[derive(Debug, Default)]
pub struct SeqCache {
    pairs: RwLock<HashMap<u64, (BigInt, BigInt)>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub entries: usize,
}

impl SeqCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `(F_n, F_{n+1})`.
    pub fn pair(&self, n: u64) -> (BigInt, BigInt) {
        if let Some(p) = self.pairs.read().expect("cache lock").get(&n) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return p.clone();
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let p = fib_pair(n);
        self.pairs.write().expect("cache lock").entry(n).or_insert_with(|| p.clone());
        p
    }

    pub fn fib(&self, n: u64) -> BigInt {
        self.pair(n).0
    }

    pub fn lucas(&self, n: u64) -> BigInt {
        let (f, f1) = self.pair(n);
        f1 * 2u32 - f
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            entries: self.pairs.read().expect("cache lock").len(),
        }
    }
}

/// Fast doubling: F_{2k} = F_k(2F_{k+1} - F_k), F_{2k+1} = F_k² + F_{k+1}².
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let c = &a * (&b * 2u32 - &a);
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// Process-wide cache used by [`fib`] and [`lucas`].
pub fn global_cache() -> &'static SeqCache {
    static CACHE: OnceLock<SeqCache> = OnceLock::new();
    CACHE.get_or_init(SeqCache::new)
}

pub fn fib(n: u64) -> BigInt {
    global_cache().fib(n)
}

pub fn lucas(n: u64) -> BigInt {
    global_cache().lucas(n)
}

/// φ^n = (L_n + F_n√5)/2.
pub fn phi_pow(n: u64) -> QuadRat {
    QuadRat::new(lucas(n), fib(n), BigInt::from(2)).expect("nonzero denominator")
}

/// √5^m.
pub fn sqrt5_pow(m: u64) -> QuadRat {
    let five = num_traits::pow(BigInt::from(5u32), (m / 2) as usize);
    if m.is_multiple_of(2) {
        QuadRat::from_bigint(five)
    } else {
        QuadRat::new(BigInt::zero(), five, BigInt::one()).expect("nonzero denominator")
    }
}

/// φ^e for any integer exponent.
pub fn phi_powi(e: i64) -> QuadRat {
    let p = phi_pow(e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.inv().expect("φ^n is nonzero")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("N list must be strictly increasing, got {0:?}")]
    NotIncreasing(Vec<u64>),
    #[error("index {expr} = {value} at N = {n} is out of range")]
    IndexOutOfRange { expr: &'static str, value: i64, n: u64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioKind {
    /// F_{N+m}/F_{N+n} against φ^{m-n}.
    FibFib,
    /// L_{N+m}/L_{N+n} against φ^{m-n}.
    LucasLucas,
    /// F_{N+m}/L_{N+n} against φ^{m-n}/√5.
    FibLucas,
}

impl RatioKind {
    pub const ALL: [RatioKind; 3] = [RatioKind::FibFib, RatioKind::LucasLucas, RatioKind::FibLucas];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitRow {
    pub n: u64,
    /// Exact `|ratio - limit|` for each [`RatioKind`], in `ALL` order.
    pub errors: [QuadRat; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitReport {
    pub m: i64,
    pub n: i64,
    pub rows: Vec<LimitRow>,
    /// Per kind: errors strictly decrease along the list, or are all zero.
    pub monotone: [bool; 3],
}

impl LimitReport {
    pub fn error(&self, row: usize, kind: RatioKind) -> &QuadRat {
        let i = RatioKind::ALL.iter().position(|k| *k == kind).expect("kind");
        &self.rows[row].errors[i]
    }

    pub fn all_monotone(&self) -> bool {
        self.monotone.iter().all(|&b| b)
    }
}

fn shifted(big_n: u64, off: i64, expr: &'static str, min: i64) -> Result<u64, LimitError> {
    let value = big_n as i64 + off;
    if value < min {
        return Err(LimitError::IndexOutOfRange { expr, value, n: big_n });
    }
    Ok(value as u64)
}

/// Exact convergence errors of the three ratio families at each `N`.
pub fn check_limits(m: i64, n: i64, n_list: &[u64]) -> Result<LimitReport, LimitError> {
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(LimitError::NotIncreasing(n_list.to_vec()));
    }
    let lim = phi_powi(m - n);
    let lim_fl = lim.try_div(&QuadRat::sqrt5())?;
    let mut rows = Vec::with_capacity(n_list.len());
    for &big_n in n_list {
        let top = shifted(big_n, m, "N+m", 0)?;
        let bot = shifted(big_n, n, "N+n", 1)?;
        let ratio = |num: BigInt, den: BigInt| QuadRat::from_ratio(num, den);
        let ff = ratio(fib(top), fib(bot))?;
        let ll = ratio(lucas(top), lucas(bot))?;
        let fl = ratio(fib(top), lucas(bot))?;
        rows.push(LimitRow { n: big_n, errors: [(ff - &lim).abs(), (ll - &lim).abs(), (fl - &lim_fl).abs()] });
    }
    let monotone = std::array::from_fn(|i| {
        rows.iter().all(|r| r.errors[i].is_zero()) || rows.windows(2).all(|w| w[1].errors[i] < w[0].errors[i])
    });
    Ok(LimitReport { m, n, rows, monotone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_from_ints;

    #[test]
    fn small_values() {
        assert_eq!(fib(0), BigInt::from(0));
        assert_eq!(fib(1), BigInt::from(1));
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(1), BigInt::from(1));
        assert_eq!(lucas(10), BigInt::from(123));
    }

    #[test]
    fn fib_100() {
        assert_eq!(fib(100).to_string(), "354224848179261915075");
        assert_eq!(fib(100), fib(99) + fib(98));
    }

    #[test]
    fn phi_powers() {
        assert_eq!(phi_pow(0), QuadRat::one());
        assert_eq!(phi_pow(1), QuadRat::phi());
        assert_eq!(phi_pow(3).to_string(), "(2+1*sqrt5)/1");
        let phi = QuadRat::phi();
        for n in 1..30 {
            let expect = &(&phi * &QuadRat::from_bigint(fib(n))) + &QuadRat::from_bigint(fib(n - 1));
            assert_eq!(phi_pow(n), expect);
        }
    }

    #[test]
    fn sqrt5_powers() {
        assert_eq!(sqrt5_pow(0), QuadRat::one());
        assert_eq!(sqrt5_pow(1), QuadRat::sqrt5());
        assert_eq!(sqrt5_pow(2), QuadRat::from_int(5));
        assert_eq!(sqrt5_pow(5).to_string(), "(0+25*sqrt5)/1");
    }

    #[test]
    fn cache_counts_hits() {
        let c = SeqCache::new();
        assert_eq!(c.fib(50), fib(50));
        assert_eq!(c.lucas(50), lucas(50));
        let s = c.stats();
        assert_eq!((s.hits, s.misses, s.entries), (1, 1, 1));
    }

    #[test]
    fn limits_shrink() {
        let r = check_limits(1, 0, &[10, 20, 40]).unwrap();
        assert!(r.all_monotone());
        for kind in RatioKind::ALL {
            assert!(r.error(0, kind).signum() > 0);
        }
    }

    #[test]
    fn equal_offsets_are_exact() {
        let r = check_limits(3, 3, &[5, 9]).unwrap();
        assert!(r.error(0, RatioKind::FibFib).is_zero());
        assert!(r.error(1, RatioKind::LucasLucas).is_zero());
        assert!(r.monotone[0] && r.monotone[1]);
    }

    #[test]
    fn fib_over_lucas_at_30() {
        let r = check_limits(0, 0, &[30]).unwrap();
        let bound = QuadRat::from(rat_from_ints(1, 1_000_000_000_000));
        assert!(*r.error(0, RatioKind::FibLucas) < bound);
    }

    #[test]
    fn rejects_bad_lists() {
        assert!(matches!(check_limits(1, 0, &[10, 10]), Err(LimitError::NotIncreasing(_))));
        assert!(matches!(check_limits(1, 0, &[20, 10]), Err(LimitError::NotIncreasing(_))));
        assert!(matches!(check_limits(-5, 0, &[3]), Err(LimitError::IndexOutOfRange { .. })));
        assert!(matches!(check_limits(0, -3, &[3]), Err(LimitError::IndexOutOfRange { .. })));
    }
}
