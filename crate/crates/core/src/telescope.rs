//! Telescoping summation over abstract sequences `f: k ↦ Q(√5)`.
//!
//! Finite forms return both sides so callers can compare them exactly.
//! Infinite forms never represent infinity: they return the partial sum at a
//! probe depth, the closed form built from a caller-supplied limit, and the
//! exact gap between the two.

use crate::arith::QuadRat;
use crate::sequences::{fib, lucas};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TelescopeError {
    #[error("plain telescoping needs N >= q (N = {n}, q = {q})")]
    TooFewTerms { n: u64, q: u64 },
    #[error("{name} must be positive")]
    NotPositive { name: &'static str },
    #[error("mode {mode} requires q {expected}, got q = {q}")]
    ParityMismatch { mode: ProductMode, expected: &'static str, q: u64 },
}

/// A deterministic sequence `k ↦ f(k)` with a display label.
#[derive(Clone)]
pub struct SeqFn {
    eval: Arc<dyn Fn(u64) -> QuadRat + Send + Sync>,
    label: String,
}

impl SeqFn {
    pub fn new(label: impl Into<String>, eval: impl Fn(u64) -> QuadRat + Send + Sync + 'static) -> Self {
        SeqFn { eval: Arc::new(eval), label: label.into() }
    }

    pub fn at(&self, k: u64) -> QuadRat {
        (self.eval)(k)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn constant(c: QuadRat) -> Self {
        let label = format!("{c}");
        SeqFn::new(label, move |_| c.clone())
    }

    /// `f(k) = k`.
    pub fn index() -> Self {
        SeqFn::new("k", |k| QuadRat::from_bigint(k.into()))
    }

    pub fn recip_fib() -> Self {
        SeqFn::new("1/F_k", |k| ratio(1u32.into(), fib(k)))
    }

    pub fn recip_lucas() -> Self {
        SeqFn::new("1/L_k", |k| ratio(1u32.into(), lucas(k)))
    }

    pub fn lucas_over_fib() -> Self {
        SeqFn::new("L_k/F_k", |k| ratio(lucas(k), fib(k)))
    }

    pub fn fib_over_lucas() -> Self {
        SeqFn::new("F_k/L_k", |k| ratio(fib(k), lucas(k)))
    }

    /// `F_{k+p}/F_k`.
    pub fn fib_shift(p: u64) -> Self {
        SeqFn::new(format!("F_(k+{p})/F_k"), move |k| ratio(fib(k + p), fib(k)))
    }

    /// `L_{k+p}/L_k`.
    pub fn lucas_shift(p: u64) -> Self {
        SeqFn::new(format!("L_(k+{p})/L_k"), move |k| ratio(lucas(k + p), lucas(k)))
    }
}

fn ratio(num: num_bigint::BigInt, den: num_bigint::BigInt) -> QuadRat {
    QuadRat::from_ratio(num, den).expect("sequence evaluated at an index with a zero denominator")
}

impl fmt::Debug for SeqFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeqFn({})", self.label)
    }
}

/// `(-1)^(e)` as a multiplier.
fn alt(e: u64) -> QuadRat {
    QuadRat::from_int(if e.is_multiple_of(2) { 1 } else { -1 })
}

fn positive(name: &'static str, v: u64) -> Result<(), TelescopeError> {
    if v == 0 {
        Err(TelescopeError::NotPositive { name })
    } else {
        Ok(())
    }
}

/// Σ_{k=1}^{N} [f(k) - f(k+q)] against Σ_{k=1}^{q} f(k) - Σ_{k=1}^{q} f(k+N).
pub fn telescope_finite(f: &SeqFn, q: u64, n: u64) -> Result<(QuadRat, QuadRat), TelescopeError> {
    positive("q", q)?;
    if n < q {
        return Err(TelescopeError::TooFewTerms { n, q });
    }
    let lhs: QuadRat = (1..=n).map(|k| f.at(k) - f.at(k + q)).sum();
    let head: QuadRat = (1..=q).map(|k| f.at(k)).sum();
    let tail: QuadRat = (1..=q).map(|k| f.at(k + n)).sum();
    Ok((lhs, head - tail))
}

/// Σ_{k=1}^{N} (-1)^{k-1}[f(k) + (-1)^{q-1} f(k+q)] against
/// Σ_{k=1}^{q} (-1)^{k-1} f(k) + (-1)^{N-1} Σ_{k=1}^{q} (-1)^{k-1} f(k+N).
pub fn telescope_finite_alt(f: &SeqFn, q: u64, n: u64) -> Result<(QuadRat, QuadRat), TelescopeError> {
    positive("q", q)?;
    positive("N", n)?;
    let sq = alt(q - 1);
    let lhs: QuadRat = (1..=n).map(|k| alt(k - 1) * (f.at(k) + &sq * f.at(k + q))).sum();
    let head: QuadRat = (1..=q).map(|k| alt(k - 1) * f.at(k)).sum();
    let tail: QuadRat = (1..=q).map(|k| alt(k - 1) * f.at(k + n)).sum();
    Ok((lhs, head + alt(n - 1) * tail))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductMode {
    Plain,
    /// `(-1)^{k-1}[f(nk) - f(nk+mnq)]`, q even.
    AltQEven,
    /// `(-1)^{k-1}[f(nk) + f(nk+mnq)]`, q odd.
    AltQOdd,
}

impl fmt::Display for ProductMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductMode::Plain => "plain",
            ProductMode::AltQEven => "alt-q-even",
            ProductMode::AltQOdd => "alt-q-odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfiniteMode {
    Plain,
    /// Inner sign `∓`: minus for even q, plus for odd q.
    Alternating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Shape {
    m: u64,
    n: u64,
    q: u64,
}

impl Shape {
    fn new(m: u64, n: u64, q: u64) -> Result<Self, TelescopeError> {
        positive("m", m)?;
        positive("n", n)?;
        positive("q", q)?;
        Ok(Shape { m, n, q })
    }

    /// ∏_{j=lo}^{hi} f(nk + jnq + shift); empty products are 1.
    fn prod(&self, f: &SeqFn, k: u64, lo: u64, hi: u64, shift: u64) -> QuadRat {
        (lo..=hi).map(|j| f.at(self.n * k + j * self.n * self.q + shift)).product()
    }

    /// `[f(nk) ± f(nk+mnq)] ∏_{j=1}^{m-1} f(nk+jnq)`.
    fn summand(&self, f: &SeqFn, k: u64, plus: bool) -> QuadRat {
        let nk = self.n * k;
        let outer = f.at(nk + self.m * self.n * self.q);
        let bracket = if plus { f.at(nk) + outer } else { f.at(nk) - outer };
        bracket * self.prod(f, k, 1, self.m - 1, 0)
    }

    /// Σ_{k=1}^{q} s(k) ∏_{j=0}^{m-1} f(nk + jnq + shift).
    fn boundary(&self, f: &SeqFn, alternating: bool, shift: u64) -> QuadRat {
        (1..=self.q)
            .map(|k| {
                let p = self.prod(f, k, 0, self.m - 1, shift);
                if alternating {
                    alt(k - 1) * p
                } else {
                    p
                }
            })
            .sum()
    }

    fn partial(&self, f: &SeqFn, alternating: bool, plus: bool, terms: u64) -> QuadRat {
        (1..=terms)
            .map(|k| {
                let s = self.summand(f, k, plus);
                if alternating {
                    alt(k - 1) * s
                } else {
                    s
                }
            })
            .sum()
    }
}

/// Both sides of the finite product-telescoping lemma in the given mode.
pub fn lemma_product_finite(
    f: &SeqFn,
    m: u64,
    n: u64,
    q: u64,
    big_n: u64,
    mode: ProductMode,
) -> Result<(QuadRat, QuadRat), TelescopeError> {
    let s = Shape::new(m, n, q)?;
    positive("N", big_n)?;
    match mode {
        ProductMode::AltQEven if !q.is_multiple_of(2) => {
            return Err(TelescopeError::ParityMismatch { mode, expected: "even", q })
        }
        ProductMode::AltQOdd if q.is_multiple_of(2) => {
            return Err(TelescopeError::ParityMismatch { mode, expected: "odd", q })
        }
        _ => {}
    }
    let alternating = mode != ProductMode::Plain;
    let lhs = s.partial(f, alternating, mode == ProductMode::AltQOdd, big_n);
    let head = s.boundary(f, alternating, 0);
    let tail = s.boundary(f, alternating, n * big_n);
    let rhs = if alternating { head + alt(big_n - 1) * tail } else { head - tail };
    Ok((lhs, rhs))
}

/// Infinite product-telescoping form as `(S_{N_probe}, closed form, |S - C|)`.
///
/// Plain: `C = Σ_{k=1}^{q} ∏_{j=0}^{m-1} f(nk+jnq) - f_limit^m q`.
/// Alternating: `C = Σ_{k=1}^{q} (-1)^{k-1} ∏_{j=0}^{m-1} f(nk+jnq)`, with the
/// inner sign `∓` picked by the parity of q. For odd q and a nonzero limit
/// the summands do not vanish and only the averaged partial sums converge;
/// the tail returned is then that of the raw partial sum.
pub fn lemma_product_infinite(
    f: &SeqFn,
    f_limit: &QuadRat,
    m: u64,
    n: u64,
    q: u64,
    mode: InfiniteMode,
    n_probe: u64,
) -> Result<(QuadRat, QuadRat, QuadRat), TelescopeError> {
    let s = Shape::new(m, n, q)?;
    if n_probe < q {
        return Err(TelescopeError::TooFewTerms { n: n_probe, q });
    }
    let (partial, closed) = match mode {
        InfiniteMode::Plain => {
            let limit_term = f_limit.pow(m) * QuadRat::from_int(q as i64);
            (s.partial(f, false, false, n_probe), s.boundary(f, false, 0) - limit_term)
        }
        InfiniteMode::Alternating => {
            let plus = q % 2 == 1;
            (s.partial(f, true, plus, n_probe), s.boundary(f, true, 0))
        }
    };
    let tail = (&partial - &closed).abs();
    Ok((partial, closed, tail))
}
