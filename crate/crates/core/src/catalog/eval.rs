use super::{CatalogEntry, CatalogError, ClosedFormSpec, Coef, ConstKind, Factor, Params, Seq, SignMode, Term, Upper};
use crate::arith::{parse_rational, BigRational, QuadRat};
use crate::parallel::ordered_map;
use crate::sequences::{fib, lucas, phi_pow, sqrt5_pow};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn seq_at(id: &'static str, seq: Seq, index: i64, min: i64, expr: impl Fn() -> String) -> Result<BigInt, CatalogError> {
    if index < min {
        return Err(CatalogError::IndexOutOfRange { id, expr: expr(), value: index, min });
    }
    Ok(match seq {
        Seq::F => fib(index as u64),
        Seq::L => lucas(index as u64),
    })
}

fn factor_value(id: &'static str, f: &Factor, p: &Params, k: i64, min: i64) -> Result<BigInt, CatalogError> {
    let (lo, hi) = match &f.range {
        None => (0, 0),
        Some(r) => (r.lo.eval(p), r.hi.eval(p)),
    };
    let mut acc = BigInt::one();
    for j in lo..=hi {
        let v = seq_at(id, f.seq, f.index.eval(p, k, j), min, || format!("{}({})", f.seq, f.index))?;
        acc *= num_traits::pow(v, f.power as usize);
    }
    Ok(acc)
}

fn sign_at(sign: SignMode, p: &Params, k: i64) -> i64 {
    let e = match sign {
        SignMode::None => return 1,
        SignMode::AltK => k - 1,
        SignMode::AltKPlusOne => k,
        SignMode::AltNK => p.n * k - 1,
    };
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sign taken at `k_sign`, factor indices at `k_index`.
pub(crate) fn eval_term(
    id: &'static str,
    term: &Term,
    p: &Params,
    k_sign: i64,
    k_index: i64,
) -> Result<BigRational, CatalogError> {
    let mut num = BigInt::from(sign_at(term.sign, p, k_sign));
    for f in &term.num {
        num *= factor_value(id, f, p, k_index, 0)?;
    }
    let mut den = BigInt::one();
    for f in &term.den {
        den *= factor_value(id, f, p, k_index, 1)?;
    }
    if den.is_zero() {
        return Err(CatalogError::Arith {
            id,
            source: crate::arith::ArithError::DivisionByZero(format!("term at k={k_index}")),
        });
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn eval_coef(id: &'static str, c: &Coef, p: &Params) -> Result<BigRational, CatalogError> {
    let mut num = BigInt::from(c.num);
    let mut den = BigInt::from(c.den);
    for (seq, ix, e) in &c.seq {
        let min = if *e < 0 { 1 } else { 0 };
        let v = seq_at(id, *seq, ix.eval(p, 0, 0), min, || format!("{seq}({ix})"))?;
        if *e < 0 {
            den *= v;
        } else {
            num *= v;
        }
    }
    Ok(BigRational::new(num, den))
}

/// The `k`-th summand, exactly, including its sign.
pub fn term_at(entry: &CatalogEntry, p: &Params, k: u64) -> Result<BigRational, CatalogError> {
    entry.check_params(p)?;
    eval_term(entry.id, &entry.term, p, k as i64, k as i64)
}

/// The summand with its sign at `k` and its indices at `k + shift`.
pub fn term_at_shifted(entry: &CatalogEntry, p: &Params, k: u64, shift: u64) -> Result<BigRational, CatalogError> {
    entry.check_params(p)?;
    eval_term(entry.id, &entry.term, p, k as i64, (k + shift) as i64)
}

fn constant_value(kind: ConstKind, p: &Params) -> QuadRat {
    let m = p.m as u64;
    match kind {
        ConstKind::Sqrt5PowM => sqrt5_pow(m),
        ConstKind::InvSqrt5PowM => sqrt5_pow(m).inv().expect("nonzero"),
        ConstKind::PhiPowMNP => phi_pow((p.m * p.n * p.p) as u64),
        ConstKind::FivePowM => QuadRat::from_bigint(num_traits::pow(BigInt::from(5), m as usize)),
        ConstKind::InvFivePowM => {
            QuadRat::from_bigint(num_traits::pow(BigInt::from(5), m as usize)).inv().expect("nonzero")
        }
        ConstKind::One => QuadRat::one(),
    }
}

/// Exact right-hand side in Q(√5).
pub fn closed_form(entry: &CatalogEntry, p: &Params) -> Result<QuadRat, CatalogError> {
    entry.check_params(p)?;
    match &entry.closed {
        ClosedFormSpec::Fixed(v) => {
            parse_rational(v).map(QuadRat::from).map_err(|source| CatalogError::Arith { id: entry.id, source })
        }
        ClosedFormSpec::Telescoped { sum_coef, upper, inner, constant } => {
            let top = match upper {
                Upper::Q => p.q,
                Upper::TwoQ => 2 * p.q,
            };
            let mut sum = BigRational::zero();
            for k in 1..=top {
                sum += eval_term(entry.id, inner, p, k, k)?;
            }
            let mut total = QuadRat::from(sum * eval_coef(entry.id, sum_coef, p)?);
            if let Some((c, kind)) = constant {
                let scale = eval_coef(entry.id, c, p)? * BigRational::from_integer(p.q.into());
                total = total + constant_value(*kind, p).scale(&scale);
            }
            Ok(total)
        }
    }
}

/// Exact partial sums `S_N` at each requested `N` (any order), one pass.
pub fn partial_sums(entry: &CatalogEntry, p: &Params, checkpoints: &[u64]) -> Result<Vec<BigRational>, CatalogError> {
    entry.check_params(p)?;
    let max = checkpoints.iter().copied().max().unwrap_or(0);
    let ks: Vec<i64> = (1..=max as i64).collect();
    let terms = ordered_map(&ks, |&k| eval_term(entry.id, &entry.term, p, k, k));
    let mut prefix = Vec::with_capacity(ks.len() + 1);
    let mut acc = BigRational::zero();
    prefix.push(acc.clone());
    for t in terms {
        acc += t?;
        prefix.push(acc.clone());
    }
    Ok(checkpoints.iter().map(|&n| prefix[n as usize].clone()).collect())
}

pub fn partial_sum(entry: &CatalogEntry, p: &Params, n: u64) -> Result<BigRational, CatalogError> {
    Ok(partial_sums(entry, p, &[n])?.remove(0))
}

/// Net growth in the exponent of φ per unit step of `k`: denominator weight
/// minus numerator weight. Summands shrink like φ^{-rate·k}.
pub fn decay_rate(entry: &CatalogEntry, p: &Params) -> i64 {
    let weight = |fs: &[Factor]| -> i64 {
        fs.iter()
            .map(|f| {
                let count = match &f.range {
                    None => 1,
                    Some(r) => (r.hi.eval(p) - r.lo.eval(p) + 1).max(0),
                };
                f.index.k * p.n * f.power as i64 * count
            })
            .sum()
    };
    weight(&entry.term.den) - weight(&entry.term.num)
}
