//! Finite-N identities behind the theorems, and the cross identities that
//! hold for every q without a limit.

use super::{Report, Status, VerifyError};
use crate::arith::{format_rational, BigRational};
use crate::catalog::{self, eval_coef, eval_term, ClosedFormSpec, Coef, IndexExpr, Params, Seq, SignMode, Upper};
use crate::sequences::{fib, lucas};
use num_traits::{One, Zero};

const MNQ: IndexExpr = IndexExpr::konst().mnq(1);
const NP: IndexExpr = IndexExpr::konst().np(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cross {
    /// `(1/F_n) Σ F_{nk+n}/F_{nk} - (1/2) Σ L_{nk}/F_{nk} = (q/2) L_n/F_n`.
    X1,
    /// `(1/2) Σ (-1)^k L_{nk}/F_{nk} = (1/F_n) Σ (-1)^k F_{nk+n}/F_{nk}`, q even.
    X2,
    /// `(1/2) Σ (-1)^{k-1} F_{nk}/L_{nk} = (1/(5F_n)) Σ (-1)^{k-1} L_{nk+n}/L_{nk}`, q even.
    X3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteKind {
    /// `scale · Σ_{k=1}^N term(k)` against the telescoped form of the entry's
    /// closed form cut off at `N`, times the same scale.
    Partial {
        entry: &'static str,
        scale: Coef,
    },
    Cross(Cross),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteIdentity {
    pub id: &'static str,
    pub kind: FiniteKind,
}

impl FiniteIdentity {
    pub fn base_entry(&self) -> Option<&'static str> {
        match &self.kind {
            FiniteKind::Partial { entry, .. } => Some(entry),
            FiniteKind::Cross(_) => None,
        }
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            FiniteKind::Partial { entry, scale } => format!("{scale} * partial sum of {entry} up to N, telescoped"),
            FiniteKind::Cross(c) => match c {
                Cross::X1 => "(1/F(n)) sum F(nk+n)/F(nk) - (1/2) sum L(nk)/F(nk) = (q/2) L(n)/F(n), m=1".into(),
                Cross::X2 => "(1/2) sum (-1)^k L(nk)/F(nk) = (1/F(n)) sum (-1)^k F(nk+n)/F(nk), m=1, q even".into(),
                Cross::X3 => {
                    "(1/2) sum (-1)^(k-1) F(nk)/L(nk) = (1/(5F(n))) sum (-1)^(k-1) L(nk+n)/L(nk), m=1, q even".into()
                }
            },
        }
    }

    /// Hypothesis check, including `N ≥ 1`.
    pub fn validate(&self, p: &Params, n: u64) -> Result<bool, VerifyError> {
        if n == 0 {
            return Err(VerifyError::Terms);
        }
        Ok(match &self.kind {
            FiniteKind::Partial { entry, .. } => catalog::find(entry)?.validate(p),
            FiniteKind::Cross(c) => {
                let base = p.m == 1 && p.n >= 1 && p.q >= 1 && p.p == 0;
                match c {
                    Cross::X1 => base,
                    Cross::X2 | Cross::X3 => base && p.q % 2 == 0,
                }
            }
        })
    }

    /// Both sides, exactly.
    pub fn sides(&self, p: &Params, n: u64) -> Result<(BigRational, BigRational), VerifyError> {
        match &self.kind {
            FiniteKind::Partial { entry, scale } => partial_sides(catalog::find(entry)?, scale, p, n),
            FiniteKind::Cross(c) => Ok(cross_sides(*c, p)),
        }
    }
}

fn partial_sides(
    entry: &catalog::CatalogEntry,
    scale: &Coef,
    p: &Params,
    n: u64,
) -> Result<(BigRational, BigRational), VerifyError> {
    let ClosedFormSpec::Telescoped { sum_coef, upper, inner, .. } = &entry.closed else {
        return Err(VerifyError::NotTelescoped(entry.id));
    };
    let s = eval_coef(entry.id, scale, p)?;
    let lhs = &s * catalog::partial_sum(entry, p, n)?;
    let top = match upper {
        Upper::Q => p.q,
        Upper::TwoQ => 2 * p.q,
    };
    let (mut head, mut tail) = (BigRational::zero(), BigRational::zero());
    for k in 1..=top {
        head += eval_term(entry.id, inner, p, k, k)?;
        tail += eval_term(entry.id, inner, p, k, k + n as i64)?;
    }
    // Alternating inner terms pick up (-1)^N from the shift.
    let alternating = matches!(inner.sign, SignMode::AltK | SignMode::AltKPlusOne);
    if alternating && n % 2 == 1 {
        tail = -tail;
    }
    let rhs = s * eval_coef(entry.id, sum_coef, p)? * (head - tail);
    Ok((lhs, rhs))
}

fn ratio(a: num_bigint::BigInt, b: num_bigint::BigInt) -> BigRational {
    BigRational::new(a, b)
}

fn cross_sides(c: Cross, p: &Params) -> (BigRational, BigRational) {
    let n = p.n as u64;
    let half = BigRational::new(1.into(), 2.into());
    let alt = |k: u64, shift: u64| if (k + shift).is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let (mut a, mut b) = (BigRational::zero(), BigRational::zero());
    for k in 1..=p.q as u64 {
        match c {
            Cross::X1 => {
                a += ratio(fib(n * k + n), fib(n * k));
                b += ratio(lucas(n * k), fib(n * k));
            }
            Cross::X2 => {
                a += alt(k, 0) * ratio(lucas(n * k), fib(n * k));
                b += alt(k, 0) * ratio(fib(n * k + n), fib(n * k));
            }
            Cross::X3 => {
                a += alt(k, 1) * ratio(fib(n * k), lucas(n * k));
                b += alt(k, 1) * ratio(lucas(n * k + n), lucas(n * k));
            }
        }
    }
    let fnn = BigRational::from_integer(fib(n));
    match c {
        Cross::X1 => {
            let lhs = a / &fnn - &half * b;
            let rhs = half * BigRational::from_integer(p.q.into()) * BigRational::from_integer(lucas(n)) / fnn;
            (lhs, rhs)
        }
        Cross::X2 => (half * a, b / fnn),
        Cross::X3 => (half * a, b / (fnn * BigRational::from_integer(5.into()))),
    }
}

fn scale(num: i64, seqs: &[(Seq, IndexExpr)]) -> Coef {
    Coef::new(num, 1, seqs.iter().map(|&(s, ix)| (s, ix, 1)).collect())
}

/// Every finite identity, in a fixed order.
pub fn finite_identities() -> &'static [FiniteIdentity] {
    use std::sync::OnceLock;
    static ALL: OnceLock<Vec<FiniteIdentity>> = OnceLock::new();
    ALL.get_or_init(|| {
        use Seq::{F, L};
        let f = || (F, MNQ);
        let l = || (L, MNQ);
        let table: Vec<(&'static str, &'static str, Coef)> = vec![
            ("fin-A1", "A1", scale(2, &[f()])),
            ("fin-A3", "A3", scale(1, &[])),
            ("fin-A4", "A4", scale(1, &[])),
            ("fin-A5", "A5", scale(2, &[])),
            ("fin-A6", "A6", scale(1, &[f(), (F, NP)])),
            ("fin-A7", "A7", scale(1, &[f(), (F, NP)])),
            ("fin-B1", "B1", scale(2, &[f()])),
            ("fin-B5", "B5", scale(2, &[])),
            ("fin-B6", "B6", scale(5, &[f(), (F, NP)])),
            ("fin-B7", "B7", scale(5, &[f(), (F, NP)])),
            ("fin-E1", "E1", scale(1, &[l()])),
            ("fin-E1a", "E1a", scale(1, &[l()])),
            ("fin-E2", "E2", scale(1, &[f()])),
            ("fin-E2a", "E2a", scale(1, &[f()])),
            ("fin-G1", "G1", scale(1, &[l()])),
            ("fin-G1a", "G1a", scale(1, &[l()])),
            ("fin-G2", "G2", scale(5, &[f()])),
            ("fin-G2a", "G2a", scale(5, &[f()])),
            ("fin-H1", "H1", scale(1, &[l()])),
            ("fin-H2", "H2", scale(1, &[l()])),
            ("fin-H3", "H3", scale(1, &[f()])),
            ("fin-H4", "H4", scale(1, &[f()])),
            ("fin-I1", "I1", scale(1, &[l()])),
            ("fin-I2", "I2", scale(1, &[l()])),
            ("fin-I3", "I3", scale(5, &[f()])),
            ("fin-I4", "I4", scale(5, &[f()])),
            ("fin-J1", "J1", scale(1, &[])),
            ("fin-J3", "J3", scale(4, &[f()])),
            ("fin-L1", "L1", scale(1, &[f()])),
            ("fin-M1", "M1", scale(5, &[f()])),
            ("fin-M2", "M2", scale(5, &[f()])),
            ("fin-N1", "N1", scale(1, &[f()])),
        ];
        let mut v: Vec<FiniteIdentity> = table
            .into_iter()
            .map(|(id, entry, scale)| FiniteIdentity { id, kind: FiniteKind::Partial { entry, scale } })
            .collect();
        for (id, c) in [("X1", Cross::X1), ("X2", Cross::X2), ("X3", Cross::X3)] {
            v.push(FiniteIdentity { id, kind: FiniteKind::Cross(c) });
        }
        v
    })
}

pub fn find_finite(id: &str) -> Result<&'static FiniteIdentity, VerifyError> {
    finite_identities().iter().find(|f| f.id == id).ok_or_else(|| VerifyError::UnknownFinite(id.to_string()))
}

/// Exact check of one finite identity. Parameters outside its hypothesis give
/// a skipped report, not a failure.
pub fn verify_finite(id: &str, p: &Params, n: u64) -> Result<Report, VerifyError> {
    let fi = find_finite(id)?;
    let start = std::time::Instant::now();
    if !fi.validate(p, n)? {
        return Ok(Report::new(fi.id, p, n, Status::SkippedInvalidParams, String::new(), String::new(), None));
    }
    let (lhs, rhs) = fi.sides(p, n)?;
    let status = if lhs == rhs { Status::Pass } else { Status::Fail };
    let mut r = Report::new(fi.id, p, n, status, format_rational(&lhs), format_rational(&rhs), None);
    r.ms = start.elapsed().as_millis() as u64;
    Ok(r)
}
