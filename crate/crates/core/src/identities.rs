//! The auxiliary Fibonacci-Lucas identities used by the proofs, as data.
//!
//! Each identity stores a two-sided evaluator over its integer parameters, a
//! validity rule for those parameters, and its display form. Labels follow the
//! conventional numbering (8a through 14b).

use crate::parallel::ordered_map;
use crate::sequences::{fib, lucas};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("identity {id} takes {expected} parameters, got {got}")]
    Arity { id: &'static str, expected: usize, got: usize },
    #[error("identity {id}: index {expr} = {value} is negative")]
    IndexUnderflow { id: &'static str, expr: &'static str, value: i64 },
    #[error("identity {id}: {reason}")]
    Constraint { id: &'static str, reason: &'static str },
    #[error("unknown identity {0:?}")]
    Unknown(String),
    #[error("sweep range must be at least 4, got {0}")]
    RangeTooSmall(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    I8a,
    I8b,
    I9a,
    I9b,
    I10a,
    I10b,
    I11,
    I12a,
    I12b,
    I13a,
    I13b,
    I14a,
    I14b,
}

type Sides = Result<(BigInt, BigInt), IdentityError>;

struct Eval {
    id: &'static str,
}

impl Eval {
    fn idx(&self, expr: &'static str, value: i64) -> Result<u64, IdentityError> {
        u64::try_from(value).map_err(|_| IdentityError::IndexUnderflow { id: self.id, expr, value })
    }
    fn f(&self, expr: &'static str, value: i64) -> Result<BigInt, IdentityError> {
        Ok(fib(self.idx(expr, value)?))
    }
    fn l(&self, expr: &'static str, value: i64) -> Result<BigInt, IdentityError> {
        Ok(lucas(self.idx(expr, value)?))
    }
}

fn neg_one_pow(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::I8a,
        IdentityId::I8b,
        IdentityId::I9a,
        IdentityId::I9b,
        IdentityId::I10a,
        IdentityId::I10b,
        IdentityId::I11,
        IdentityId::I12a,
        IdentityId::I12b,
        IdentityId::I13a,
        IdentityId::I13b,
        IdentityId::I14a,
        IdentityId::I14b,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IdentityId::I8a => "8a",
            IdentityId::I8b => "8b",
            IdentityId::I9a => "9a",
            IdentityId::I9b => "9b",
            IdentityId::I10a => "10a",
            IdentityId::I10b => "10b",
            IdentityId::I11 => "11",
            IdentityId::I12a => "12a",
            IdentityId::I12b => "12b",
            IdentityId::I13a => "13a",
            IdentityId::I13b => "13b",
            IdentityId::I14a => "14a",
            IdentityId::I14b => "14b",
        }
    }

    pub fn from_label(s: &str) -> Result<Self, IdentityError> {
        Self::ALL.into_iter().find(|id| id.label() == s).ok_or_else(|| IdentityError::Unknown(s.to_string()))
    }

    pub fn params(self) -> &'static [&'static str] {
        match self {
            IdentityId::I12a | IdentityId::I12b => &["t", "u", "v"],
            IdentityId::I14a | IdentityId::I14b => &["u", "v", "p"],
            _ => &["u", "v"],
        }
    }

    pub fn arity(self) -> usize {
        self.params().len()
    }

    pub fn formula(self) -> &'static str {
        match self {
            IdentityId::I8a => "L_v F_u = F_{u+v} + (-1)^v F_{u-v}",
            IdentityId::I8b => "F_v L_u = F_{u+v} - (-1)^v F_{u-v}",
            IdentityId::I9a => "2 F_{u+v} = L_v F_u + L_u F_v",
            IdentityId::I9b => "(-1)^v 2 F_{u-v} = F_u L_v - L_u F_v",
            IdentityId::I10a => "L_v L_u = L_{u+v} + (-1)^v L_{u-v}",
            IdentityId::I10b => "5 F_v F_u = L_{u+v} - (-1)^v L_{u-v}",
            IdentityId::I11 => "(-1)^{u-1} F_{v+u} F_{v-u} = F_u^2 F_{v+1} F_{v-1} - F_v^2 F_{u+1} F_{u-1}",
            IdentityId::I12a => "(-1)^t F_u F_v = F_{t+u} F_{t+v} - F_t F_{t+u+v}",
            IdentityId::I12b => "(-1)^{t+1} 5 F_u F_v = L_{t+u} L_{t+v} - L_t L_{t+u+v}",
            IdentityId::I13a => "F_{u-v} F_{u+v} = F_u^2 + (-1)^{u+v-1} F_v^2",
            IdentityId::I13b => "5 F_{u-v} F_{u+v} = L_u^2 + (-1)^{u+v-1} L_v^2",
            IdentityId::I14a => "F_v F_{2u+v+p} = F_{u+v+p} F_{u+v} + (-1)^{v+1} F_{u+p} F_u",
            IdentityId::I14b => "F_v L_{2u+v+p} = L_{u+v+p} F_{u+v} + (-1)^{v+1} L_{u+p} F_u",
        }
    }

    /// Smallest value each parameter may take.
    fn lower_bound(self) -> i64 {
        match self {
            IdentityId::I11 => 1,
            _ => 0,
        }
    }

    fn check_constraints(self, p: &[i64]) -> Result<(), IdentityError> {
        let id = self.label();
        if p.iter().any(|&x| x < self.lower_bound()) {
            let reason =
                if self.lower_bound() == 1 { "parameters must be positive" } else { "parameters must be non-negative" };
            return Err(IdentityError::Constraint { id, reason });
        }
        match self {
            IdentityId::I11 if p[0] > p[1] => Err(IdentityError::Constraint { id, reason: "requires u <= v" }),
            IdentityId::I12a | IdentityId::I12b | IdentityId::I14a | IdentityId::I14b => Ok(()),
            IdentityId::I11 => Ok(()),
            _ if p[0] < p[1] => Err(IdentityError::Constraint { id, reason: "requires u >= v" }),
            _ => Ok(()),
        }
    }

    /// Both sides as exact integers.
    pub fn sides(self, params: &[i64]) -> Sides {
        if params.len() != self.arity() {
            return Err(IdentityError::Arity { id: self.label(), expected: self.arity(), got: params.len() });
        }
        let e = Eval { id: self.label() };
        let s = |x: i64| BigInt::from(neg_one_pow(x));
        match self {
            IdentityId::I8a
            | IdentityId::I8b
            | IdentityId::I9a
            | IdentityId::I9b
            | IdentityId::I10a
            | IdentityId::I10b
            | IdentityId::I13a
            | IdentityId::I13b => {
                let (u, v) = (params[0], params[1]);
                Ok(match self {
                    IdentityId::I8a => (e.l("v", v)? * e.f("u", u)?, e.f("u+v", u + v)? + s(v) * e.f("u-v", u - v)?),
                    IdentityId::I8b => (e.f("v", v)? * e.l("u", u)?, e.f("u+v", u + v)? - s(v) * e.f("u-v", u - v)?),
                    IdentityId::I9a => {
                        (e.f("u+v", u + v)? * 2, e.l("v", v)? * e.f("u", u)? + e.l("u", u)? * e.f("v", v)?)
                    }
                    IdentityId::I9b => {
                        (s(v) * 2 * e.f("u-v", u - v)?, e.f("u", u)? * e.l("v", v)? - e.l("u", u)? * e.f("v", v)?)
                    }
                    IdentityId::I10a => (e.l("v", v)? * e.l("u", u)?, e.l("u+v", u + v)? + s(v) * e.l("u-v", u - v)?),
                    IdentityId::I10b => {
                        (e.f("v", v)? * e.f("u", u)? * 5, e.l("u+v", u + v)? - s(v) * e.l("u-v", u - v)?)
                    }
                    IdentityId::I13a => {
                        let fu = e.f("u", u)?;
                        let fv = e.f("v", v)?;
                        (e.f("u-v", u - v)? * e.f("u+v", u + v)?, &fu * &fu + s(u + v - 1) * &fv * &fv)
                    }
                    _ => {
                        let lu = e.l("u", u)?;
                        let lv = e.l("v", v)?;
                        (e.f("u-v", u - v)? * e.f("u+v", u + v)? * 5, &lu * &lu + s(u + v - 1) * &lv * &lv)
                    }
                })
            }
            IdentityId::I11 => {
                let (u, v) = (params[0], params[1]);
                let fu = e.f("u", u)?;
                let fv = e.f("v", v)?;
                let lhs = s(u - 1) * e.f("v+u", v + u)? * e.f("v-u", v - u)?;
                let rhs = &fu * &fu * e.f("v+1", v + 1)? * e.f("v-1", v - 1)?
                    - &fv * &fv * e.f("u+1", u + 1)? * e.f("u-1", u - 1)?;
                Ok((lhs, rhs))
            }
            IdentityId::I12a | IdentityId::I12b => {
                let (t, u, v) = (params[0], params[1], params[2]);
                let fuv = e.f("u", u)? * e.f("v", v)?;
                Ok(if self == IdentityId::I12a {
                    (s(t) * fuv, e.f("t+u", t + u)? * e.f("t+v", t + v)? - e.f("t", t)? * e.f("t+u+v", t + u + v)?)
                } else {
                    (
                        s(t + 1) * 5 * fuv,
                        e.l("t+u", t + u)? * e.l("t+v", t + v)? - e.l("t", t)? * e.l("t+u+v", t + u + v)?,
                    )
                })
            }
            IdentityId::I14a | IdentityId::I14b => {
                let (u, v, p) = (params[0], params[1], params[2]);
                let fv = e.f("v", v)?;
                let fuv = e.f("u+v", u + v)?;
                let fu = e.f("u", u)?;
                Ok(if self == IdentityId::I14a {
                    (
                        fv * e.f("2u+v+p", 2 * u + v + p)?,
                        e.f("u+v+p", u + v + p)? * fuv + s(v + 1) * e.f("u+p", u + p)? * fu,
                    )
                } else {
                    (
                        fv * e.l("2u+v+p", 2 * u + v + p)?,
                        e.l("u+v+p", u + v + p)? * fuv + s(v + 1) * e.l("u+p", u + p)? * fu,
                    )
                })
            }
        }
    }

    /// True iff both sides agree exactly. Parameters outside the identity's
    /// domain are errors, not `false`.
    pub fn check(self, params: &[i64]) -> Result<bool, IdentityError> {
        if params.len() != self.arity() {
            return Err(IdentityError::Arity { id: self.label(), expected: self.arity(), got: params.len() });
        }
        self.check_constraints(params)?;
        let (l, r) = self.sides(params)?;
        Ok(l == r)
    }

    fn sample(self, rng: &mut ChaCha8Rng, range: i64) -> Vec<i64> {
        loop {
            let p: Vec<i64> = (0..self.arity()).map(|_| rng.gen_range(self.lower_bound()..=range)).collect();
            if self.check_constraints(&p).is_ok() {
                return p;
            }
        }
    }
}

pub fn check_identity(id: IdentityId, params: &[i64]) -> Result<bool, IdentityError> {
    id.check(params)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub params: Vec<i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentitySweep {
    pub id: IdentityId,
    pub trials: u64,
    /// Failing trials in trial order.
    pub failures: Vec<TrialOutcome>,
    /// First failure, or the last trial when all pass.
    pub witness: Option<TrialOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub range: u64,
    pub trials: u64,
    pub seed: u64,
    pub identities: Vec<IdentitySweep>,
}

impl SweepReport {
    pub fn failure_count(&self) -> usize {
        self.identities.iter().map(|s| s.failures.len()).sum()
    }
}

/// Checks every identity on `trials` seeded random parameter tuples drawn
/// uniformly from `[lower, range]` with rejection of invalid tuples.
pub fn sweep_identities(range: u64, trials: u64, seed: u64) -> Result<SweepReport, IdentityError> {
    if range < 4 {
        return Err(IdentityError::RangeTooSmall(range));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut identities = Vec::with_capacity(IdentityId::ALL.len());
    for id in IdentityId::ALL {
        let tuples: Vec<Vec<i64>> = (0..trials).map(|_| id.sample(&mut rng, range as i64)).collect();
        let outcomes = ordered_map(&tuples, |p| {
            let (l, r) = id.sides(p).expect("sampled parameters are valid");
            (l == r, TrialOutcome { params: p.clone(), lhs: l.to_string(), rhs: r.to_string() })
        });
        let failures: Vec<TrialOutcome> = outcomes.iter().filter(|(ok, _)| !ok).map(|(_, o)| o.clone()).collect();
        let witness = failures.first().cloned().or_else(|| outcomes.last().map(|(_, o)| o.clone()));
        identities.push(IdentitySweep { id, trials, failures, witness });
    }
    Ok(SweepReport { range, trials, seed, identities })
}
