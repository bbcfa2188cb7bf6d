//! Declarative catalog of Fibonacci-Lucas reciprocal sums.
//!
//! Every entry is data: a summand built from factor lists over symbolic
//! indices, a hypothesis on `(m, n, q, p)`, and a closed form assembled from a
//! finite telescoped sum plus an optional constant in Q(√5). One evaluator
//! interprets all of them.

mod entries;
mod eval;

pub use entries::family_title;
pub use eval::{closed_form, decay_rate, partial_sum, partial_sums, term_at, term_at_shifted};
pub(crate) use eval::{eval_coef, eval_term};

use std::fmt;
use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("{id} requires {hypothesis} (got m={m}, n={n}, q={q}, p={p})", m = params.m, n = params.n, q = params.q, p = params.p)]
    InvalidParams { id: &'static str, hypothesis: String, params: Params },
    #[error("{id}: index {expr} evaluates to {value}, below the allowed minimum {min}")]
    IndexOutOfRange { id: &'static str, expr: String, value: i64, min: i64 },
    #[error("{id}: {source}")]
    Arith { id: &'static str, source: ArithError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Params {
    pub m: i64,
    pub n: i64,
    pub q: i64,
    pub p: i64,
}

impl Params {
    pub const fn new(m: i64, n: i64, q: i64, p: i64) -> Self {
        Params { m, n, q, p }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}, n={}, q={}, p={}", self.m, self.n, self.q, self.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Seq {
    F,
    L,
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Seq::F => "F",
            Seq::L => "L",
        })
    }
}

/// `k·nk + jq·jnq + n·n + nq·nq + mnq·mnq + np·np + one`, where `nk` is
/// `n` times the summation variable and `j` is the product variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IndexExpr {
    pub k: i64,
    pub jq: i64,
    pub n: i64,
    pub nq: i64,
    pub mnq: i64,
    pub np: i64,
    pub one: i64,
}

impl IndexExpr {
    /// `c·nk`.
    pub const fn nk(c: i64) -> Self {
        IndexExpr { k: c, jq: 0, n: 0, nq: 0, mnq: 0, np: 0, one: 0 }
    }
    /// A constant index with no `k` dependence.
    pub const fn konst() -> Self {
        IndexExpr { k: 0, jq: 0, n: 0, nq: 0, mnq: 0, np: 0, one: 0 }
    }
    pub const fn jnq(mut self, c: i64) -> Self {
        self.jq = c;
        self
    }
    pub const fn n(mut self, c: i64) -> Self {
        self.n = c;
        self
    }
    pub const fn nq(mut self, c: i64) -> Self {
        self.nq = c;
        self
    }
    pub const fn mnq(mut self, c: i64) -> Self {
        self.mnq = c;
        self
    }
    pub const fn np(mut self, c: i64) -> Self {
        self.np = c;
        self
    }
    pub const fn one(mut self, c: i64) -> Self {
        self.one = c;
        self
    }

    pub fn eval(&self, p: &Params, k: i64, j: i64) -> i64 {
        self.k * p.n * k
            + self.jq * j * p.n * p.q
            + self.n * p.n
            + self.nq * p.n * p.q
            + self.mnq * p.m * p.n * p.q
            + self.np * p.n * p.p
            + self.one
    }
}

impl fmt::Display for IndexExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [
            (self.k, "nk"),
            (self.jq, "jnq"),
            (self.n, "n"),
            (self.nq, "nq"),
            (self.mnq, "mnq"),
            (self.np, "np"),
            (self.one, ""),
        ];
        let mut out = String::new();
        for (c, sym) in parts {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let coeff = if mag == 1 && !sym.is_empty() { String::new() } else { mag.to_string() };
            out.push_str(&format!("{sign}{coeff}{sym}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `a·m + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub m: i64,
    pub c: i64,
}

impl Affine {
    pub const fn new(m: i64, c: i64) -> Self {
        Affine { m, c }
    }
    pub fn eval(&self, p: &Params) -> i64 {
        self.m * p.m + self.c
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m, self.c) {
            (0, c) => write!(f, "{c}"),
            (a, 0) => write!(f, "{}m", if a == 1 { String::new() } else { a.to_string() }),
            (a, c) => {
                let a = if a == 1 { String::new() } else { a.to_string() };
                if c < 0 {
                    write!(f, "{a}m-{}", -c)
                } else {
                    write!(f, "{a}m+{c}")
                }
            }
        }
    }
}

/// Inclusive range of the product variable `j`; empty when `hi < lo`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JRange {
    pub lo: Affine,
    pub hi: Affine,
}

/// `seq(index)^power`, or a product of such over a `j` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub seq: Seq,
    pub index: IndexExpr,
    pub power: u32,
    pub range: Option<JRange>,
}

impl Factor {
    pub const fn one(seq: Seq, index: IndexExpr) -> Self {
        Factor { seq, index, power: 1, range: None }
    }
    /// `∏_{j=lo}^{hi} seq(index)`, bounds as `a·m + c`.
    pub const fn prod(seq: Seq, index: IndexExpr, lo: (i64, i64), hi: (i64, i64)) -> Self {
        Factor {
            seq,
            index,
            power: 1,
            range: Some(JRange { lo: Affine::new(lo.0, lo.1), hi: Affine::new(hi.0, hi.1) }),
        }
    }
    pub const fn pow(mut self, power: u32) -> Self {
        self.power = power;
        self
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.seq, self.index)?;
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        if let Some(r) = &self.range {
            write!(f, " for j={}..{}", r.lo, r.hi)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignMode {
    None,
    /// `(-1)^{k-1}`.
    AltK,
    /// `(-1)^k`.
    AltKPlusOne,
    /// `(-1)^{nk-1}`.
    AltNK,
}

impl fmt::Display for SignMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignMode::None => "+1",
            SignMode::AltK => "(-1)^(k-1)",
            SignMode::AltKPlusOne => "(-1)^k",
            SignMode::AltNK => "(-1)^(nk-1)",
        })
    }
}

/// `sign(k) · ∏ num / ∏ den`. An empty numerator is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub sign: SignMode,
    pub num: Vec<Factor>,
    pub den: Vec<Factor>,
}

impl Term {
    pub fn new(sign: SignMode, num: Vec<Factor>, den: Vec<Factor>) -> Self {
        Term { sign, num, den }
    }
}

fn join(fs: &[Factor]) -> String {
    if fs.is_empty() {
        return "1".to_string();
    }
    fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" * ")
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * [{}] / [{}]", self.sign, join(&self.num), join(&self.den))
    }
}

/// `num/den · ∏ seq(index)^exp` with `exp` in {1, -1}; indices have no `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coef {
    pub num: i64,
    pub den: i64,
    pub seq: Vec<(Seq, IndexExpr, i32)>,
}

impl Coef {
    pub fn new(num: i64, den: i64, seq: Vec<(Seq, IndexExpr, i32)>) -> Self {
        Coef { num, den, seq }
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut top = vec![self.num.to_string()];
        let mut bottom = if self.den == 1 { vec![] } else { vec![self.den.to_string()] };
        for (s, ix, e) in &self.seq {
            let item = format!("{s}({ix})");
            if *e > 0 {
                top.push(item);
            } else {
                bottom.push(item);
            }
        }
        if top.len() > 1 && top[0] == "1" {
            top.remove(0);
        } else if top.len() > 1 && top[0] == "-1" {
            top.remove(0);
            top[0] = format!("-{}", top[0]);
        }
        write!(f, "{}", top.join("*"))?;
        if !bottom.is_empty() {
            write!(f, "/({})", bottom.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Upper {
    Q,
    TwoQ,
}

/// The irrational or power-of-five factor of a closed form's constant term,
/// which is always `coef · kind · q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstKind {
    Sqrt5PowM,
    InvSqrt5PowM,
    PhiPowMNP,
    FivePowM,
    InvFivePowM,
    One,
}

impl fmt::Display for ConstKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstKind::Sqrt5PowM => "sqrt5^m",
            ConstKind::InvSqrt5PowM => "sqrt5^(-m)",
            ConstKind::PhiPowMNP => "phi^(mnp)",
            ConstKind::FivePowM => "5^m",
            ConstKind::InvFivePowM => "5^(-m)",
            ConstKind::One => "1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedFormSpec {
    /// `sum_coef · Σ_{k=1}^{upper} inner(k) + const_coef · kind · q`.
    Telescoped { sum_coef: Coef, upper: Upper, inner: Term, constant: Option<(Coef, ConstKind)> },
    /// A stated value, as a `p/q` string.
    Fixed(&'static str),
}

impl fmt::Display for ClosedFormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormSpec::Fixed(v) => write!(f, "{v}"),
            ClosedFormSpec::Telescoped { sum_coef, upper, inner, constant } => {
                let up = match upper {
                    Upper::Q => "q",
                    Upper::TwoQ => "2q",
                };
                write!(f, "{sum_coef} * sum_(k=1..{up}) {inner}")?;
                if let Some((c, kind)) = constant {
                    write!(f, " + {c} * {kind} * q")?;
                }
                Ok(())
            }
        }
    }
}

/// Parity hypotheses on `(m, n, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cond {
    Any,
    AllOdd,
    MnqEven,
    QOddMnEven,
    NOddQEven,
    QEvenOrMnqOdd,
    QOdd,
    QEven,
}

impl Cond {
    pub fn holds(self, p: &Params) -> bool {
        let odd = |x: i64| x % 2 != 0;
        match self {
            Cond::Any => true,
            Cond::AllOdd => odd(p.m) && odd(p.n) && odd(p.q),
            Cond::MnqEven => !odd(p.m * p.n * p.q),
            Cond::QOddMnEven => odd(p.q) && !odd(p.m * p.n),
            Cond::NOddQEven => odd(p.n) && !odd(p.q),
            Cond::QEvenOrMnqOdd => !odd(p.q) || odd(p.m * p.n * p.q),
            Cond::QOdd => odd(p.q),
            Cond::QEven => !odd(p.q),
        }
    }

    /// Compact form for listings.
    pub fn short(self) -> &'static str {
        match self {
            Cond::Any => "any",
            Cond::AllOdd => "m,n,q all odd",
            Cond::MnqEven => "mnq even",
            Cond::QOddMnEven => "q odd and mn even",
            Cond::NOddQEven => "n odd and q even",
            Cond::QEvenOrMnqOdd => "q even or mnq odd",
            Cond::QOdd => "q odd",
            Cond::QEven => "q even",
        }
    }

    fn sentence(self) -> &'static str {
        match self {
            Cond::Any => "m, n and q are positive integers",
            Cond::AllOdd => "m, n and q are positive odd integers",
            Cond::MnqEven => "m, n and q are positive integers such that mnq is even",
            Cond::QOddMnEven => "m, n and q are positive integers such that q is odd and mn is even",
            Cond::NOddQEven => "m, n and q are positive integers such that n is odd and q is even",
            Cond::QEvenOrMnqOdd => "m, n and q are positive integers such that q is even or mnq is odd",
            Cond::QOdd => "m, n and q are positive integers such that q is odd",
            Cond::QEven => "m, n and q are positive integers such that q is even",
        }
    }
}

/// Admissible values of `p`. Entries without `p` require `p = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PDomain {
    Zero,
    Positive,
    NonNegative,
}

impl PDomain {
    pub fn holds(self, p: i64) -> bool {
        match self {
            PDomain::Zero => p == 0,
            PDomain::Positive => p >= 1,
            PDomain::NonNegative => p >= 0,
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            PDomain::Zero => "unused (p=0)",
            PDomain::Positive => "p >= 1",
            PDomain::NonNegative => "p >= 0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Summation {
    Ordinary,
    /// The summands do not vanish; the sum is the limit of the averages
    /// `(S_N + S_{N+1})/2`.
    Cesaro,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub family: &'static str,
    pub label: &'static str,
    pub cond: Cond,
    pub p_domain: PDomain,
    /// Parameters fixed by the statement; no others are accepted.
    pub frozen: Option<Params>,
    pub summation: Summation,
    pub term: Term,
    pub closed: ClosedFormSpec,
    pub notes: &'static str,
}

impl CatalogEntry {
    /// Human-readable hypothesis, used in error messages.
    pub fn hypothesis(&self) -> String {
        if let Some(fp) = self.frozen {
            return format!("the fixed parameters ({fp})");
        }
        match self.p_domain {
            PDomain::Zero => self.cond.sentence().to_string(),
            PDomain::Positive => format!("{}, and p is a positive integer", self.cond.sentence()),
            PDomain::NonNegative => format!("{}, and p is a non-negative integer", self.cond.sentence()),
        }
    }

    pub fn free_params(&self) -> &'static [&'static str] {
        match (self.frozen, self.p_domain) {
            (Some(_), _) => &[],
            (None, PDomain::Zero) => &["m", "n", "q"],
            (None, _) => &["m", "n", "q", "p"],
        }
    }

    pub fn validate(&self, p: &Params) -> bool {
        if let Some(fp) = self.frozen {
            return *p == fp;
        }
        p.m >= 1 && p.n >= 1 && p.q >= 1 && self.p_domain.holds(p.p) && self.cond.holds(p)
    }

    pub fn check_params(&self, p: &Params) -> Result<(), CatalogError> {
        if self.validate(p) {
            Ok(())
        } else {
            Err(CatalogError::InvalidParams { id: self.id, hypothesis: self.hypothesis(), params: *p })
        }
    }

    /// Default parameters for `eval`: the frozen ones, if any.
    pub fn default_params(&self) -> Option<Params> {
        self.frozen
    }

    /// Structured text record with a fixed field order.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: &str| {
            s.push_str(&format!("{k:<12} {v}\n"));
        };
        line("id:", self.id);
        line("family:", self.family);
        line("label:", self.label);
        line("hypothesis:", &self.hypothesis());
        line("parity:", if self.frozen.is_some() { "fixed" } else { self.cond.short() });
        line("p:", if self.frozen.is_some() { "fixed" } else { self.p_domain.short() });
        line(
            "summation:",
            match self.summation {
                Summation::Ordinary => "ordinary",
                Summation::Cesaro => "cesaro (mean of consecutive partial sums)",
            },
        );
        line("sign:", &self.term.sign.to_string());
        line("numerator:", &join(&self.term.num));
        line("denominator:", &join(&self.term.den));
        line("rhs:", &self.closed.to_string());
        if !self.notes.is_empty() {
            line("notes:", self.notes);
        }
        s
    }
}

pub fn catalog_list() -> &'static [CatalogEntry] {
    entries::all()
}

pub fn find(id: &str) -> Result<&'static CatalogEntry, CatalogError> {
    catalog_list().iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownEntry(id.to_string()))
}

pub fn validate_params(entry: &CatalogEntry, p: &Params) -> bool {
    entry.validate(p)
}

/// Entries whose id starts with `prefix` (all entries for an empty prefix).
pub fn filter_prefix(prefix: &str) -> Vec<&'static CatalogEntry> {
    catalog_list().iter().filter(|e| e.id.starts_with(prefix)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{format_rational, QuadRat};

    fn p(m: i64, n: i64, q: i64, pp: i64) -> Params {
        Params::new(m, n, q, pp)
    }

    #[test]
    fn catalog_has_unique_ids() {
        let list = catalog_list();
        assert_eq!(list.len(), 58);
        let mut ids: Vec<_> = list.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), list.len());
        for e in list {
            assert!(!family_title(e.family).is_empty(), "{}", e.id);
        }
    }

    #[test]
    fn term_examples() {
        let t = |id, pr, k| format_rational(&term_at(find(id).unwrap(), &pr, k).unwrap());
        assert_eq!(t("J1", p(1, 1, 2, 0), 1), "3/4");
        assert_eq!(t("A1", p(1, 1, 1, 0), 2), "-1/2");
        assert_eq!(t("H1", p(1, 1, 1, 0), 1), "2/3");
    }

    #[test]
    fn closed_form_examples() {
        let c = |id, pr| closed_form(find(id).unwrap(), &pr).unwrap();
        assert_eq!(c("A3", p(1, 1, 3, 0)), "143/960".parse::<QuadRat>().unwrap());
        assert_eq!(c("A4", p(2, 1, 1, 0)), "1/18".parse::<QuadRat>().unwrap());
        assert_eq!(c("N3", p(1, 1, 1, 0)), "1/128".parse::<QuadRat>().unwrap());
    }

    #[test]
    fn params_validation() {
        assert!(validate_params(find("J2").unwrap(), &p(1, 1, 1, 0)));
        assert!(!validate_params(find("A3").unwrap(), &p(2, 1, 1, 0)));
        assert!(validate_params(find("L1").unwrap(), &p(1, 2, 1, 0)));
        assert!(!validate_params(find("A6").unwrap(), &p(1, 1, 1, 0)));
        assert!(!validate_params(find("N4").unwrap(), &p(1, 1, 1, 0)));
        let err = closed_form(find("A3").unwrap(), &p(2, 1, 1, 0)).unwrap_err();
        assert!(err.to_string().contains("positive odd integers"), "{err}");
    }

    #[test]
    fn unknown_and_prefix() {
        assert!(matches!(find("Z9"), Err(CatalogError::UnknownEntry(_))));
        assert_eq!(filter_prefix("A").len(), 8);
        assert_eq!(filter_prefix("").len(), 58);
    }

    #[test]
    fn decay_rates() {
        assert_eq!(decay_rate(find("A1").unwrap(), &p(2, 1, 1, 0)), 2);
        assert_eq!(decay_rate(find("A5").unwrap(), &p(1, 1, 1, 0)), 0);
        assert_eq!(decay_rate(find("J1").unwrap(), &p(1, 2, 1, 0)), 4);
    }

    #[test]
    fn dump_field_order() {
        let d = find("A1").unwrap().dump();
        let keys: Vec<_> = d.lines().map(|l| l.split(':').next().unwrap().to_string()).collect();
        assert_eq!(&keys[..4], ["id", "family", "label", "hypothesis"]);
    }
}
