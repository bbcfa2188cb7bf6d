//! Exact verification of finite identities, infinite sums and the printed
//! example values, with JSON-lines reports.

mod finite;

pub use finite::{find_finite, finite_identities, verify_finite, Cross, FiniteIdentity, FiniteKind};

use crate::arith::{format_rational, parse_rational, quad_to_scientific, BigRational, QuadRat};
use crate::catalog::{self, CatalogEntry, CatalogError, Params, Summation};
use crate::config::SuiteConfig;
use crate::identities::{sweep_identities, IdentityError};
use crate::parallel::ordered_map;
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error("unknown finite identity {0:?}")]
    UnknownFinite(String),
    #[error("{0} has no telescoped closed form")]
    NotTelescoped(&'static str),
    #[error("N_probe must be at least 8 (got {0})")]
    Probe(u64),
    #[error("the number of terms N must be at least 1")]
    Terms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedInvalidParams,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    pub m: i64,
    pub n: i64,
    pub q: i64,
    pub p: i64,
    #[serde(rename = "N")]
    pub terms: u64,
}

/// One verification outcome. Serializes to the JSON-lines report schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub entry_id: String,
    pub params: ReportParams,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub tail: Option<String>,
    pub ms: u64,
    /// Grouping key for the summary.
    #[serde(skip)]
    pub family: String,
}

impl Report {
    pub fn new(
        id: &str,
        p: &Params,
        terms: u64,
        status: Status,
        lhs: String,
        rhs: String,
        tail: Option<String>,
    ) -> Self {
        Report {
            entry_id: id.to_string(),
            params: ReportParams { m: p.m, n: p.n, q: p.q, p: p.p, terms },
            status,
            lhs,
            rhs,
            tail,
            ms: 0,
            family: family_of(id),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Summary key: the catalog family of an entry or of a finite identity's base
/// entry, `cross` for cross identities, `identities` for the sweep.
fn family_of(id: &str) -> String {
    if let Ok(e) = catalog::find(id) {
        return e.family.to_string();
    }
    if let Ok(f) = find_finite(id) {
        return match f.base_entry() {
            Some(e) => family_of(e),
            None => "cross".to_string(),
        };
    }
    if id.starts_with("identity-") {
        return "identities".to_string();
    }
    String::new()
}

/// Mean of `S_N` and `S_{N+1}` for Cesàro entries, `S_N` otherwise.
pub fn effective_sums(entry: &CatalogEntry, p: &Params, ns: &[u64]) -> Result<Vec<BigRational>, CatalogError> {
    match entry.summation {
        Summation::Ordinary => catalog::partial_sums(entry, p, ns),
        Summation::Cesaro => {
            let mut cps = Vec::with_capacity(2 * ns.len());
            for &n in ns {
                cps.push(n);
                cps.push(n + 1);
            }
            let s = catalog::partial_sums(entry, p, &cps)?;
            let half = BigRational::new(1.into(), 2.into());
            Ok(s.chunks(2).map(|c| (&c[0] + &c[1]) * &half).collect())
        }
    }
}

/// `|S_N - C|` at each `N`, exactly.
pub fn gaps(entry: &CatalogEntry, p: &Params, ns: &[u64]) -> Result<(QuadRat, Vec<QuadRat>), CatalogError> {
    let closed = catalog::closed_form(entry, p)?;
    let sums = effective_sums(entry, p, ns)?;
    let gaps = sums.iter().map(|s| (QuadRat::from(s) - &closed).abs()).collect();
    Ok((closed, gaps))
}

/// Certifies convergence of an entry to its closed form: passes iff
/// `|S_{2N} - C| < |S_N - C| < threshold`, or both gaps vanish.
pub fn verify_infinite(
    entry_id: &str,
    p: &Params,
    n_probe: u64,
    threshold: &BigRational,
) -> Result<Report, VerifyError> {
    let entry = catalog::find(entry_id)?;
    if n_probe < 8 {
        return Err(VerifyError::Probe(n_probe));
    }
    let start = Instant::now();
    if !entry.validate(p) {
        return Ok(Report::new(entry.id, p, n_probe, Status::SkippedInvalidParams, String::new(), String::new(), None));
    }
    let (closed, g) = gaps(entry, p, &[n_probe, 2 * n_probe])?;
    let thr = QuadRat::from(threshold);
    let both_zero = g[0].is_zero() && g[1].is_zero();
    let pass = both_zero || (g[1] < g[0] && g[0] < thr);
    let lhs = effective_sums(entry, p, &[n_probe])?.remove(0);
    let mut r = Report::new(
        entry.id,
        p,
        n_probe,
        if pass { Status::Pass } else { Status::Fail },
        format_rational(&lhs),
        closed.to_string(),
        Some(quad_to_scientific(&g[0], 6).expect("6 significant digits")),
    );
    r.ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// A value printed for a specific parameter tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrintedExample {
    pub entry: &'static str,
    pub params: Params,
    pub value: &'static str,
}

const fn ex(entry: &'static str, m: i64, n: i64, q: i64, value: &'static str) -> PrintedExample {
    PrintedExample { entry, params: Params::new(m, n, q, 0), value }
}

pub const PRINTED_EXAMPLES: [PrintedExample; 23] = [
    ex("A3", 1, 1, 1, "1/1"),
    ex("A3", 1, 1, 3, "143/960"),
    ex("A3", 3, 1, 3, "938359017897442612/5579104720519492358676480"),
    ex("A3", 5, 3, 1, "1/13970032097862115517068710877593600"),
    ex("A4", 1, 2, 1, "1/9"),
    ex("A4", 2, 1, 1, "1/18"),
    ex("A4", 2, 6, 1, "1/44444622716928"),
    ex("C1", 1, 2, 1, "1/3"),
    ex("C1", 1, 1, 2, "5/6"),
    ex("C1", 2, 7, 1, "1/6427623373464462"),
    ex("C2", 1, 1, 2, "1/6"),
    ex("C2", 1, 3, 2, "271/156672"),
    ex("C2", 2, 4, 2, "177072540680427/166704475185956548320480"),
    ex("J1", 1, 1, 2, "2/1"),
    ex("J1", 1, 2, 1, "1/1"),
    ex("J1", 3, 2, 2, "1288981/35850395750400"),
    ex("J1c", 1, 1, 1, "1/1"),
    ex("J1c", 2, 1, 1, "1/108"),
    ex("J1c", 3, 2, 2, "636693716175181614930457/1701394375843622618689225675379000792710492054565683200"),
    ex("N3", 1, 1, 1, "1/128"),
    ex("N3L", 1, 1, 1, "1/829440"),
    ex("N4", 1, 3, 1, "1/128"),
    ex("N4L", 1, 3, 1, "1/10240"),
];

pub const EXAMPLE_PROBE: u64 = 64;

pub fn example_threshold() -> BigRational {
    parse_rational("1/1000000000000000").expect("valid literal")
}

/// Checks one printed value: the closed form must equal it exactly and the
/// series must certify at `N_probe = 64`.
pub fn verify_example(e: &PrintedExample) -> Result<Report, VerifyError> {
    let start = Instant::now();
    let closed = catalog::closed_form(catalog::find(e.entry)?, &e.params)?;
    let expected =
        QuadRat::from(parse_rational(e.value).map_err(|source| CatalogError::Arith { id: "example", source })?);
    let inf = verify_infinite(e.entry, &e.params, EXAMPLE_PROBE, &example_threshold())?;
    let status = if closed == expected && inf.passed() { Status::Pass } else { Status::Fail };
    let mut r =
        Report::new(e.entry, &e.params, EXAMPLE_PROBE, status, closed.to_string(), expected.to_string(), inf.tail);
    r.ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

pub fn reproduce_printed_examples() -> Result<Vec<Report>, VerifyError> {
    ordered_map(&PRINTED_EXAMPLES, verify_example).into_iter().collect()
}

/// Probe size for the certification grid: slowly decaying summands get a
/// proportionally larger `N` so the threshold stays meaningful.
pub fn grid_probe(entry: &CatalogEntry, p: &Params, n_probe: u64) -> u64 {
    let rate = match entry.summation {
        Summation::Ordinary => catalog::decay_rate(entry, p),
        Summation::Cesaro => 2 * p.n,
    };
    if rate <= 0 {
        return n_probe;
    }
    n_probe.max((2 * n_probe).div_ceil(rate as u64))
}

/// Valid parameter tuples of an entry within the given bounds.
pub fn param_grid(entry: &CatalogEntry, max_m: i64, max_n: i64, max_q: i64, max_p: i64) -> Vec<Params> {
    if let Some(fp) = entry.frozen {
        return vec![fp];
    }
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            for q in 1..=max_q {
                for p in 0..=max_p {
                    let params = Params::new(m, n, q, p);
                    if entry.validate(&params) {
                        out.push(params);
                    }
                }
            }
        }
    }
    out
}

pub const FINITE_MAX_MNQ: i64 = 3;
pub const FINITE_MAX_P: i64 = 2;

/// One report per valid `(id, m, n, q, p)` cell, covering `N = 1..=max_terms`.
/// The report carries the first failing `N`, or `max_terms` if all pass.
pub fn finite_grid(cfg: &SuiteConfig) -> Result<Vec<Report>, VerifyError> {
    let mut cells = Vec::new();
    for fi in finite_identities() {
        let selected = match fi.base_entry() {
            Some(e) => cfg.selects(e),
            None => cfg.all_families(),
        };
        if !selected {
            continue;
        }
        let cross = fi.base_entry().is_none();
        for m in 1..=FINITE_MAX_MNQ {
            for n in 1..=FINITE_MAX_MNQ {
                for q in 1..=FINITE_MAX_MNQ {
                    for p in 0..=FINITE_MAX_P {
                        let params = Params::new(m, n, q, p);
                        if fi.validate(&params, 1)? {
                            cells.push((fi.id, params, if cross { 1 } else { cfg.finite_max_terms }));
                        }
                    }
                }
            }
        }
    }
    ordered_map(&cells, |(id, p, max)| -> Result<Report, VerifyError> {
        let start = Instant::now();
        let mut last = None;
        for n in 1..=*max {
            let r = verify_finite(id, p, n)?;
            if !r.passed() {
                last = Some(r);
                break;
            }
            last = Some(r);
        }
        let mut r = last.expect("at least one term");
        r.ms = start.elapsed().as_millis() as u64;
        Ok(r)
    })
    .into_iter()
    .collect()
}

pub fn infinite_grid(cfg: &SuiteConfig) -> Result<Vec<Report>, VerifyError> {
    let mut cells = Vec::new();
    for entry in catalog::catalog_list().iter().filter(|e| cfg.selects(e.id)) {
        for p in param_grid(entry, cfg.max_m, cfg.max_n, cfg.max_q, cfg.max_p) {
            cells.push((entry, p));
        }
    }
    ordered_map(&cells, |(entry, p)| verify_infinite(entry.id, p, grid_probe(entry, p, cfg.n_probe), &cfg.threshold))
        .into_iter()
        .collect()
}

/// One report per auxiliary identity. The witness is the first failing trial,
/// or the last trial when all pass.
pub fn identity_reports(cfg: &SuiteConfig) -> Result<Vec<Report>, VerifyError> {
    let sweep = sweep_identities(cfg.sweep_range, cfg.sweep_trials, cfg.seed)?;
    let zero = Params::new(0, 0, 0, 0);
    Ok(sweep
        .identities
        .iter()
        .map(|s| {
            let status = if s.failures.is_empty() { Status::Pass } else { Status::Fail };
            let (lhs, rhs) = s.witness.as_ref().map(|w| (w.lhs.clone(), w.rhs.clone())).unwrap_or_default();
            let id = format!("identity-{}", s.id.label());
            Report::new(&id, &zero, s.trials, status, lhs, rhs, None)
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Identities,
    Finite,
    Infinite,
    Examples,
    All,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
}

impl Counts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::SkippedInvalidParams => self.skipped += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: Counts,
    pub families: BTreeMap<String, Counts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Summary {
    pub fn of(reports: &[Report]) -> Self {
        let mut total = Counts::default();
        let mut families: BTreeMap<String, Counts> = BTreeMap::new();
        for r in reports {
            total.add(r.status);
            families.entry(r.family.clone()).or_default().add(r.status);
        }
        Summary { total, families, elapsed_ms: None }
    }

    pub fn ok(&self) -> bool {
        self.total.fail == 0
    }
}

/// Runs the selected suites in a fixed order: identity sweep, finite grid,
/// certification grid, printed examples.
pub fn run_suite(cfg: &SuiteConfig, scope: Scope) -> Result<(Vec<Report>, Summary), VerifyError> {
    let start = Instant::now();
    let wants = |s: Scope| scope == s || scope == Scope::All;
    let mut reports = Vec::new();
    if wants(Scope::Identities) && cfg.all_families() {
        reports.extend(identity_reports(cfg)?);
    }
    if wants(Scope::Finite) {
        reports.extend(finite_grid(cfg)?);
    }
    if wants(Scope::Infinite) {
        reports.extend(infinite_grid(cfg)?);
    }
    if wants(Scope::Examples) {
        reports.extend(reproduce_printed_examples()?.into_iter().filter(|r| cfg.selects(&r.entry_id)));
    }
    let mut summary = Summary::of(&reports);
    summary.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok((reports, summary))
}
