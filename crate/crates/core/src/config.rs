//! Flat `key = value` suite configuration with `#` comments.

use crate::arith::{format_rational, parse_rational, BigRational};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: field `{field}`: {reason}")]
    Field { line: usize, field: String, reason: String },
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Entry-id prefixes; empty means all entries.
    pub families: Vec<String>,
    pub max_m: i64,
    pub max_n: i64,
    pub max_q: i64,
    pub max_p: i64,
    pub n_probe: u64,
    pub threshold: BigRational,
    pub seed: u64,
    pub output: String,
    pub sweep_range: u64,
    pub sweep_trials: u64,
    pub finite_max_terms: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            families: Vec::new(),
            max_m: 2,
            max_n: 2,
            max_q: 2,
            max_p: 1,
            n_probe: 48,
            threshold: parse_rational("1/1000000000000000").expect("valid literal"),
            seed: 1,
            output: "-".to_string(),
            sweep_range: 2000,
            sweep_trials: 2000,
            finite_max_terms: 10,
        }
    }
}

impl SuiteConfig {
    pub fn all_families(&self) -> bool {
        self.families.is_empty()
    }

    pub fn selects(&self, entry_id: &str) -> bool {
        self.all_families() || self.families.iter().any(|f| entry_id.starts_with(f.as_str()))
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = SuiteConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body.split_once('=').ok_or_else(|| ConfigError::Syntax {
                line,
                reason: format!("expected `key = value`, found {body:?}"),
            })?;
            cfg.set(line, key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Io { path: path.display().to_string(), reason: e.to_string() })?;
        Self::parse(&text)
    }

    fn set(&mut self, line: usize, key: &str, value: &str) -> Result<(), ConfigError> {
        let bad = |reason: String| ConfigError::Field { line, field: key.to_string(), reason };
        let int = |lo: i64| -> Result<i64, ConfigError> {
            let v: i64 = value.parse().map_err(|_| bad(format!("expected an integer, found {value:?}")))?;
            if v < lo {
                return Err(bad(format!("must be at least {lo}, found {v}")));
            }
            Ok(v)
        };
        match key {
            "families" => {
                self.families = if value == "all" {
                    Vec::new()
                } else {
                    let list: Vec<String> =
                        value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                    if list.is_empty() {
                        return Err(bad("empty family list".to_string()));
                    }
                    list
                }
            }
            "max_m" => self.max_m = int(1)?,
            "max_n" => self.max_n = int(1)?,
            "max_q" => self.max_q = int(1)?,
            "max_p" => self.max_p = int(0)?,
            "n_probe" => self.n_probe = int(8)? as u64,
            "threshold" => {
                let t = parse_rational(value).map_err(|e| bad(e.to_string()))?;
                if t <= BigRational::from_integer(0.into()) {
                    return Err(bad("must be positive".to_string()));
                }
                self.threshold = t;
            }
            "seed" => {
                self.seed = value.parse().map_err(|_| bad(format!("expected an unsigned integer, found {value:?}")))?
            }
            "output" => {
                if value.is_empty() {
                    return Err(bad("empty path".to_string()));
                }
                self.output = value.to_string();
            }
            "sweep_range" => self.sweep_range = int(4)? as u64,
            "sweep_trials" => self.sweep_trials = int(1)? as u64,
            "finite_max_terms" => self.finite_max_terms = int(1)? as u64,
            _ => return Err(ConfigError::Field { line, field: key.to_string(), reason: "unknown key".to_string() }),
        }
        Ok(())
    }

    /// Canonical text form; parsing it gives back the same config.
    pub fn to_text(&self) -> String {
        let families = if self.all_families() { "all".to_string() } else { self.families.join(",") };
        format!(
            "families = {families}\nmax_m = {}\nmax_n = {}\nmax_q = {}\nmax_p = {}\nn_probe = {}\nthreshold = {}\nseed = {}\noutput = {}\nsweep_range = {}\nsweep_trials = {}\nfinite_max_terms = {}\n",
            self.max_m,
            self.max_n,
            self.max_q,
            self.max_p,
            self.n_probe,
            format_rational(&self.threshold),
            self.seed,
            self.output,
            self.sweep_range,
            self.sweep_trials,
            self.finite_max_terms,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = SuiteConfig::parse("").unwrap();
        assert_eq!(c, SuiteConfig::default());
        assert_eq!((c.max_m, c.max_n, c.max_q, c.max_p, c.n_probe, c.seed), (2, 2, 2, 1, 48, 1));
        assert_eq!(format_rational(&c.threshold), "1/1000000000000000");
        assert_eq!(c.output, "-");
    }

    #[test]
    fn parses_keys_and_comments() {
        let c = SuiteConfig::parse("# suite\nfamilies = J, K  # squares\nseed=7\n\nthreshold = 1/1000\n").unwrap();
        assert_eq!(c.families, vec!["J", "K"]);
        assert_eq!(c.seed, 7);
        assert!(c.selects("J1c") && !c.selects("A1"));
    }

    #[test]
    fn diagnostics_name_line_and_field() {
        let e = SuiteConfig::parse("seed = 1\nmax_m = two\n").unwrap_err();
        assert!(matches!(&e, ConfigError::Field { line: 2, field, .. } if field == "max_m"), "{e}");
        let e = SuiteConfig::parse("n_probe = 4").unwrap_err();
        assert!(e.to_string().contains("n_probe"));
        assert!(matches!(SuiteConfig::parse("bogus"), Err(ConfigError::Syntax { line: 1, .. })));
        assert!(matches!(SuiteConfig::parse("colour = red"), Err(ConfigError::Field { .. })));
        assert!(SuiteConfig::parse("threshold = 0/1").is_err());
    }

    #[test]
    fn text_round_trip() {
        let c = SuiteConfig { families: vec!["A".into(), "N3".into()], seed: 99, ..SuiteConfig::default() };
        assert_eq!(SuiteConfig::parse(&c.to_text()).unwrap(), c);
    }
}
