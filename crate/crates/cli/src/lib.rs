//! Batch verification runs over `minw-core`: a [`RunConfig`] selects a
//! suite, [`run`] executes it and returns a [`Report`] whose checks are
//! sorted by identifier.

mod suites;

use std::fmt::Write as _;
use std::time::Instant;

use minw_core::glrep::HighestWeight;
use minw_core::rational::{fmt_q_list, frac, parse_q_list, q};
use minw_core::Q;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Glrep,
    Wstructure,
    Cuspidal,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Validated run parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub n: usize,
    #[serde(serialize_with = "ser_q_list")]
    pub lambda: Vec<Q>,
    #[serde(serialize_with = "ser_opt_q_list")]
    pub mu: Option<Vec<Q>>,
    pub radius: i64,
    pub suite: Suite,
    pub seed: u64,
    #[serde(skip)]
    pub timing: bool,
}

fn ser_q_list<S: serde::Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q_list(v))
}

fn ser_opt_q_list<S: serde::Serializer>(v: &Option<Vec<Q>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&fmt_q_list(v)),
        None => s.serialize_none(),
    }
}

/// Everything that can be wrong with the parameters, each with its own exit
/// status.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("malformed rational in --{flag}: {detail}")]
    MalformedRational { flag: &'static str, detail: String },
    #[error("lambda = {0} is not dominant: consecutive differences must be non-negative integers")]
    NotDominant(String),
    #[error("radius {0} is too small: the cuspidal checks need radius >= 3")]
    RadiusTooSmall(i64),
    #[error("{0}")]
    Usage(String),
}

impl ConfigError {
    pub fn exit_code(&self) -> u8 {
        match self {
            ConfigError::Usage(_) => 2,
            ConfigError::MalformedRational { .. } => 3,
            ConfigError::NotDominant(_) => 4,
            ConfigError::RadiusTooSmall(_) => 5,
        }
    }
}

/// Exit status when a run completed but found violations.
pub const EXIT_VIOLATIONS: u8 = 1;
/// Exit status when a computation failed outright.
pub const EXIT_INTERNAL: u8 = 10;

fn parse_list(flag: &'static str, s: &str) -> Result<Vec<Q>, ConfigError> {
    parse_q_list(s).map_err(|e| ConfigError::MalformedRational { flag, detail: e.to_string() })
}

/// Default `mu` for cuspidal runs: small unit fractions with distinct prime
/// denominators, which satisfy the cuspidality criterion for integral
/// `lambda`.
pub fn default_mu(n: usize) -> Vec<Q> {
    [3, 5, 7, 11].iter().take(n).map(|&d| frac(1, d)).collect()
}

impl RunConfig {
    /// Validates raw flag values. `lambda` defaults to the first fundamental
    /// weight `(1, 0, ..., 0)`, `mu` to [`default_mu`] for cuspidal suites.
    pub fn from_args(
        n: Option<usize>,
        lambda: Option<&str>,
        mu: Option<&str>,
        radius: i64,
        suite: Suite,
        seed: u64,
    ) -> Result<Self, ConfigError> {
        let lambda = lambda.map(|s| parse_list("lambda", s)).transpose()?;
        let mu = mu.map(|s| parse_list("mu", s)).transpose()?;
        let n = match (n, &lambda) {
            (Some(n), Some(l)) if l.len() != n => {
                return Err(ConfigError::Usage(format!("--n {n} but lambda has {} entries", l.len())))
            }
            (Some(n), _) => n,
            (None, Some(l)) => l.len(),
            (None, None) => 2,
        };
        if !(2..=4).contains(&n) {
            return Err(ConfigError::Usage(format!("n = {n} is outside 2..=4")));
        }
        let lambda = lambda.unwrap_or_else(|| (0..n).map(|i| q(i64::from(i == 0))).collect());
        if HighestWeight::new(lambda.clone()).is_err() {
            return Err(ConfigError::NotDominant(fmt_q_list(&lambda)));
        }
        if let Some(m) = &mu {
            if m.len() != n {
                return Err(ConfigError::Usage(format!("mu has {} entries, expected {n}", m.len())));
            }
        }
        let cuspidal = matches!(suite, Suite::Cuspidal | Suite::All);
        if cuspidal && radius < 3 {
            return Err(ConfigError::RadiusTooSmall(radius));
        }
        let mu = if cuspidal { Some(mu.unwrap_or_else(|| default_mu(n))) } else { mu };
        Ok(RunConfig { n, lambda, mu, radius, suite, seed, timing: true })
    }

    pub fn highest_weight(&self) -> HighestWeight {
        HighestWeight::new(self.lambda.clone()).expect("validated at construction")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded value, not a pass/fail statement.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub checks: Vec<Check>,
    pub violations: Vec<String>,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        if self.violations.is_empty() {
            0
        } else {
            EXIT_VIOLATIONS
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(out, "suite {:?}  n={}  lambda={}  seed={}", c.suite, c.n, fmt_q_list(&c.lambda), c.seed);
        if let Some(mu) = &c.mu {
            let _ = writeln!(out, "mu={}  radius={}", fmt_q_list(mu), c.radius);
        }
        for ch in &self.checks {
            let status = match ch.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            let time = ch.millis.map(|m| format!("  [{m} ms]")).unwrap_or_default();
            let _ = writeln!(out, "{status}  {}  <{}>  {}{time}", ch.id, ch.anchor, ch.detail);
        }
        let _ = writeln!(out, "{} checks, {} violations", self.checks.len(), self.violations.len());
        for v in &self.violations {
            let _ = writeln!(out, "  violation: {v}");
        }
        out
    }
}

/// Collects checks while a suite runs.
pub(crate) struct Recorder {
    timing: bool,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(timing: bool) -> Self {
        Recorder { timing, checks: Vec::new() }
    }

    /// Runs `f`, recording its status and detail under `id`.
    pub(crate) fn check<F>(&mut self, id: impl Into<String>, anchor: &str, f: F)
    where
        F: FnOnce() -> minw_core::Result<(Status, String)>,
    {
        let start = Instant::now();
        let (status, detail) = match f() {
            Ok(r) => r,
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        let millis = self.timing.then(|| start.elapsed().as_millis() as u64);
        self.checks.push(Check { id: id.into(), anchor: anchor.into(), status, detail, millis });
    }

    pub(crate) fn pass_if(ok: bool, detail: impl Into<String>) -> minw_core::Result<(Status, String)> {
        Ok((if ok { Status::Pass } else { Status::Fail }, detail.into()))
    }
}

/// Executes the configured suite.
pub fn run(config: &RunConfig) -> Report {
    let mut rec = Recorder::new(config.timing);
    let suites: &[Suite] = match config.suite {
        Suite::All => &[Suite::Identities, Suite::Glrep, Suite::Wstructure, Suite::Cuspidal],
        ref s => std::slice::from_ref(s),
    };
    for s in suites {
        match s {
            Suite::Identities => suites::identities(config, &mut rec),
            Suite::Glrep => suites::glrep(config, &mut rec),
            Suite::Wstructure => suites::wstructure(config, &mut rec),
            Suite::Cuspidal => suites::cuspidal(config, &mut rec),
            Suite::All => unreachable!("expanded above"),
        }
    }
    let mut checks = rec.checks;
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let violations = checks.iter().filter(|c| c.status == Status::Fail).map(|c| format!("{}: {}", c.id, c.detail)).collect();
    Report { config: config.clone(), checks, violations }
}
