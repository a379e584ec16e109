//! Seeded verification suites over a grid of algebras, with a uniform
//! pass/fail report.

mod suites;

use std::path::PathBuf;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functors::Recollement;
use crate::gammaalg::{build_gamma, Gamma};
use crate::lambdacat::{a3_sink_catalog, load_catalog, nakayama_catalog, Catalog};

pub use suites::{run_on_algebra, suite_names, suite_statement, SUITES};

/// Runtime knobs shared by every suite.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub prime: u32,
    pub seed: u64,
    pub trials: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { prime: 101, seed: 0, trials: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Nakayama(usize, usize),
    Catalog(PathBuf),
    A3Sink,
}

impl AlgebraSpec {
    /// `nakayama:c,N`, `catalog:path`, or `a3_sink`.
    pub fn parse(s: &str) -> Result<Self> {
        if s == "a3_sink" {
            return Ok(AlgebraSpec::A3Sink);
        }
        if let Some(rest) = s.strip_prefix("nakayama:") {
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            if parts.len() == 2 {
                if let (Ok(c), Ok(n)) = (parts[0].parse(), parts[1].parse()) {
                    return Ok(AlgebraSpec::Nakayama(c, n));
                }
            }
            return Err(Error::Schema(format!("expected nakayama:c,N, got {s}")));
        }
        if let Some(path) = s.strip_prefix("catalog:") {
            return Ok(AlgebraSpec::Catalog(PathBuf::from(path)));
        }
        Err(Error::Schema(format!("unknown algebra spec {s}")))
    }

    pub fn name(&self) -> String {
        match self {
            AlgebraSpec::Nakayama(c, n) => format!("nakayama:{c},{n}"),
            AlgebraSpec::Catalog(p) => format!("catalog:{}", p.display()),
            AlgebraSpec::A3Sink => "a3_sink".into(),
        }
    }

    pub fn catalog(&self, prime: u32) -> Result<Catalog> {
        match self {
            AlgebraSpec::Nakayama(c, n) => nakayama_catalog(*c, *n, prime),
            AlgebraSpec::Catalog(p) => load_catalog(p),
            AlgebraSpec::A3Sink => Ok(a3_sink_catalog()),
        }
    }
}

/// The default grid: `c, N ∈ {1, 2, 3}` with `c (N + 1) ≤ 12`.
pub fn default_grid() -> Vec<AlgebraSpec> {
    let mut out = Vec::new();
    for c in 1..=3 {
        for n in 1..=3 {
            if c * (n + 1) <= 12 {
                out.push(AlgebraSpec::Nakayama(c, n));
            }
        }
    }
    out
}

/// `"c<=2,N<=2"`, `"c=1,N<=3"`, or an explicit list `"1,2;2,1"`.
pub fn parse_grid(s: &str) -> Result<Vec<AlgebraSpec>> {
    let s = s.trim();
    if s.contains(';') || (!s.contains('<') && !s.contains('=')) {
        return s
            .split(';')
            .map(|pair| {
                let v: Vec<&str> = pair.split(',').map(str::trim).collect();
                match (v.first().and_then(|x| x.parse().ok()), v.get(1).and_then(|x| x.parse().ok()), v.len()) {
                    (Some(c), Some(n), 2) => Ok(AlgebraSpec::Nakayama(c, n)),
                    _ => Err(Error::Schema(format!("bad grid entry {pair}"))),
                }
            })
            .collect();
    }
    let (mut cmax, mut nmax, mut cmin, mut nmin) = (3usize, 3usize, 1usize, 1usize);
    for part in s.split(',') {
        let part = part.trim();
        let (key, op, val) = if let Some((k, v)) = part.split_once("<=") {
            (k.trim(), "<=", v.trim())
        } else if let Some((k, v)) = part.split_once('=') {
            (k.trim(), "=", v.trim())
        } else {
            return Err(Error::Schema(format!("bad grid constraint {part}")));
        };
        let val: usize = val.parse().map_err(|_| Error::Schema(format!("bad grid bound {part}")))?;
        match (key, op) {
            ("c", "<=") => cmax = val,
            ("N" | "n", "<=") => nmax = val,
            ("c", "=") => (cmin, cmax) = (val, val),
            ("N" | "n", "=") => (nmin, nmax) = (val, val),
            _ => return Err(Error::Schema(format!("bad grid constraint {part}"))),
        }
    }
    let mut out = Vec::new();
    for c in cmin..=cmax {
        for n in nmin..=nmax {
            if c >= 1 && n >= 1 && c * (n + 1) <= 12 {
                out.push(AlgebraSpec::Nakayama(c, n));
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Schema(format!("grid {s} is empty")));
    }
    Ok(out)
}

/// A catalog, its Auslander algebra, and the recollement when it exists.
pub struct AlgebraCtx {
    pub name: String,
    pub spec: AlgebraSpec,
    pub catalog: Arc<Catalog>,
    gamma: Option<Gamma>,
    rec: Option<Recollement>,
}

impl AlgebraCtx {
    pub fn new(spec: &AlgebraSpec, prime: u32) -> Result<Self> {
        let catalog = Arc::new(spec.catalog(prime)?);
        let gamma = build_gamma(catalog.clone())?;
        let (gamma, rec) = if catalog.is_self_injective()? {
            (None, Some(Recollement::from_gamma(gamma)?))
        } else {
            (Some(gamma), None)
        };
        Ok(AlgebraCtx { name: spec.name(), spec: spec.clone(), catalog, gamma, rec })
    }

    pub fn gamma(&self) -> &Gamma {
        match (&self.gamma, &self.rec) {
            (Some(g), _) => g,
            (None, Some(r)) => &r.gamma,
            _ => unreachable!("context holds one of the two"),
        }
    }

    pub fn rec(&self) -> Result<&Recollement> {
        self.rec.as_ref().ok_or(Error::NotSelfInjective)
    }

    pub fn nakayama(&self) -> Option<(usize, usize)> {
        match self.spec {
            AlgebraSpec::Nakayama(c, n) => Some((c, n)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub algebra: String,
    pub name: String,
    pub passed: bool,
    pub undetermined: bool,
    pub detail: String,
}

impl Check {
    pub fn new(ctx: &AlgebraCtx, name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { algebra: ctx.name.clone(), name: name.into(), passed, undetermined: false, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub statement: String,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn undetermined(&self) -> bool {
        self.checks.iter().any(|c| c.undetermined)
    }

    pub fn header(&self) -> String {
        format!("== {}: {}", self.suite, self.statement)
    }

    pub fn summary(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let verdict = if self.passed() { "PASS" } else if self.undetermined() { "UNDETERMINED" } else { "FAIL" };
        format!("{verdict} {} ({ok}/{} checks)", self.suite, self.checks.len())
    }

    pub fn to_text(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else if c.undetermined { "undt" } else { "FAIL" };
            out.push_str(&format!("  {tag} [{}] {}", c.algebra, c.name));
            if !c.detail.is_empty() {
                out.push_str(&format!(" ({})", c.detail));
            }
            out.push('\n');
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }
}

/// Runs one suite on each algebra, parallel over algebras, in input order.
pub fn run_suite(suite: &str, algebras: &[AlgebraSpec], cfg: &VerifyConfig) -> Result<SuiteReport> {
    let statement = suite_statement(suite).ok_or_else(|| Error::NotFound(format!("suite {suite}")))?;
    let ctxs = crate::par::map(algebras, |spec| AlgebraCtx::new(spec, cfg.prime));
    let ctxs = ctxs.into_iter().collect::<Result<Vec<_>>>()?;
    let per = crate::par::map(&ctxs, |ctx| run_on_algebra(suite, ctx, cfg));
    let mut checks = Vec::new();
    for r in per {
        checks.extend(r?);
    }
    Ok(SuiteReport { suite: suite.into(), statement: statement.into(), seed: cfg.seed, trials: cfg.trials, checks })
}

/// Suite plus the algebras it runs on by default. The negative half of the
/// quasi-hereditary suite always adds the bundled non-uniserial catalog.
pub fn default_algebras(suite: &str, grid: &[AlgebraSpec]) -> Vec<AlgebraSpec> {
    let mut v = grid.to_vec();
    if suite == "thm3" && !v.contains(&AlgebraSpec::A3Sink) && !v.iter().any(|a| matches!(a, AlgebraSpec::Catalog(_))) {
        v.push(AlgebraSpec::A3Sink);
    }
    v
}
