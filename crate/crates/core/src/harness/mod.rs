//! Declarative identity catalog and a deterministic runner.
//!
//! Every record draws parameters from a seeded sampler, evaluates both sides
//! of one identity with the library and compares them exactly (series and
//! bivariate checks) or to a tolerance (numeric checks).

mod binomial;
mod calculus;
mod compare;
mod exponential;
mod hyperbolic;
mod special;
mod trig;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, GaussianRational, Rational};
use crate::lucas::{LucasParams, SeqCache};

pub use compare::Verdict;

/// Default trial count per record.
pub const DEFAULT_TRIALS: usize = 25;
/// Default univariate truncation order.
pub const DEFAULT_ORDER: usize = 16;
/// Cap on the bivariate truncation order.
pub const MAX_BIVARIATE_ORDER: usize = 12;
/// Default tolerance of numeric checks.
pub const NUMERIC_TOL: f64 = 1e-10;
/// Tolerance of checks that depend on a computed root.
pub const ROOT_TOL: f64 = 1e-8;
/// Tolerance of checks that go through the Lucas integral.
pub const INTEGRAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    SeriesExact,
    BivariateExact,
    NumericResidual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sampler {
    /// Rational roots `phi != phi'` with numerators and denominators in `[-9, 9] \ {0}`.
    RationalRoots,
    /// Gaussian rational roots and parameters.
    Gaussian,
    /// Real float roots `1 < phi <= 3`, `|phi'| <= 1`, small arguments.
    Float,
    /// Float parameters for which the first sine zero exists.
    PiU,
}

/// What the displayed formula is expected to do under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Holds,
    /// The formula as displayed is false; a counterexample is the expected result.
    Refuted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// A formula expected to be false produced a counterexample.
    Refuted,
    Fail,
}

pub type RunFn = fn(&mut Trial) -> Result<Verdict>;

/// One testable identity.
#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub group: &'static str,
    /// The formula under test, in plain text.
    pub anchor: &'static str,
    pub check: CheckKind,
    pub sampler: Sampler,
    /// Applicability condition; draws failing it are resampled.
    pub guard: &'static str,
    pub tolerance: Option<f64>,
    pub expect: Expectation,
    pub run: RunFn,
}

impl std::fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("group", &self.group)
            .field("check", &self.check)
            .finish_non_exhaustive()
    }
}

impl IdentityRecord {
    pub(crate) fn new(
        id: &'static str,
        group: &'static str,
        check: CheckKind,
        sampler: Sampler,
        anchor: &'static str,
        run: RunFn,
    ) -> Self {
        let tolerance = match check {
            CheckKind::NumericResidual => Some(NUMERIC_TOL),
            _ => None,
        };
        IdentityRecord {
            id,
            group,
            anchor,
            check,
            sampler,
            guard: "none",
            tolerance,
            expect: Expectation::Holds,
            run,
        }
    }

    pub(crate) fn tol(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }

    pub(crate) fn guard(mut self, guard: &'static str) -> Self {
        self.guard = guard;
        self
    }

    pub(crate) fn refuted(mut self) -> Self {
        self.expect = Expectation::Refuted;
        self
    }
}

/// The full catalog, in a fixed order.
pub fn catalog() -> Vec<IdentityRecord> {
    let mut all = Vec::new();
    all.extend(binomial::records());
    all.extend(calculus::records());
    all.extend(exponential::records());
    all.extend(trig::records());
    all.extend(special::records());
    all.extend(hyperbolic::records());
    all
}

/// Resolve `all`, a group name or a single id.
pub fn select(selection: &str) -> Result<Vec<IdentityRecord>> {
    let all = catalog();
    let chosen: Vec<IdentityRecord> = match selection.trim() {
        "all" => all,
        "" => Vec::new(),
        name => all
            .into_iter()
            .filter(|r| r.id == name || r.group == name)
            .collect(),
    };
    if chosen.is_empty() {
        return Err(Error::UnknownIdentityId(selection.to_string()));
    }
    Ok(chosen)
}

/// Resolve several selections, keeping catalog order and dropping duplicates.
pub fn select_many<S: AsRef<str>>(selections: &[S]) -> Result<Vec<IdentityRecord>> {
    if selections.is_empty() {
        return Err(Error::UnknownIdentityId(String::new()));
    }
    let mut ids = Vec::new();
    for s in selections {
        for r in select(s.as_ref())? {
            if !ids.contains(&r.id) {
                ids.push(r.id);
            }
        }
    }
    Ok(catalog().into_iter().filter(|r| ids.contains(&r.id)).collect())
}

pub fn groups() -> Vec<&'static str> {
    let mut g: Vec<&'static str> = Vec::new();
    for r in catalog() {
        if !g.contains(&r.group) {
            g.push(r.group);
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub order: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: DEFAULT_TRIALS,
            order: DEFAULT_ORDER,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub delta: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub group: String,
    pub anchor: String,
    pub check: CheckKind,
    pub expect: Expectation,
    pub status: Status,
    pub trials: usize,
    /// Draws that met the guard and were compared.
    pub applicable: usize,
    pub mismatches: usize,
    pub failures: Vec<Failure>,
    /// Parameters of the first compared draw, kept for reproduction.
    pub sample: Option<BTreeMap<String, String>>,
    pub seed: u64,
}

impl IdentityReport {
    /// Whether the outcome matches the record's expectation.
    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub order: usize,
    pub bivariate_order: usize,
    pub passed: usize,
    pub refuted: usize,
    pub failed: usize,
    pub wall_time_ms: u128,
    pub identities: Vec<IdentityReport>,
}

impl SuiteReport {
    pub fn all_ok(&self) -> bool {
        self.failed == 0
    }

    pub fn get(&self, id: &str) -> Option<&IdentityReport> {
        self.identities.iter().find(|r| r.id == id)
    }

    /// The report without timing, for determinism comparisons.
    pub fn without_timing(&self) -> SuiteReport {
        SuiteReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}

const MAX_KEPT_FAILURES: usize = 5;

/// Run `records` with the given configuration. Records run in parallel;
/// each is seeded independently, so the report does not depend on scheduling.
pub fn run_records(records: &[IdentityRecord], config: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let identities: Vec<IdentityReport> = records
        .par_iter()
        .map(|r| run_record(r, config))
        .collect();
    let count = |s: Status| identities.iter().filter(|r| r.status == s).count();
    SuiteReport {
        seed: config.seed,
        trials: config.trials,
        order: config.order,
        bivariate_order: config.order.min(MAX_BIVARIATE_ORDER),
        passed: count(Status::Pass),
        refuted: count(Status::Refuted),
        failed: count(Status::Fail),
        wall_time_ms: start.elapsed().as_millis(),
        identities,
    }
}

/// `run_records(select(selection)?)`.
pub fn run_suite(selection: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    Ok(run_records(&select(selection)?, config))
}

fn run_record(record: &IdentityRecord, config: &SuiteConfig) -> IdentityReport {
    let max_attempts = (config.trials * 20).max(20);
    let mut applicable = 0;
    let mut mismatches = 0;
    let mut failures = Vec::new();
    let mut sample = None;
    let mut attempt = 0;
    while applicable < config.trials && attempt < max_attempts {
        let mut trial = Trial::new(config, record.id, attempt as u64);
        attempt += 1;
        let verdict = match (record.run)(&mut trial) {
            Ok(v) => v,
            Err(_) => continue,
        };
        applicable += 1;
        if sample.is_none() {
            sample = Some(trial.params_map());
        }
        if let Verdict::Fail { lhs, rhs, delta } = verdict {
            mismatches += 1;
            if failures.len() < MAX_KEPT_FAILURES {
                failures.push(Failure {
                    params: trial.params_map(),
                    lhs,
                    rhs,
                    delta,
                });
            }
        }
    }
    let status = match record.expect {
        Expectation::Holds if mismatches == 0 && applicable > 0 => Status::Pass,
        Expectation::Refuted if mismatches > 0 => Status::Refuted,
        _ => Status::Fail,
    };
    IdentityReport {
        id: record.id.to_string(),
        group: record.group.to_string(),
        anchor: record.anchor.to_string(),
        check: record.check,
        expect: record.expect,
        status,
        trials: config.trials,
        applicable,
        mismatches,
        failures,
        sample,
        seed: config.seed,
    }
}

/// FNV-1a, stable across platforms and toolchains.
fn stable_hash(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Per-draw state: a seeded generator, the truncation orders and a log of
/// the drawn parameters.
pub struct Trial {
    rng: ChaCha8Rng,
    pub order: usize,
    pub order2: usize,
    params: Vec<(String, String)>,
}

impl Trial {
    pub fn new(config: &SuiteConfig, id: &str, attempt: u64) -> Self {
        let mut seed = [0u8; 32];
        seed[..8].copy_from_slice(&config.seed.to_le_bytes());
        seed[8..16].copy_from_slice(&stable_hash(id).to_le_bytes());
        seed[16..24].copy_from_slice(&attempt.to_le_bytes());
        Trial {
            rng: ChaCha8Rng::from_seed(seed),
            order: config.order,
            order2: config.order.min(MAX_BIVARIATE_ORDER),
            params: Vec::new(),
        }
    }

    fn params_map(&self) -> BTreeMap<String, String> {
        self.params.iter().cloned().collect()
    }

    pub fn record(&mut self, name: &str, value: impl std::fmt::Display) {
        self.params.push((name.to_string(), value.to_string()));
    }

    /// Fail the draw (and resample) unless `cond` holds.
    pub fn require(&self, cond: bool) -> Result<()> {
        if cond {
            Ok(())
        } else {
            Err(Error::InvalidArgument("guard not met".into()))
        }
    }

    fn pool_int(&mut self) -> i64 {
        let v = self.rng.gen_range(1..=9);
        if self.rng.gen_bool(0.5) {
            v
        } else {
            -v
        }
    }

    fn pool_rational(&mut self) -> Rational {
        let p = self.pool_int();
        let q = self.pool_int();
        Rational::from_ratio(p, q)
    }

    /// A non-zero rational from the pool.
    pub fn q(&mut self, name: &str) -> Rational {
        let v = self.pool_rational();
        self.record(name, &v);
        v
    }

    pub fn index(&mut self, name: &str, lo: usize, hi: usize) -> usize {
        let v = self.rng.gen_range(lo..=hi);
        self.record(name, v);
        v
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn uniform(&mut self, name: &str, lo: f64, hi: f64) -> f64 {
        let v = self.rng.gen_range(lo..=hi);
        self.record(name, v);
        v
    }

    /// Rational roots `phi != phi'`, `phi + phi' != 0`.
    pub fn roots(&mut self) -> Result<SeqCache<Rational>> {
        let phi = self.pool_rational();
        let phi_prime = self.pool_rational();
        self.require(phi != phi_prime)?;
        let params = LucasParams::from_roots(phi.clone(), phi_prime.clone())?;
        self.record("phi", &phi);
        self.record("phi'", &phi_prime);
        self.record("s", params.s());
        self.record("t", params.t());
        Ok(SeqCache::new(params))
    }

    fn pool_gaussian(&mut self) -> GaussianRational {
        let re = self.pool_rational();
        let im = if self.coin() {
            self.pool_rational()
        } else {
            Rational::from_i64(0)
        };
        GaussianRational::new(re, im)
    }

    pub fn g(&mut self, name: &str) -> GaussianRational {
        let v = self.pool_gaussian();
        self.record(name, v.render());
        v
    }

    /// Gaussian rational roots; draws whose Lucas numbers vanish below the
    /// truncation order are rejected.
    pub fn gaussian_roots(&mut self) -> Result<SeqCache<GaussianRational>> {
        let phi = self.pool_gaussian();
        let phi_prime = self.pool_gaussian();
        self.require(phi != phi_prime)?;
        let params = LucasParams::from_roots(phi.clone(), phi_prime.clone())?;
        self.record("phi", phi.render());
        self.record("phi'", phi_prime.render());
        self.record("s", params.s().render());
        self.record("t", params.t().render());
        let cache = SeqCache::with_len(params, self.order + 2);
        self.require(cache.first_zero_factorial_index().is_none())?;
        Ok(cache)
    }

    /// Real roots `3/2 <= phi <= 3`, `1/5 <= |phi'| <= 1`, `|s| >= 1/2`.
    pub fn float_roots(&mut self) -> Result<SeqCache<f64>> {
        let phi = self.rng.gen_range(1.5..=3.0f64);
        let phi_prime = self.rng.gen_range(-1.0..=1.0f64);
        self.require(phi_prime.abs() >= 0.2 && (phi + phi_prime).abs() >= 0.5)?;
        let params = LucasParams::from_roots(phi, phi_prime)?;
        self.record("phi", phi);
        self.record("phi'", phi_prime);
        self.record("s", params.s());
        self.record("t", params.t());
        Ok(SeqCache::new(params))
    }

    /// Point in `[-1/2, 1/2]`.
    pub fn small(&mut self, name: &str) -> f64 {
        self.uniform(name, -0.5, 0.5)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let all = catalog();
        for (i, a) in all.iter().enumerate() {
            assert!(all[i + 1..].iter().all(|b| b.id != a.id), "duplicate id {}", a.id);
            assert!(!groups().contains(&a.id), "id {} shadows a group", a.id);
        }
    }

    #[test]
    fn empty_and_unknown_selections() {
        assert!(matches!(select(""), Err(Error::UnknownIdentityId(_))));
        assert!(matches!(select("nosuch"), Err(Error::UnknownIdentityId(_))));
        assert_eq!(select("pascal-1").unwrap().len(), 1);
        let empty: [&str; 0] = [];
        assert!(select_many(&empty).is_err());
    }

    #[test]
    fn trials_are_reproducible() {
        let cfg = SuiteConfig { trials: 3, order: 8, seed: 11 };
        let mut a = Trial::new(&cfg, "x", 4);
        let mut b = Trial::new(&cfg, "x", 4);
        assert_eq!(a.q("a"), b.q("a"));
        let mut c = Trial::new(&cfg, "y", 4);
        let _ = c.q("a");
    }
}
