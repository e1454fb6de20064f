//! Acceptance suites: seeded corpora and one runner per criterion, shared by
//! the acceptance test target and the command-line `verify` command.

pub mod corpus;
mod criteria;

use std::time::{Duration, Instant};

use crate::Limits;

use criteria::run_named;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0x5eed, jobs: 0, limits: Limits::default() }
    }
}

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub title: &'static str,
    pub time_limit: Duration,
}

const fn crit(id: u8, name: &'static str, title: &'static str, secs: u64) -> Criterion {
    Criterion { id, name, title, time_limit: Duration::from_secs(secs) }
}

pub const CRITERIA: [Criterion; 12] = [
    crit(1, "weyl", "Weyl dimension of V(2m rho)", 1),
    crit(2, "hasse-arf", "Hasse-Arf integrality of abelian lower chains", 10),
    crit(3, "swan-oracle", "Swan conductor agrees with the lower-numbering formula", 10),
    crit(4, "mackey", "Mackey identity and restriction of (tensor) induction", 30),
    crit(5, "tensor-induction", "tensor induction against explicit matrices", 30),
    crit(6, "k0-additivity", "Newton polygon additivity and duality", 1),
    crit(7, "slope-filtration", "slope filtrations realized on finite groups", 30),
    crit(8, "kummer", "Kummer scaling of breaks and Swan conductors", 5),
    crit(9, "robba", "rank-one differential operators", 5),
    crit(10, "wreath", "wreath product classification", 60),
    crit(11, "dims-gcd", "gcd of irreducible dimensions", 60),
    crit(12, "ppower-cor-a2", "p-power dimension and slope-zero predicates", 30),
];

pub fn criterion(key: &str) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.name == key || key.parse::<u8>().is_ok_and(|id| id == c.id))
}

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
    pub time_limit: Duration,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} [{:>2}] {}: {} checks in {:.2}s (limit {}s)",
            self.id,
            self.title,
            self.checked,
            self.elapsed.as_secs_f64(),
            self.time_limit.as_secs()
        );
        if let Some(f) = self.failures.first() {
            s.push_str(&format!("; first failure: {f}"));
        }
        s
    }
}

/// Accumulated checks of a runner.
#[derive(Debug, Default, Clone)]
pub(crate) struct Tally {
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn fail(&mut self, what: String) {
        self.checked += 1;
        self.failures.push(what);
    }

    pub fn note(&mut self, what: String) {
        self.notes.push(what);
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
        self
    }
}

pub fn run(c: &Criterion, config: &SuiteConfig) -> CriterionReport {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if config.jobs > 0 {
        builder = builder.num_threads(config.jobs);
    }
    let start = Instant::now();
    let tally = match builder.build() {
        Ok(pool) => pool.install(|| run_named(c.id, config)),
        Err(e) => {
            let mut t = Tally::default();
            t.fail(format!("thread pool: {e}"));
            t
        }
    };
    let elapsed = start.elapsed();
    let mut failures = tally.failures;
    if elapsed > c.time_limit {
        failures.push(format!("took {:.2}s, over the {}s limit", elapsed.as_secs_f64(), c.time_limit.as_secs()));
    }
    if tally.checked == 0 {
        failures.push("no checks ran".to_string());
    }
    CriterionReport {
        id: c.id,
        name: c.name,
        title: c.title,
        passed: failures.is_empty(),
        checked: tally.checked,
        failures,
        notes: tally.notes,
        elapsed,
        time_limit: c.time_limit,
    }
}

pub fn run_all(config: &SuiteConfig) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|c| run(c, config)).collect()
}
