//! Verification suites over seeded corpora and problem files.
//!
//! Each suite maps instances to [`Report`]s in parallel and assembles them
//! in input order, so a fixed seed always gives the same bytes.

mod corpus;
mod suites;

use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

pub use corpus::{
    generate_corpus, random_polynomial, stream, GeneratorSpec, MAX_ARITY, MAX_EXPONENT,
    MAX_GENERATORS,
};
pub use suites::{cert_audit_corpus, example_instances};

use crate::error::{Error, Result};
use crate::groebner::{DEFAULT_MAX_COLUMNS, DEFAULT_PAIR_BUDGET};
use crate::parse::report::{CheckRecord, Report, SuiteReport};
use crate::parse::{parse_problem_file, Format, ProblemInstance};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Example23,
    SkodaRandom,
    LocalNullstellensatz,
    Lemma21,
    BrianconSkoda,
    DegreeBound,
    CertAudit,
    OracleClosure,
    OracleMembership,
    OracleSymbolic,
    CorAProbe,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Example23,
        Suite::SkodaRandom,
        Suite::LocalNullstellensatz,
        Suite::Lemma21,
        Suite::BrianconSkoda,
        Suite::DegreeBound,
        Suite::CertAudit,
        Suite::OracleClosure,
        Suite::OracleMembership,
        Suite::OracleSymbolic,
        Suite::CorAProbe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Example23 => "example-2.3",
            Suite::SkodaRandom => "skoda-random",
            Suite::LocalNullstellensatz => "local-nullstellensatz",
            Suite::Lemma21 => "lemma-2.1",
            Suite::BrianconSkoda => "briancon-skoda",
            Suite::DegreeBound => "degree-bound",
            Suite::CertAudit => "cert-audit",
            Suite::OracleClosure => "oracle-closure",
            Suite::OracleMembership => "oracle-membership",
            Suite::OracleSymbolic => "oracle-symbolic",
            Suite::CorAProbe => "cor-a-probe",
        }
    }

    /// Instances drawn when the source is [`Source::Seeded`].
    pub fn default_count(self) -> usize {
        match self {
            Suite::Example23 => 4,
            Suite::SkodaRandom
            | Suite::LocalNullstellensatz
            | Suite::Lemma21
            | Suite::BrianconSkoda => 200,
            Suite::DegreeBound | Suite::CorAProbe => 50,
            Suite::CertAudit => cert_audit_corpus().len(),
            Suite::OracleClosure => 20,
            Suite::OracleMembership | Suite::OracleSymbolic => 100,
        }
    }

    /// Whether problem files can replace the built-in instances.
    pub fn accepts_files(self) -> bool {
        !matches!(
            self,
            Suite::Example23 | Suite::OracleMembership | Suite::OracleSymbolic
        )
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite `{s}`")))
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a suite takes its instances from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// The suite's own corpus drawn from the config seed.
    Seeded,
    /// A random corpus of the given shape (its own seed is used).
    Generated(GeneratorSpec),
    /// Problem files; each entry may be a glob pattern.
    Files(Vec<String>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub max_pairs: usize,
    pub max_columns: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_pairs: DEFAULT_PAIR_BUDGET,
            max_columns: DEFAULT_MAX_COLUMNS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub source: Source,
    pub seed: u64,
    pub budgets: Budgets,
    pub format: Format,
    pub output: Option<PathBuf>,
    /// Record per-check wall time. Off by default, since timings make
    /// reports differ between runs.
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            source: Source::Seeded,
            seed: DEFAULT_SEED,
            budgets: Budgets::default(),
            format: Format::Json,
            output: None,
            timings: false,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_source(mut self, source: Source) -> Self {
        self.source = source;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.budgets.max_pairs == 0 || self.budgets.max_columns == 0 {
            return Err(Error::InvalidInput("budgets must be positive".into()));
        }
        if let Source::Generated(spec) = &self.source {
            spec.validate()?;
        }
        if matches!(self.source, Source::Files(_)) && !self.suite.accepts_files() {
            return Err(Error::InvalidInput(format!(
                "suite {} does not take problem files",
                self.suite
            )));
        }
        Ok(())
    }
}

/// Per-run settings handed to every check.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Ctx {
    pub budgets: Budgets,
    pub timings: bool,
}

impl Ctx {
    /// Runs `f`, stamping the produced records with its wall time when
    /// timings are on.
    pub fn timed<T: Stamp>(&self, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let mut out = f()?;
        if self.timings {
            out.stamp(start.elapsed().as_millis() as u64);
        }
        Ok(out)
    }

    pub fn start(&self) -> Instant {
        Instant::now()
    }

    /// Sets the elapsed time since `start` on `rec` when timings are on.
    pub fn stamp(&self, mut rec: CheckRecord, start: Instant) -> CheckRecord {
        if self.timings {
            rec.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        rec
    }
}

pub(crate) trait Stamp {
    fn stamp(&mut self, ms: u64);
}

impl Stamp for CheckRecord {
    fn stamp(&mut self, ms: u64) {
        self.elapsed_ms = Some(ms);
    }
}

impl Stamp for Vec<CheckRecord> {
    fn stamp(&mut self, ms: u64) {
        self.iter_mut().for_each(|r| r.elapsed_ms = Some(ms));
    }
}

/// Reads problem files named by paths or glob patterns, in sorted order.
/// A syntax error anywhere fails the whole load.
pub fn load_problem_files(patterns: &[String]) -> Result<Vec<ProblemInstance>> {
    let mut paths = Vec::new();
    for pat in patterns {
        let matches = glob::glob(pat)
            .map_err(|e| Error::InvalidInput(format!("bad pattern `{pat}`: {e}")))?;
        let mut found = false;
        for entry in matches {
            let path = entry.map_err(|e| Error::InvalidInput(e.to_string()))?;
            found = true;
            paths.push(path);
        }
        if !found {
            return Err(Error::InvalidInput(format!("no file matches `{pat}`")));
        }
    }
    paths.sort();
    paths.dedup();
    paths
        .iter()
        .map(|path| {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            let mut inst = parse_problem_file(&text).map_err(|e| match e {
                Error::Syntax {
                    line,
                    column,
                    message,
                } => Error::Syntax {
                    line,
                    column,
                    message: format!("{}: {message}", path.display()),
                },
                other => other,
            })?;
            if inst.name().is_none() {
                let stem = path.file_stem().map_or_else(
                    || path.display().to_string(),
                    |s| s.to_string_lossy().into(),
                );
                inst.metadata.insert("name".into(), stem);
            }
            Ok(inst)
        })
        .collect()
}

fn instance_name(inst: &ProblemInstance, index: usize) -> String {
    inst.name()
        .map_or_else(|| format!("instance-{index:03}"), str::to_string)
}

/// Runs `check` on every instance in parallel. Resource errors become a
/// skipped record and are counted; any other error aborts the suite.
pub(crate) fn run_instances<F>(
    report: &mut SuiteReport,
    instances: &[ProblemInstance],
    ctx: Ctx,
    check: F,
) -> Result<()>
where
    F: Fn(&ProblemInstance, Ctx) -> Result<Vec<CheckRecord>> + Sync,
{
    let results: Vec<Result<Vec<CheckRecord>>> =
        instances.par_iter().map(|inst| check(inst, ctx)).collect();
    for (index, (inst, res)) in instances.iter().zip(results).enumerate() {
        let mut r = Report::new(instance_name(inst, index));
        match res {
            Ok(records) => r.records = records,
            Err(Error::Resource(msg)) => {
                report.summary.resource_errors += 1;
                r.push(CheckRecord::skipped("resource", "resource", msg));
            }
            Err(e) => return Err(e),
        }
        report.instances.push(r);
    }
    Ok(())
}

/// Runs one suite.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let ctx = Ctx {
        budgets: cfg.budgets,
        timings: cfg.timings,
    };
    let mut report = SuiteReport::new(cfg.suite.name(), cfg.seed);
    suites::run(cfg, ctx, &mut report)?;
    report.tally();
    Ok(report)
}
