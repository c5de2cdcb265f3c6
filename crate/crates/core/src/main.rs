use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use nullkit::groebner::{Ideal, DEFAULT_MAX_COLUMNS, DEFAULT_PAIR_BUDGET};
use nullkit::monomial::{
    check_degree_bound, distinguished_data, multiplier_ideal_generators, MonomialIdeal,
    MultiplierIdealQuery,
};
use nullkit::nullstellensatz::{
    gb_trace_certificate, minimal_certificate_degree, CertificateProblem,
};
use nullkit::parse::{emit_suite, parse_problem_file, Format, ProblemInstance, SuiteReport};
use nullkit::verify::{
    generate_corpus, run_suite, Budgets, GeneratorSpec, Source, Suite, SuiteConfig, DEFAULT_SEED,
};
use nullkit::{Error, MonomialOrder};

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_NOT_FOUND: u8 = 4;
const EXIT_NOT_ZERO_FREE: u8 = 5;
const EXIT_WRONG_CLASS: u8 = 6;

#[derive(Parser)]
#[command(
    name = "nullkit",
    version,
    about = "Exact effective Nullstellensatz toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Term order: grevlex, lex, elim:K or weight:W1,W2,...
    #[arg(long, global = true, default_value = "grevlex")]
    order: String,
    /// Degree cap (cert) or exponent cap (multiplier).
    #[arg(long, global = true)]
    cap: Option<u32>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// S-pair budget for Gröbner computations.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_BUDGET)]
    budget_pairs: usize,
    /// Column budget for Macaulay matrices.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COLUMNS)]
    budget_matrix: usize,
    /// Lift the matrix budget.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Scan,
    Trace,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Gröbner basis.
    Gb { file: PathBuf },
    /// Search for a Nullstellensatz certificate.
    Cert {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Scan)]
        method: Method,
    },
    /// Distinguished centers of a monomial ideal.
    Distinguished { file: PathBuf },
    /// Generators of the multiplier-type ideal I_level.
    Multiplier {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        /// Problem files or glob patterns replacing the built-in corpus.
        #[arg(long, num_args = 1..)]
        files: Vec<String>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Record per-check wall time.
        #[arg(long)]
        timings: bool,
    },
    /// Generate a random monomial corpus.
    Gen {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        min_arity: usize,
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
        #[arg(long, default_value_t = 6)]
        max_generators: usize,
        #[arg(long, default_value_t = 6)]
        max_exponent: u32,
        /// Equal generator degrees, drawn up to this bound.
        #[arg(long)]
        homogeneous: Option<u32>,
        /// Write one file per instance into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Syntax { .. } => EXIT_PARSE,
            Error::Resource(_) | Error::CapTooSmall { .. } => EXIT_RESOURCE,
            Error::NotZeroFree => EXIT_NOT_ZERO_FREE,
            Error::NotMonomial(_)
            | Error::InvalidInput(_)
            | Error::InvalidRing(_)
            | Error::VariableIndex { .. }
            | Error::DegreeTooSmall { .. } => EXIT_WRONG_CLASS,
            Error::RingMismatch | Error::Consistency(_) => EXIT_FAIL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type CliResult = Result<u8, Failure>;

fn load(path: &Path) -> Result<ProblemInstance, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    parse_problem_file(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

impl Cli {
    fn max_columns(&self) -> usize {
        if self.force {
            usize::MAX
        } else {
            self.budget_matrix
        }
    }

    fn json(&self) -> bool {
        matches!(self.format, OutFormat::Json)
    }
}

fn cmd_gb(cli: &Cli, file: &Path) -> CliResult {
    let inst = load(file)?;
    let order: MonomialOrder = cli.order.parse()?;
    order.validate(inst.ring.arity())?;
    let ideal = Ideal::new(&inst.ring, inst.generators)?.with_pair_budget(cli.budget_pairs);
    let gb = ideal.groebner_basis(&order)?;
    let lines: Vec<String> = gb.basis.iter().map(|g| g.to_string_with(&order)).collect();
    if cli.json() {
        print_json(&json!({ "order": cli.order, "basis": lines }));
    } else {
        for l in lines {
            println!("{l}");
        }
    }
    Ok(0)
}

fn cmd_cert(cli: &Cli, file: &Path, method: Method) -> CliResult {
    let inst = load(file)?;
    let p = CertificateProblem::new(inst).with_pair_budget(cli.budget_pairs);
    match method {
        Method::Trace => {
            let cert = gb_trace_certificate(&p)?;
            if cli.json() {
                print_json(&json!({
                    "method": "trace",
                    "achieved_degree": cert.achieved_degree,
                    "cofactors": cert.to_strings(),
                }));
            } else {
                println!("achieved degree: {}", cert.achieved_degree);
                for (k, c) in cert.to_strings().iter().enumerate() {
                    println!("g{} = {c}", k + 1);
                }
            }
            Ok(0)
        }
        Method::Scan => {
            let cap = cli.cap.unwrap_or_else(|| p.default_cap());
            let report = minimal_certificate_degree(&p, cap, cli.max_columns())?;
            if cli.json() {
                print_json(&serde_json::to_value(&report).expect("serializable"));
            } else {
                match report.minimal_degree {
                    Some(d) => println!("minimal degree: {d}"),
                    None => println!("not found <= {}", report.cap),
                }
                if let Some(at) = report.aborted_at {
                    println!("aborted at D={at}");
                }
                let mark = |w: Option<bool>| match w {
                    Some(true) => " (respected)",
                    Some(false) => " (exceeded)",
                    None => "",
                };
                println!(
                    "bound d^n: {}{}",
                    report.bound_kollar,
                    mark(report.within_kollar)
                );
                if let Some(s) = &report.bound_sparse {
                    println!("bound (n+1)! prod d_k: {s}{}", mark(report.within_sparse));
                }
                for (d, ok) in &report.solvable {
                    println!("D={d}: {}", if *ok { "solvable" } else { "no certificate" });
                }
                if let Some(c) = &report.certificate {
                    for (k, g) in c.to_strings().iter().enumerate() {
                        println!("g{} = {g}", k + 1);
                    }
                }
            }
            Ok(match (report.minimal_degree, report.aborted_at) {
                (Some(_), _) => 0,
                (None, Some(_)) => EXIT_RESOURCE,
                (None, None) => EXIT_NOT_FOUND,
            })
        }
    }
}

fn cmd_distinguished(cli: &Cli, file: &Path) -> CliResult {
    let inst = load(file)?;
    let j = MonomialIdeal::from_polynomials(&inst.generators)?;
    let names = j.ring().names();
    let data = distinguished_data(&j)?;
    let degree = inst.generators[0].total_degree();
    let homogeneous =
        j.arity() >= 2 && degree > 0 && inst.generators.iter().all(|g| g.total_degree() == degree);
    let verdict = if homogeneous {
        Some(check_degree_bound(&j, degree)?)
    } else {
        None
    };
    let center = |s: &[usize]| {
        let v: Vec<&str> = s.iter().map(|&i| names[i].as_str()).collect();
        format!("{{{}}}", v.join(", "))
    };
    if cli.json() {
        let rows: Vec<_> = data
            .iter()
            .map(|d| {
                json!({
                    "center": center(&d.support),
                    "r": d.coefficient,
                    "dim": d.dimension,
                    "deg": d.degree,
                })
            })
            .collect();
        let mut v = json!({ "ideal": j.to_string(), "distinguished": rows });
        if let Some(rep) = &verdict {
            v["degree_bound"] = serde_json::to_value(&rep.record).expect("serializable");
        }
        print_json(&v);
    } else {
        println!("{:<20} {:>6} {:>4} {:>4}", "center", "r", "dim", "deg");
        for d in &data {
            println!(
                "{:<20} {:>6} {:>4} {:>4}",
                center(&d.support),
                d.coefficient,
                d.dimension,
                d.degree
            );
        }
        if let Some(rep) = &verdict {
            let ok = if rep.lhs <= rep.rhs { "pass" } else { "fail" };
            println!(
                "degree bound, read as an ideal of P^{} at d={degree}: {} <= {}: {ok}",
                j.arity() - 1,
                rep.lhs,
                rep.rhs
            );
        }
    }
    Ok(0)
}

fn cmd_multiplier(cli: &Cli, file: &Path, level: u32) -> CliResult {
    let inst = load(file)?;
    let j = MonomialIdeal::from_polynomials(&inst.generators)?;
    let names = j.ring().names().to_vec();
    let q = MultiplierIdealQuery::new(j, level)?;
    let cap = cli.cap.unwrap_or_else(|| q.default_cap());
    let gens = multiplier_ideal_generators(&q, cap)?;
    let shown: Vec<String> = gens
        .iter()
        .map(|g| g.display_with(&names).to_string())
        .collect();
    if cli.json() {
        print_json(&json!({ "level": level, "cap": cap, "generators": shown }));
    } else {
        for g in shown {
            println!("{g}");
        }
    }
    Ok(0)
}

fn summary_line(r: &SuiteReport) -> String {
    let s = &r.summary;
    format!(
        "{}: {} pass, {} fail, {} expected, {} skipped, {} resource errors",
        r.suite, s.pass, s.fail, s.expected, s.skipped, s.resource_errors
    )
}

fn cmd_verify(
    cli: &Cli,
    suite: &str,
    files: &[String],
    output: Option<&Path>,
    timings: bool,
) -> CliResult {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let format = if cli.json() {
        Format::Json
    } else {
        Format::Text
    };
    let mut reports = Vec::new();
    for s in suites {
        let mut cfg = SuiteConfig::new(s).with_seed(cli.seed);
        if !files.is_empty() {
            cfg = cfg.with_source(Source::Files(files.to_vec()));
        }
        cfg.budgets = Budgets {
            max_pairs: cli.budget_pairs,
            max_columns: cli.max_columns(),
        };
        cfg.format = format;
        cfg.timings = timings;
        let report = run_suite(&cfg)?;
        eprintln!("{}", summary_line(&report));
        reports.push(report);
    }
    let text = match (format, reports.len()) {
        (Format::Json, n) if n > 1 => {
            let mut s = serde_json::to_string_pretty(&reports).expect("serializable");
            s.push('\n');
            s
        }
        _ => reports.iter().map(|r| emit_suite(r, format)).collect(),
    };
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    let failed = reports.iter().any(|r| !r.all_passed());
    let resource = reports.iter().any(|r| r.summary.resource_errors > 0);
    Ok(if failed {
        EXIT_FAIL
    } else if resource {
        EXIT_RESOURCE
    } else {
        0
    })
}

fn cmd_gen(cli: &Cli, spec: GeneratorSpec, out_dir: Option<&Path>) -> CliResult {
    let corpus = generate_corpus(&spec)?;
    match out_dir {
        Some(dir) => {
            fs::create_dir_all(dir)
                .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", dir.display())))?;
            for inst in &corpus {
                let name = inst.name().expect("generated instances are named");
                let path = dir.join(format!("{name}.txt"));
                fs::write(&path, inst.to_file_string())
                    .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
            }
        }
        None if cli.json() => {
            let items: Vec<_> = corpus
                .iter()
                .map(|i| {
                    let gens: Vec<String> = i.generators.iter().map(ToString::to_string).collect();
                    json!({ "ring": i.ring.names(), "generators": gens, "metadata": i.metadata })
                })
                .collect();
            print_json(&json!(items));
        }
        None => {
            for (k, inst) in corpus.iter().enumerate() {
                if k > 0 {
                    println!();
                }
                print!("{}", inst.to_file_string());
            }
        }
    }
    Ok(0)
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Gb { file } => cmd_gb(cli, file),
        Command::Cert { file, method } => cmd_cert(cli, file, *method),
        Command::Distinguished { file } => cmd_distinguished(cli, file),
        Command::Multiplier { file, level } => cmd_multiplier(cli, file, *level),
        Command::Verify {
            suite,
            files,
            output,
            timings,
        } => cmd_verify(cli, suite, files, output.as_deref(), *timings),
        Command::Gen {
            count,
            min_arity,
            max_arity,
            max_generators,
            max_exponent,
            homogeneous,
            out_dir,
        } => {
            let spec = GeneratorSpec {
                arity: *min_arity..=*max_arity,
                max_generators: *max_generators,
                max_exponent: *max_exponent,
                homogeneous: *homogeneous,
                count: *count,
                seed: cli.seed,
                prefix: if homogeneous.is_some() { "h" } else { "j" }.into(),
            };
            cmd_gen(cli, spec, out_dir.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
