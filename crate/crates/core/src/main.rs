//! antibch: build the antiprimitive BCH codes, run per-theorem
//! verification suites, and enumerate weight distributions.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource
//! guard exceeded. Results go to stdout, logs to stderr.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use antibch::code::{self, bch};
use antibch::error::Error;
use antibch::field::Tower;
use antibch::verify::{self, CheckResult, RunCfg};
use antibch::weight;

#[derive(Parser)]
#[command(name = "antibch", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct bch(q, q+1, delta, h) and print its descriptor
    BuildCode(BuildArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
    /// Enumerate a weight distribution
    WeightDist(WeightArgs),
    /// Emit the minimum-weight support design (JSON record or a plain-text
    /// 0/1 incidence matrix for external rank tools)
    DesignExport(DesignArgs),
}

#[derive(Args)]
struct TowerArgs {
    /// Field characteristic
    #[arg(long)]
    p: u64,
    /// Tower exponent: q = delta^m
    #[arg(long)]
    m: usize,
    /// Designed distance; must be a power of p
    #[arg(long)]
    delta: u64,
}

impl TowerArgs {
    fn build(&self) -> Result<Tower, String> {
        let a = power_exponent(self.p, self.delta)
            .ok_or_else(|| format!("delta = {} is not a power of p = {}", self.delta, self.p))?;
        if self.m == 0 {
            return Err("m must be positive".into());
        }
        Tower::new(self.p, a, self.m).map_err(|e| e.to_string())
    }
}

fn power_exponent(p: u64, delta: u64) -> Option<usize> {
    if p < 2 || delta < 2 {
        return None;
    }
    let mut x = delta;
    let mut a = 0;
    while x % p == 0 {
        x /= p;
        a += 1;
    }
    (x == 1 && a >= 1).then_some(a)
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    tower: TowerArgs,
    /// BCH offset (narrow-sense is 1)
    #[arg(long, default_value_t = 1)]
    h: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: params, dual-params, min-words, design, design-iso, p-rank,
    /// classification, automorphism, lemmas, scale
    suite: String,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    delta: Option<u64>,
    /// Scalar-field degree for the classification suite
    #[arg(long, default_value_t = 1)]
    h: usize,
    /// Override for the base point u0 (element serialization)
    #[arg(long)]
    u0: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct WeightArgs {
    #[command(flatten)]
    tower: TowerArgs,
    #[arg(long, value_enum, default_value_t = Side::Dual)]
    side: Side,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct DesignArgs {
    #[command(flatten)]
    tower: TowerArgs,
    /// Build the PGL orbit design instead of the code-support design
    #[arg(long)]
    orbit: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// json emits the design record; text emits the 0/1 incidence matrix
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Primary,
    Dual,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Exhaustive,
    Trace,
    Macwilliams,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(RunError::Guard(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("hint: rerun with smaller parameters (lower delta or m)");
            ExitCode::from(EXIT_GUARD)
        }
    }
}

enum RunError {
    Usage(String),
    Guard(String),
}

impl From<Error> for RunError {
    fn from(e: Error) -> RunError {
        match e {
            Error::GuardExceeded(msg) => RunError::Guard(msg),
            other => RunError::Usage(other.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, RunError> {
    match cli.command {
        Command::BuildCode(args) => build_code(args),
        Command::Verify(args) => run_verify(args),
        Command::WeightDist(args) => weight_dist(args),
        Command::DesignExport(args) => design_export(args),
    }
}

fn design_export(args: DesignArgs) -> Result<ExitCode, RunError> {
    let tower = args.tower.build().map_err(RunError::Usage)?;
    let delta = args.tower.delta;
    let threads = args.threads.max(1);
    let structure = if args.orbit {
        antibch::design::orbit_design(&tower, threads)?
    } else {
        let code = bch(&tower, delta, 1)?;
        antibch::design::support_design(&tower, &code, delta, delta as usize + 1, threads)?
    };
    match args.format {
        Format::Json => {
            let Some(cert) = antibch::design::verify_t_design(&structure, 3) else {
                return Err(RunError::Usage("block set is not a 3-design".into()));
            };
            let record = antibch::design::design_record(&structure, &cert);
            println!(
                "{}",
                serde_json::to_string_pretty(&record).expect("serializable")
            );
        }
        Format::Text => print!("{}", structure.incidence_matrix_text()),
    }
    Ok(ExitCode::SUCCESS)
}

fn build_code(args: BuildArgs) -> Result<ExitCode, RunError> {
    let tower = args.tower.build().map_err(RunError::Usage)?;
    let code = bch(&tower, args.tower.delta, args.h)?;
    let desc = code::descriptor(&tower, &code, args.tower.delta, args.h);
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&desc).expect("serializable")
        ),
        Format::Text => {
            println!(
                "code: bch({}, {}, {}, {})",
                desc.q, desc.n, desc.delta, desc.h
            );
            println!("n: {}", desc.n);
            println!("k: {}", desc.dimension);
            println!("generator: {:?}", desc.generator);
            println!("defining_set: {:?}", desc.defining_set);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn require_tower(args: &VerifyArgs) -> Result<Tower, RunError> {
    let (Some(p), Some(m), Some(delta)) = (args.p, args.m, args.delta) else {
        return Err(RunError::Usage(
            "this suite needs --p, --m, and --delta".into(),
        ));
    };
    TowerArgs { p, m, delta }.build().map_err(RunError::Usage)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, RunError> {
    let cfg = RunCfg {
        seed: args.seed,
        samples: args.samples,
        threads: args.threads.max(1),
        u0: args.u0,
    };
    let results: Vec<CheckResult> = match args.suite.as_str() {
        "params" => verify::verify_params(&require_tower(&args)?, &cfg)?,
        "dual-params" => verify::verify_dual_params(&require_tower(&args)?, &cfg)?,
        "min-words" => verify::verify_min_words(&require_tower(&args)?, &cfg)?,
        "design" => verify::verify_design(&require_tower(&args)?, &cfg)?,
        "design-iso" => verify::verify_design_iso(&require_tower(&args)?, &cfg)?,
        "p-rank" => verify::verify_p_rank(&require_tower(&args)?, &cfg)?,
        "classification" => {
            let (Some(p), Some(m)) = (args.p, args.m) else {
                return Err(RunError::Usage("classification needs --p and --m".into()));
            };
            verify::verify_classification(p, m, args.h)?
        }
        "automorphism" => verify::verify_automorphism(&require_tower(&args)?, &cfg)?,
        "lemmas" => verify::verify_lemmas(&cfg)?,
        "scale" => verify::verify_scale_identity(&require_tower(&args)?, &cfg)?,
        other => {
            return Err(RunError::Usage(format!(
                "unknown suite '{other}'; expected one of params, dual-params, min-words, \
                 design, design-iso, p-rank, classification, automorphism, lemmas, scale"
            )))
        }
    };
    let pass = verify::all_pass(&results);
    match args.format {
        Format::Text => {
            for r in &results {
                let status = if r.pass { "PASS" } else { "FAIL" };
                if r.details.is_empty() {
                    println!("{}: {status}", r.name);
                } else {
                    println!("{}: {status} ({})", r.name, r.details);
                }
            }
        }
        Format::Json => {
            let doc = serde_json::json!({
                "suite": args.suite,
                "pass": pass,
                "results": results,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    })
}

fn weight_dist(args: WeightArgs) -> Result<ExitCode, RunError> {
    let tower = args.tower.build().map_err(RunError::Usage)?;
    let delta = args.tower.delta;
    let f = tower.field();
    let threads = args.threads.max(1);
    let primary = bch(&tower, delta, 1)?;
    let dual = code::dual(f, &primary);
    let q = tower.q();
    let n = tower.n() as usize;
    let exhaustible = |k: usize| q.checked_pow(k as u32).is_some_and(|t| t <= (1 << 26));
    let mut cross_check_failed = false;
    let dist = match (args.side, args.method) {
        (Side::Dual, Method::Trace) => weight::weight_distribution_trace(&tower, delta, threads)?,
        (Side::Dual, Method::Exhaustive) => {
            weight::weight_distribution_exhaustive(f, &dual, threads)?
        }
        (Side::Dual, Method::Auto) => {
            if exhaustible(dual.dimension()) {
                weight::weight_distribution_exhaustive(f, &dual, threads)?
            } else {
                weight::weight_distribution_trace(&tower, delta, threads)?
            }
        }
        (Side::Dual, Method::Macwilliams) => {
            let pd = weight::weight_distribution_exhaustive(f, &primary, threads)?;
            weight::macwilliams(&pd, n, primary.dimension(), q)?
        }
        (Side::Primary, Method::Exhaustive | Method::Auto) => {
            let pd = weight::weight_distribution_exhaustive(f, &primary, threads)?;
            // cross-check against the MacWilliams transform of the dual
            // whenever the dual is enumerable too
            if let Ok(dd) = weight::weight_distribution_trace(&tower, delta, threads) {
                let via_mw = weight::macwilliams(&dd, n, dual.dimension(), q)?;
                if via_mw != pd {
                    cross_check_failed = true;
                }
            }
            pd
        }
        (Side::Primary, Method::Macwilliams) => {
            let dd = if exhaustible(dual.dimension()) {
                weight::weight_distribution_exhaustive(f, &dual, threads)?
            } else {
                weight::weight_distribution_trace(&tower, delta, threads)?
            };
            weight::macwilliams(&dd, n, dual.dimension(), q)?
        }
        (Side::Primary, Method::Trace) => {
            return Err(RunError::Usage(
                "the trace parameterization enumerates the dual; use --side dual".into(),
            ))
        }
    };
    match args.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(&dist.to_decimal_strings()).expect("serializable")
            );
        }
        Format::Text => {
            for (i, c) in dist.counts().iter().enumerate() {
                if !c.is_zero() {
                    println!("A_{i} = {c}");
                }
            }
        }
    }
    if cross_check_failed {
        eprintln!("error: MacWilliams cross-check failed");
        return Ok(ExitCode::from(EXIT_FAIL));
    }
    Ok(ExitCode::SUCCESS)
}
