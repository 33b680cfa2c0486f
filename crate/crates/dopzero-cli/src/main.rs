//! `dopzero` command line: polynomial evaluation, certified zeros,
//! verification suites and parameter sweeps for Meixner and Krawtchouk
//! polynomials.
//!
//! Exit codes: 0 success, 1 domain or verification failure, 2 usage error.

mod output;
mod sweep;
mod verify;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dopzero::scalar::ExactScalar;
use dopzero::zeros::{Method, ZeroOptions};
use dopzero::{hypgeo, zeros, Family, PolySpec};

/// Environment variable overriding the 10⁶-point sturm mesh guard.
const MAX_MESH_ENV: &str = "DOPZERO_MAX_MESH";

#[derive(Parser)]
#[command(
    name = "dopzero",
    version,
    about = "Evaluate Meixner/Krawtchouk polynomials, certify their real zeros, and verify the identities they satisfy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a polynomial at a point.
    Eval(EvalArgs),
    /// Isolate, refine and certify the real zeros of a spec.
    Zeros(ZerosArgs),
    /// Run a verification suite and emit a JSON report.
    Verify(verify::VerifyArgs),
    /// Sweep a parameter and emit one CSV row per sample.
    Sweep(sweep::SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Meixner,
    Krawtchouk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Sturm,
    Jacobi,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Sturm => Method::Sturm,
            MethodArg::Jacobi => Method::Jacobi,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Rational flag value: "a/b" or an exact decimal like "0.3" (= 3/10).
fn parse_rational(s: &str) -> Result<ExactScalar, String> {
    ExactScalar::from_str(s).map_err(|e| e.to_string())
}

/// Family parameters shared by eval/zeros/sweep.
#[derive(Args, Clone)]
struct SpecArgs {
    /// Polynomial family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Degree n.
    #[arg(long)]
    n: usize,
    /// Meixner beta (rational).
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    beta: Option<ExactScalar>,
    /// Meixner c (rational).
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    c: Option<ExactScalar>,
    /// Krawtchouk p (rational).
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    p: Option<ExactScalar>,
    /// Krawtchouk M = gamma - 1 (rational, possibly non-integer).
    #[arg(long = "M", value_parser = parse_rational, allow_hyphen_values = true)]
    m: Option<ExactScalar>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Evaluation point x (rational).
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    x: ExactScalar,
    /// Print the exact rational value instead of a double.
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct ZerosArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Zero-finding method.
    #[arg(long, value_enum, default_value = "both")]
    method: MethodArg,
    /// Bisection tolerance on bracket width.
    #[arg(long, default_value = "1e-12")]
    tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

fn build_spec(args: &SpecArgs) -> Result<PolySpec<ExactScalar>, ExitCode> {
    let usage = |msg: &str| -> ExitCode {
        eprintln!("usage error: {msg}");
        ExitCode::from(2)
    };
    let spec = match args.family {
        FamilyArg::Meixner => {
            let (Some(beta), Some(c)) = (args.beta.clone(), args.c.clone()) else {
                return Err(usage("--family meixner requires --beta and --c"));
            };
            if args.p.is_some() || args.m.is_some() {
                return Err(usage("--p/--M do not apply to the meixner family"));
            }
            PolySpec::meixner(beta, c, args.n)
        }
        FamilyArg::Krawtchouk => {
            let (Some(p), Some(m)) = (args.p.clone(), args.m.clone()) else {
                return Err(usage("--family krawtchouk requires --p and --M"));
            };
            if args.beta.is_some() || args.c.is_some() {
                return Err(usage("--beta/--c do not apply to the krawtchouk family"));
            }
            PolySpec::krawtchouk(p, m, args.n)
        }
    };
    spec.map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })
}

fn zero_options(tol: f64) -> Result<ZeroOptions, ExitCode> {
    let mut opts = ZeroOptions {
        tol,
        ..ZeroOptions::default()
    };
    if let Ok(raw) = std::env::var(MAX_MESH_ENV) {
        match raw.parse::<u64>() {
            Ok(limit) => opts.max_mesh = limit,
            Err(_) => {
                eprintln!("usage error: {MAX_MESH_ENV}={raw} is not a valid mesh limit");
                return Err(ExitCode::from(2));
            }
        }
    }
    Ok(opts)
}

fn cmd_eval(args: &EvalArgs) -> Result<(), ExitCode> {
    let spec = build_spec(&args.spec)?;
    let value = hypgeo::eval(&spec, &args.x).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })?;
    if args.exact {
        println!("{value}");
    } else {
        let real = value.to_real().map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(1)
        })?;
        println!("{real}");
    }
    Ok(())
}

fn cmd_zeros(args: &ZerosArgs) -> Result<(), ExitCode> {
    let spec = build_spec(&args.spec)?;
    let opts = zero_options(args.tol)?;
    let set = zeros::zeros_of_opts(&spec, args.method.into(), &opts).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })?;
    match args.format {
        FormatArg::Csv => print!("{}", output::zeros_csv(&set)),
        FormatArg::Json => println!("{}", output::zeros_json(&set)),
    }
    Ok(())
}

/// Family tag plus parameter strings for reports.
pub fn spec_fields(spec: &PolySpec<ExactScalar>) -> Vec<(&'static str, String)> {
    match spec.family() {
        Family::Meixner { beta, c } => vec![
            ("family", "meixner".to_string()),
            ("beta", beta.to_string()),
            ("c", c.to_string()),
        ],
        Family::Krawtchouk { p, m } => vec![
            ("family", "krawtchouk".to_string()),
            ("p", p.to_string()),
            ("M", m.to_string()),
        ],
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Zeros(args) => cmd_zeros(args),
        Command::Verify(args) => verify::cmd_verify(args),
        Command::Sweep(args) => sweep::cmd_sweep(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
