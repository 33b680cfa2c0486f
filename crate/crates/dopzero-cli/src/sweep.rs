//! Parameter sweeps: one CSV row per sampled value, zeros via the (float)
//! jacobi route, variation counts via the exact mesh scan.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, ValueEnum};
use dopzero::hypgeo::{Family, PolySpec};
use dopzero::scalar::ExactScalar;
use dopzero::zeros::{self, Method, ZerosError};

use crate::output::csv_row;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    /// Krawtchouk M (gamma - 1).
    #[value(name = "M")]
    M,
    /// Meixner c.
    C,
    /// Meixner beta.
    Beta,
    /// Krawtchouk p.
    P,
}

impl SweepParam {
    fn name(self) -> &'static str {
        match self {
            SweepParam::M => "M",
            SweepParam::C => "c",
            SweepParam::Beta => "beta",
            SweepParam::P => "p",
        }
    }
}

fn parse_rational(s: &str) -> Result<ExactScalar, String> {
    s.parse::<ExactScalar>().map_err(|e| e.to_string())
}

#[derive(Args)]
pub struct SweepArgs {
    #[command(flatten)]
    spec: crate::SpecArgs,
    /// Which parameter to sweep (the matching spec flag is then omitted).
    #[arg(long, value_enum)]
    param: SweepParam,
    /// First sampled value.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    from: ExactScalar,
    /// Last sampled value (inclusive when hit exactly).
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    to: ExactScalar,
    /// Sample spacing (positive rational).
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    step: ExactScalar,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("usage error: {msg}");
    ExitCode::from(2)
}

fn build_swept_spec(
    args: &SweepArgs,
    value: &ExactScalar,
) -> Result<PolySpec<ExactScalar>, dopzero::hypgeo::HypgeoError> {
    let n = args.spec.n;
    match args.param {
        SweepParam::M => {
            PolySpec::krawtchouk(args.spec.p.clone().unwrap(), value.clone(), n)
        }
        SweepParam::P => {
            PolySpec::krawtchouk(value.clone(), args.spec.m.clone().unwrap(), n)
        }
        SweepParam::C => PolySpec::meixner(args.spec.beta.clone().unwrap(), value.clone(), n),
        SweepParam::Beta => PolySpec::meixner(value.clone(), args.spec.c.clone().unwrap(), n),
    }
}

fn validate_flags(args: &SweepArgs) -> Result<(), ExitCode> {
    let need_kraw = matches!(args.param, SweepParam::M | SweepParam::P);
    let is_kraw = matches!(args.spec.family, crate::FamilyArg::Krawtchouk);
    if need_kraw != is_kraw {
        return Err(usage("swept parameter does not belong to the chosen family"));
    }
    let fixed_ok = match args.param {
        SweepParam::M => args.spec.p.is_some() && args.spec.m.is_none(),
        SweepParam::P => args.spec.m.is_some() && args.spec.p.is_none(),
        SweepParam::C => args.spec.beta.is_some() && args.spec.c.is_none(),
        SweepParam::Beta => args.spec.c.is_some() && args.spec.beta.is_none(),
    };
    if !fixed_ok {
        return Err(usage(
            "fix the non-swept family parameter and omit the swept one",
        ));
    }
    if args.spec.beta.is_some() as usize
        + args.spec.c.is_some() as usize
        + args.spec.p.is_some() as usize
        + args.spec.m.is_some() as usize
        != 1
    {
        return Err(usage("a sweep takes exactly one fixed family parameter"));
    }
    if args.step.sign() <= 0 {
        return Err(usage("--step must be positive"));
    }
    Ok(())
}

/// Variation count of the (possibly substituted) Krawtchouk form, when the
/// mesh fits the guard.
fn variation_count(spec: &PolySpec<ExactScalar>, max_mesh: u64) -> Option<usize> {
    let scan = match spec.family() {
        Family::Krawtchouk { .. } => spec.clone(),
        Family::Meixner { .. } => spec.to_krawtchouk().ok()?,
    };
    let mesh_end = match zeros::default_mesh_end(&scan, max_mesh) {
        Ok(end) => end,
        Err(ZerosError::MeshTooLarge { .. }) => return None,
        Err(_) => return None,
    };
    zeros::sturm_sequence(&scan, mesh_end).ok().map(|s| s.variations)
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<(), ExitCode> {
    validate_flags(args)?;
    let opts = crate::zero_options(1e-12)?;
    let mut out = String::from("param,value,in_bounds,variations,zeros\n");
    let mut value = args.from.clone();
    while value <= args.to {
        let row = match build_swept_spec(args, &value) {
            Ok(spec) => {
                let in_bounds = spec.theorem_regime() || spec.corollary_regime();
                let (variations, zeros_field) = if in_bounds {
                    let vars = variation_count(&spec, opts.max_mesh)
                        .map(|v| v.to_string())
                        .unwrap_or_default();
                    let zs = zeros::zeros_of_opts(&spec, Method::Jacobi, &opts)
                        .map(|set| {
                            set.zeros
                                .iter()
                                .map(|z| z.refined.to_string())
                                .collect::<Vec<_>>()
                                .join(";")
                        })
                        .unwrap_or_default();
                    (vars, zs)
                } else {
                    (String::new(), String::new())
                };
                vec![
                    args.param.name().to_string(),
                    value.to_real().unwrap_or(f64::INFINITY).to_string(),
                    in_bounds.to_string(),
                    variations,
                    zeros_field,
                ]
            }
            // excluded parameter value (c = 0, p = 0, ...): out of bounds
            Err(_) => vec![
                args.param.name().to_string(),
                value.to_real().unwrap_or(f64::INFINITY).to_string(),
                "false".to_string(),
                String::new(),
                String::new(),
            ],
        };
        out.push_str(&csv_row(&row));
        value = &value + &args.step;
    }
    match &args.out {
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|e| {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::from(1)
            })?;
            file.write_all(out.as_bytes()).map_err(|e| {
                eprintln!("error: write failed: {e}");
                ExitCode::from(1)
            })?;
        }
        None => print!("{out}"),
    }
    Ok(())
}
