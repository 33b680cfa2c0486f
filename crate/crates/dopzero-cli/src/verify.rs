//! Verification suites: seeded, deterministic re-checks of the identities
//! the library is built on, reported as JSON with per-check records.

use std::process::ExitCode;

use clap::{Args, ValueEnum};
use dopzero::hypgeo::{self, DifferenceCoeffs, Family, PolySpec};
use dopzero::ortho;
use dopzero::scalar::ExactScalar;
use dopzero::zeros::{self, InterlacingOutcome, Method};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Ortho,
    Pfaff,
    Lemma1,
    Interlacing,
    Variation,
    Diffeq,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Ortho => "ortho",
            Suite::Pfaff => "pfaff",
            Suite::Lemma1 => "lemma1",
            Suite::Interlacing => "interlacing",
            Suite::Variation => "variation",
            Suite::Diffeq => "diffeq",
            Suite::All => "all",
        }
    }
}

fn parse_rational(s: &str) -> Result<ExactScalar, String> {
    s.parse::<ExactScalar>().map_err(|e| e.to_string())
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, value_enum)]
    suite: Suite,
    /// Seed for the randomized cases.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of randomized cases (pfaff, lemma1, diffeq).
    #[arg(long, default_value_t = 500)]
    cases: usize,
    /// p for the interlacing/variation suites.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    p: Option<ExactScalar>,
    /// N for the interlacing suite (runs n = N).
    #[arg(long = "N")]
    n_mass: Option<u64>,
    /// Degree n for the variation suite.
    #[arg(long)]
    n: Option<usize>,
    /// gamma range start for the variation suite.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    from: Option<ExactScalar>,
    /// gamma range end for the variation suite.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    to: Option<ExactScalar>,
    /// gamma step for the variation suite.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    step: Option<ExactScalar>,
    /// Relative tolerance for the ortho suite.
    #[arg(long, default_value_t = 1e-10)]
    rel_tol: f64,
}

#[derive(Serialize)]
struct CheckRecord {
    name: String,
    params: String,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct VerifyReport {
    suite: &'static str,
    seed: u64,
    passed: usize,
    failed: usize,
    checks: Vec<CheckRecord>,
}

fn record(name: &str, params: String, pass: bool) -> CheckRecord {
    CheckRecord {
        name: name.to_string(),
        params,
        pass,
        residual: None,
        detail: None,
    }
}

fn rational_in(rng: &mut impl Rng, lo: f64, hi: f64) -> ExactScalar {
    let den = rng.gen_range(8i64..=64);
    let lo_n = (lo * den as f64).floor() as i64 + 1;
    let hi_n = (hi * den as f64).ceil() as i64 - 1;
    let num = if hi_n < lo_n {
        ((lo + hi) / 2.0 * den as f64).round() as i64
    } else {
        rng.gen_range(lo_n..=hi_n)
    };
    ExactScalar::from_ratio(num, den).unwrap()
}

fn random_theorem_spec(rng: &mut impl Rng, n_max: usize) -> PolySpec<ExactScalar> {
    let n = rng.gen_range(1..=n_max);
    let p = rational_in(rng, 0.05, 0.95);
    let m = ExactScalar::from_int(n as i64 - 1) + rational_in(rng, 0.05, 10.0);
    PolySpec::krawtchouk(p, m, n).unwrap()
}

fn spec_params(spec: &PolySpec<ExactScalar>) -> String {
    let fields = crate::spec_fields(spec);
    let mut out = fields
        .into_iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";");
    out.push_str(&format!(";n={}", spec.degree()));
    out
}

fn pfaff_suite(seed: u64, cases: usize, checks: &mut Vec<CheckRecord>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let spec = random_theorem_spec(&mut rng, 10);
        let Family::Krawtchouk { m, .. } = spec.family().clone() else {
            unreachable!()
        };
        let x = rational_in(&mut rng, -3.0, m.to_real().unwrap_or(10.0) + 3.0);
        let params = format!("{};x={x}", spec_params(&spec));
        let check = match (hypgeo::eval(&spec, &x), hypgeo::pfaff_reflect(&spec, &x)) {
            (Ok(direct), Ok(reflected)) => {
                let mut rec = record("pfaff_exact_equality", params, direct == reflected);
                rec.residual = Some((&direct - &reflected).to_real().unwrap_or(f64::NAN).abs());
                rec
            }
            (a, b) => {
                let mut rec = record("pfaff_exact_equality", params, false);
                rec.detail = Some(format!("evaluation failed: {a:?} / {b:?}"));
                rec
            }
        };
        checks.push(check);
    }
    // zero sets reflect under p -> 1-p, x -> M-x
    for _ in 0..8 {
        let spec = random_theorem_spec(&mut rng, 8);
        let Family::Krawtchouk { p, m } = spec.family().clone() else {
            unreachable!()
        };
        let params = spec_params(&spec);
        let mirrored =
            PolySpec::krawtchouk(ExactScalar::from_int(1) - p, m.clone(), spec.degree()).unwrap();
        let rec = match (
            zeros::zeros_of(&spec, Method::Jacobi),
            zeros::zeros_of(&mirrored, Method::Jacobi),
        ) {
            (Ok(zs), Ok(zm)) => {
                let m_f = m.to_real().unwrap();
                let n = spec.degree();
                let max_delta = (0..n)
                    .map(|i| {
                        (zs.zeros[i].refined - (m_f - zm.zeros[n - 1 - i].refined)).abs()
                    })
                    .fold(0.0f64, f64::max);
                let mut rec = record("pfaff_zero_reflection", params, max_delta <= 1e-9);
                rec.residual = Some(max_delta);
                rec
            }
            (a, b) => {
                let mut rec = record("pfaff_zero_reflection", params, false);
                rec.detail = Some(format!("zero finding failed: {a:?} / {b:?}"));
                rec
            }
        };
        checks.push(rec);
    }
}

fn lemma1_suite(seed: u64, cases: usize, checks: &mut Vec<CheckRecord>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = ExactScalar::from_int(1);
    for _ in 0..cases.min(100) {
        let spec = random_theorem_spec(&mut rng, 10);
        let params = spec_params(&spec);
        let rec = match zeros::zeros_of(&spec, Method::Sturm) {
            Ok(zs) => {
                let refined: Vec<f64> = zs.zeros.iter().map(|z| z.refined).collect();
                let mut applicable = 0usize;
                let mut pass = true;
                for (i, z) in zs.zeros.iter().enumerate() {
                    let lo_f = z.bracket_lo.to_real().unwrap();
                    let hi_f = z.bracket_hi.to_real().unwrap();
                    let isolated = refined.iter().enumerate().all(|(j, r)| {
                        j == i || !(lo_f - 1.0 - 1e-6 <= *r && *r <= hi_f + 1.0 + 1e-6)
                    });
                    if !isolated {
                        continue;
                    }
                    applicable += 1;
                    let left = hypgeo::eval(&spec, &(&z.bracket_lo - &one))
                        .map(|v| v.sign())
                        .unwrap_or(0);
                    let right = hypgeo::eval(&spec, &(&z.bracket_hi + &one))
                        .map(|v| v.sign())
                        .unwrap_or(0);
                    if left * right != -1 || z.lemma1_product_sign != Some(-1) {
                        pass = false;
                    }
                }
                let mut rec = record("lemma1_neighbor_product", params, pass);
                rec.detail = Some(format!(
                    "{applicable} of {} zeros had isolated unit neighborhoods",
                    zs.zeros.len()
                ));
                rec
            }
            Err(e) => {
                let mut rec = record("lemma1_neighbor_product", params, false);
                rec.detail = Some(e.to_string());
                rec
            }
        };
        checks.push(rec);
    }
}

fn interlacing_suite(p: &ExactScalar, n_mass: u64, checks: &mut Vec<CheckRecord>) {
    let spec =
        PolySpec::krawtchouk(p.clone(), ExactScalar::from_int(n_mass as i64), n_mass as usize);
    let params = format!("p={p};N={n_mass};n={n_mass}");
    let rec = match spec.map_err(|e| e.to_string()).and_then(|s| {
        zeros::zeros_of(&s, Method::Both).map_err(|e| e.to_string())
    }) {
        Ok(zs) => match zeros::check_interlacing(&zs) {
            InterlacingOutcome::Holds => record("interlacing_chain", params, true),
            InterlacingOutcome::Violated { index } => {
                let mut rec = record("interlacing_chain", params, false);
                rec.detail = Some(format!("zero {index} escapes its unit interval"));
                rec
            }
            InterlacingOutcome::NotApplicable { reason } => {
                let mut rec = record("interlacing_chain", params, false);
                rec.detail = Some(format!("not applicable: {reason}"));
                rec
            }
        },
        Err(e) => {
            let mut rec = record("interlacing_chain", params, false);
            rec.detail = Some(e);
            rec
        }
    };
    checks.push(rec);
}

fn variation_suite(
    p: &ExactScalar,
    n: usize,
    from: &ExactScalar,
    to: &ExactScalar,
    step: &ExactScalar,
    checks: &mut Vec<CheckRecord>,
) {
    match zeros::variation_profile(p, n, from, to, step) {
        Ok(profile) => {
            for (gamma, v) in &profile {
                let rec = record(
                    "variation_count",
                    format!("p={p};n={n};gamma={gamma}"),
                    *v == n,
                );
                checks.push(rec);
            }
            // constancy inside each unit interval (N, N+1]
            let mut by_interval: std::collections::BTreeMap<i64, Vec<usize>> =
                std::collections::BTreeMap::new();
            for (gamma, v) in &profile {
                let upper = gamma.ceil_int();
                let key = num_traits::ToPrimitive::to_i64(&upper).unwrap_or(i64::MAX);
                by_interval.entry(key).or_default().push(*v);
            }
            for (upper, vs) in by_interval {
                let constant = vs.windows(2).all(|w| w[0] == w[1]);
                checks.push(record(
                    "variation_constancy",
                    format!("p={p};n={n};interval=({},{upper}]", upper - 1),
                    constant,
                ));
            }
        }
        Err(e) => {
            let mut rec = record("variation_count", format!("p={p};n={n}"), false);
            rec.detail = Some(e.to_string());
            checks.push(rec);
        }
    }
}

fn diffeq_suite(seed: u64, cases: usize, checks: &mut Vec<CheckRecord>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = ExactScalar::from_int(1);
    for _ in 0..cases {
        let spec = random_theorem_spec(&mut rng, 10);
        let Family::Krawtchouk { m, .. } = spec.family().clone() else {
            unreachable!()
        };
        let x = rational_in(&mut rng, -2.0, m.to_real().unwrap_or(10.0) + 2.0);
        let params = format!("{};x={x}", spec_params(&spec));
        let rec = match (|| -> Result<ExactScalar, hypgeo::HypgeoError> {
            let co = DifferenceCoeffs::at(&spec, &x)?;
            let up = hypgeo::eval(&spec, &(&x + &one))?;
            let down = hypgeo::eval(&spec, &(&x - &one))?;
            let here = hypgeo::eval(&spec, &x)?;
            Ok(co.a * up + co.c * down - co.b * here)
        })() {
            Ok(residual) => {
                let mut rec = record("diffeq_residual", params, residual.is_zero());
                rec.residual = Some(residual.to_real().unwrap_or(f64::NAN).abs());
                rec
            }
            Err(e) => {
                let mut rec = record("diffeq_residual", params, false);
                rec.detail = Some(e.to_string());
                rec
            }
        };
        checks.push(rec);
    }
    // propagation along an integer mesh agrees with direct evaluation
    for (n_points, n, p) in [(20u64, 4usize, "1/3"), (50, 6, "1/2")] {
        let spec =
            PolySpec::krawtchouk(p.parse().unwrap(), ExactScalar::from_int(n_points as i64), n)
                .unwrap();
        let params = spec_params(&spec);
        let rec = match hypgeo::eval_by_difference(
            &spec,
            &ExactScalar::from_int(0),
            n_points as usize + 1,
        ) {
            Ok(values) => {
                let mut pass = true;
                for (i, v) in values.iter().enumerate() {
                    let direct = hypgeo::eval(&spec, &ExactScalar::from_int(i as i64)).unwrap();
                    if v != &direct {
                        pass = false;
                    }
                }
                record("diffeq_mesh_propagation", params, pass)
            }
            Err(e) => {
                let mut rec = record("diffeq_mesh_propagation", params, false);
                rec.detail = Some(e.to_string());
                rec
            }
        };
        checks.push(rec);
    }
}

fn ortho_suite(rel_tol: f64, checks: &mut Vec<CheckRecord>) {
    let trunc_tol = rel_tol / 100.0;
    // Krawtchouk: all off-diagonal sums exactly zero
    for p in ["1/3", "1/2", "2/3"] {
        let pe: ExactScalar = p.parse().unwrap();
        for n_points in 1u64..=8 {
            let mut pass = true;
            let mut detail = None;
            'outer: for n in 0..=n_points as usize {
                for m in 0..n {
                    match ortho::krawtchouk_ortho_sum(m, n, &pe, n_points) {
                        Ok(report) if report.lhs_exact == Some(ExactScalar::zero()) => {}
                        Ok(report) => {
                            pass = false;
                            detail = Some(format!("(m={m},n={n}) sum {:?}", report.lhs_exact));
                            break 'outer;
                        }
                        Err(e) => {
                            pass = false;
                            detail = Some(e.to_string());
                            break 'outer;
                        }
                    }
                }
            }
            let mut rec = record(
                "krawtchouk_offdiagonal_exact_zero",
                format!("p={p};N={n_points}"),
                pass,
            );
            rec.detail = detail;
            checks.push(rec);
        }
    }
    // Meixner 0 < c < 1: diagonal against the closed form, off-diagonal
    // against the smaller diagonal
    for beta in ["1", "2", "5/2"] {
        for c in ["1/4", "1/2", "3/4"] {
            let be: ExactScalar = beta.parse().unwrap();
            let ce: ExactScalar = c.parse().unwrap();
            let mut diag = Vec::new();
            let mut max_diag_residual = 0.0f64;
            let mut diag_pass = true;
            for n in 0..=6usize {
                match ortho::meixner_ortho_sum(n, n, &be, &ce, trunc_tol) {
                    Ok(report) => {
                        let rel = (report.lhs - report.rhs).abs() / report.rhs.abs();
                        max_diag_residual = max_diag_residual.max(rel);
                        if rel > rel_tol {
                            diag_pass = false;
                        }
                        diag.push(report.rhs.abs());
                    }
                    Err(_) => {
                        diag_pass = false;
                        diag.push(1.0);
                    }
                }
            }
            let mut rec = record(
                "meixner_diagonal_closed_form",
                format!("beta={beta};c={c};n<=6"),
                diag_pass,
            );
            rec.residual = Some(max_diag_residual);
            checks.push(rec);

            let mut off_pass = true;
            let mut max_off = 0.0f64;
            for n in 0..=6usize {
                for m in 0..n {
                    match ortho::meixner_ortho_sum(m, n, &be, &ce, trunc_tol) {
                        Ok(report) => {
                            let rel = report.lhs.abs() / diag[m];
                            max_off = max_off.max(rel);
                            if rel > rel_tol {
                                off_pass = false;
                            }
                        }
                        Err(_) => off_pass = false,
                    }
                }
            }
            let mut rec = record(
                "meixner_offdiagonal_zero",
                format!("beta={beta};c={c};m<n<=6"),
                off_pass,
            );
            rec.residual = Some(max_off);
            checks.push(rec);
        }
    }
    // Meixner c > 1 relation (integer beta)
    for beta in [1u32, 2, 3] {
        for c in ["2", "3"] {
            let ce: ExactScalar = c.parse().unwrap();
            let mut pass = true;
            let mut max_rel = 0.0f64;
            for n in 0..=3usize {
                for m in 0..=3usize {
                    match ortho::meixner_ortho_sum_cgt1(m, n, beta, &ce, trunc_tol) {
                        Ok(report) => {
                            let rel = if m == n {
                                (report.lhs - report.rhs).abs() / report.rhs.abs()
                            } else {
                                report.lhs.abs()
                            };
                            max_rel = max_rel.max(rel);
                            if rel > rel_tol {
                                pass = false;
                            }
                        }
                        Err(_) => pass = false,
                    }
                }
            }
            let mut rec = record(
                "meixner_c_gt_1_relation",
                format!("beta={beta};c={c};m,n<=3"),
                pass,
            );
            rec.residual = Some(max_rel);
            checks.push(rec);
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(), ExitCode> {
    let mut checks = Vec::new();
    let default_p: ExactScalar = "1/2".parse().unwrap();
    let p = args.p.clone().unwrap_or(default_p);
    let interlacing_n = args.n_mass.unwrap_or(6);
    let variation_n = args.n.unwrap_or(3);
    let from = args.from.clone().unwrap_or_else(|| {
        ExactScalar::from_int(variation_n as i64) + "1/20".parse::<ExactScalar>().unwrap()
    });
    let to = args
        .to
        .clone()
        .unwrap_or_else(|| ExactScalar::from_int(variation_n as i64 + 2));
    let step = args.step.clone().unwrap_or_else(|| "1/20".parse().unwrap());

    match args.suite {
        Suite::Pfaff => pfaff_suite(args.seed, args.cases, &mut checks),
        Suite::Lemma1 => lemma1_suite(args.seed, args.cases, &mut checks),
        Suite::Interlacing => interlacing_suite(&p, interlacing_n, &mut checks),
        Suite::Variation => variation_suite(&p, variation_n, &from, &to, &step, &mut checks),
        Suite::Diffeq => diffeq_suite(args.seed, args.cases, &mut checks),
        Suite::Ortho => ortho_suite(args.rel_tol, &mut checks),
        Suite::All => {
            pfaff_suite(args.seed, args.cases, &mut checks);
            lemma1_suite(args.seed, args.cases.min(60), &mut checks);
            interlacing_suite(&p, interlacing_n, &mut checks);
            variation_suite(&p, variation_n, &from, &to, &step, &mut checks);
            diffeq_suite(args.seed, args.cases, &mut checks);
            ortho_suite(args.rel_tol, &mut checks);
        }
    }

    let failed = checks.iter().filter(|c| !c.pass).count();
    let report = VerifyReport {
        suite: args.suite.name(),
        seed: args.seed,
        passed: checks.len() - failed,
        failed,
        checks,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serialisable report")
    );
    if failed > 0 {
        for check in report.checks.iter().filter(|c| !c.pass) {
            eprintln!(
                "FAILED {} [{}]{}",
                check.name,
                check.params,
                check
                    .detail
                    .as_ref()
                    .map(|d| format!(": {d}"))
                    .unwrap_or_default()
            );
        }
        return Err(ExitCode::from(1));
    }
    Ok(())
}
