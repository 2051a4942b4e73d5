//! Command-line front end: argument parsing, dispatch, report emission.
//!
//! Exit codes: 0 when every verdict passes, 1 when verification ran but
//! some verdict did not pass (the report is still written), 2 for argument
//! and configuration errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use svapprox_core::kernels::Kernel;
use svapprox_core::set_functions::PNorm;
use svapprox_core::theorems::{
    verify_theorem1, verify_theorem2, verify_theorem3, verify_theorem4, verify_theorem5,
    ExperimentConfig, TheoremReport, Verdict,
};
use svapprox_core::trig_approx::{best_l1, best_l2, best_linf, sign_convolution_sup};
use svapprox_core::Error as CoreError;

use crate::favard::{favard_rows, to_csv};
use crate::fft::FftConvolver;
use crate::kernel_spec::parse_kernel;
use crate::report::{approx_report, pnorm_label, to_json, verdict_label, verify_report, RunConfig};

#[derive(Parser, Debug)]
#[command(
    name = "svapprox",
    version,
    about = "Calculus and best approximation of set-valued periodic functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one verification experiment and write a JSON report.
    Verify(VerifyArgs),
    /// Compute one best-approximation polynomial with its certificate.
    Approx(ApproxArgs),
    /// Emit the sharp-constant regression table as CSV.
    FavardTable(FavardTableArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoremId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
}

impl TheoremId {
    fn label(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "thm1",
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm3 => "thm3",
            TheoremId::Thm4 => "thm4",
            TheoremId::Thm5 => "thm5",
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Statement to check.
    #[arg(value_enum)]
    pub theorem: TheoremId,
    /// Kernel spec, e.g. "bernoulli:1", "poisson:0.5", "coeffs a0=1 ak=[1]".
    #[arg(long)]
    pub kernel: String,
    /// Order bound of the approximating polynomials.
    #[arg(long)]
    pub n: usize,
    /// Class exponent: 1, 2, or inf.
    #[arg(long, default_value = "inf")]
    pub p: String,
    /// Metric or residual exponent where the statement takes one.
    #[arg(long)]
    pub q: Option<String>,
    /// Periodic argument grid size.
    #[arg(long, default_value_t = 64)]
    pub nx: usize,
    /// Support direction grid size.
    #[arg(long, default_value_t = 64)]
    pub nxi: usize,
    /// Ambient dimension of the sets (1 or 2).
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Random class members drawn per experiment.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Random approximants tried per adversarial sweep.
    #[arg(long, default_value_t = 200)]
    pub sweep: usize,
    /// Quadrature grid handed to the solvers.
    #[arg(long, default_value_t = 2048)]
    pub solver_grid: usize,
    /// Convergence tolerance handed to the solvers.
    #[arg(long, default_value_t = 1e-9)]
    pub solver_tol: f64,
    /// Seed for all random draws.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Report file path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Optional CSV summary path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ApproxArgs {
    /// Kernel spec, e.g. "bernoulli:2".
    #[arg(long)]
    pub kernel: String,
    /// Order bound of the approximating polynomial.
    #[arg(long)]
    pub n: usize,
    /// Norm to approximate in: l1, l2, or linf.
    #[arg(long, default_value = "l1")]
    pub norm: String,
    /// Quadrature grid handed to the solver.
    #[arg(long, default_value_t = 2048)]
    pub solver_grid: usize,
    /// Convergence tolerance handed to the solver.
    #[arg(long, default_value_t = 1e-9)]
    pub solver_tol: f64,
    /// Report file path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FavardTableArgs {
    /// Smoothness orders, as "1-2", "3", or "1,2,4".
    #[arg(long, default_value = "1-2")]
    pub r: String,
    /// Polynomial order bounds, same syntax.
    #[arg(long, default_value = "1-4")]
    pub n: String,
    /// Quadrature grid for the mean-norm solver.
    #[arg(long, default_value_t = 8192)]
    pub solver_grid: usize,
    /// Convergence tolerance for the mean-norm solver.
    #[arg(long, default_value_t = 1e-9)]
    pub solver_tol: f64,
    /// CSV file path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs one parsed invocation and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Approx(args) => run_approx(args),
        Command::FavardTable(args) => run_favard(args),
    }
}

fn usage_error(message: impl std::fmt::Display) -> Result<i32> {
    eprintln!("error: {message}");
    Ok(2)
}

fn parse_pnorm(s: &str) -> Option<PNorm> {
    match s {
        "1" => Some(PNorm::One),
        "2" => Some(PNorm::Two),
        "inf" | "Inf" | "INF" => Some(PNorm::Inf),
        _ => None,
    }
}

fn run_verify(args: VerifyArgs) -> Result<i32> {
    let kernel = match parse_kernel(&args.kernel) {
        Ok(k) => k,
        Err(e) => return usage_error(format_args!("--kernel: {e:#}")),
    };
    let Some(p) = parse_pnorm(&args.p) else {
        return usage_error(format_args!("--p: expected 1, 2, or inf, got {:?}", args.p));
    };
    let q = match &args.q {
        None => None,
        Some(s) => match parse_pnorm(s) {
            Some(q) => Some(q),
            None => {
                return usage_error(format_args!("--q: expected 1, 2, or inf, got {s:?}"))
            }
        },
    };
    let cfg = ExperimentConfig {
        n_x: args.nx,
        n_xi: args.nxi,
        dim: args.dim,
        samples: args.samples,
        sweep: args.sweep,
        solver_grid: args.solver_grid,
        solver_tol: args.solver_tol,
        seed: args.seed,
    };

    // Exponents not taken by a statement are rejected rather than ignored.
    let q = match (args.theorem, q) {
        (TheoremId::Thm1 | TheoremId::Thm2, Some(_)) => {
            return usage_error("--q: this statement takes only --p");
        }
        (TheoremId::Thm1 | TheoremId::Thm2, None) => None,
        (TheoremId::Thm3, q) => Some(q.unwrap_or(p)),
        (TheoremId::Thm4 | TheoremId::Thm5, q) => Some(q.unwrap_or_else(|| p.conjugate())),
    };

    let mut conv = FftConvolver::new();
    let outcome = match args.theorem {
        TheoremId::Thm1 => verify_theorem1(&kernel, args.n, p, &cfg, &mut conv),
        TheoremId::Thm2 => verify_theorem2(&kernel, args.n, p, &cfg, &mut conv),
        TheoremId::Thm3 => verify_theorem3(&kernel, args.n, p, q.unwrap(), &cfg, &mut conv),
        TheoremId::Thm4 => verify_theorem4(&kernel, args.n, p, q.unwrap(), &cfg, &mut conv),
        TheoremId::Thm5 => verify_theorem5(&kernel, args.n, p, q.unwrap(), &cfg, &mut conv),
    };
    let report = match outcome {
        Ok(report) => report,
        Err(CoreError::InvalidArgument(msg)) => return usage_error(msg),
        Err(e) => return Err(e).context("verification failed to run"),
    };

    let config = RunConfig {
        command: format!("verify {}", args.theorem.label()),
        kernel: args.kernel.clone(),
        n: args.n,
        p: Some(pnorm_label(p).to_string()),
        q: q.map(|q| pnorm_label(q).to_string()),
        n_x: cfg.n_x,
        n_xi: cfg.n_xi,
        dim: cfg.dim,
        samples: cfg.samples,
        sweep: cfg.sweep,
        solver_grid: cfg.solver_grid,
        solver_tol: cfg.solver_tol,
        seed: cfg.seed,
    };
    let json = to_json(&verify_report(config, std::slice::from_ref(&report)));
    emit(args.out.as_deref(), &json)?;
    if let Some(path) = &args.csv {
        let csv = summary_csv(&kernel, &report)?;
        fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if report.verdict == Verdict::Pass { 0 } else { 1 })
}

/// One-line CSV summary of a verification run.
fn summary_csv(kernel: &Kernel, report: &TheoremReport) -> Result<String> {
    let primary = [
        "E (solver)",
        "upper: certified mean error",
        "rhs mean branch (solver)",
        "square wave: scalar error",
    ]
    .iter()
    .find_map(|name| report.value(name))
    .or_else(|| report.values.first().map(|&(_, v)| v))
    .unwrap_or(f64::NAN);
    let sign_sup = sign_convolution_sup(kernel, report.n)?;
    let mut out = String::from("kernel,n,q,E_computed,sign_conv_sup,verdict\n");
    out.push_str(&format!(
        "{},{},{},{:.12},{:.12},{}\n",
        report.kernel,
        report.n,
        report.q.map(pnorm_label).unwrap_or("-"),
        primary,
        sign_sup,
        verdict_label(report.verdict),
    ));
    Ok(out)
}

fn run_approx(args: ApproxArgs) -> Result<i32> {
    let kernel = match parse_kernel(&args.kernel) {
        Ok(k) => k,
        Err(e) => return usage_error(format_args!("--kernel: {e:#}")),
    };
    let norm = match args.norm.as_str() {
        "l1" => PNorm::One,
        "l2" => PNorm::Two,
        "linf" => PNorm::Inf,
        other => {
            return usage_error(format_args!("--norm: expected l1, l2, or linf, got {other:?}"))
        }
    };
    let solved = match norm {
        PNorm::One => best_l1(&kernel, args.n, args.solver_grid, args.solver_tol),
        PNorm::Two => best_l2(&kernel, args.n),
        PNorm::Inf => best_linf(&kernel, args.n, args.solver_grid, args.solver_tol),
    };
    let sol = match solved {
        Ok(sol) => sol,
        Err(CoreError::InvalidArgument(msg)) => return usage_error(msg),
        Err(e) => return Err(e).context("solver failed"),
    };
    let config = RunConfig {
        command: "approx".into(),
        kernel: args.kernel.clone(),
        n: args.n,
        p: None,
        q: Some(pnorm_label(norm).to_string()),
        n_x: 0,
        n_xi: 0,
        dim: 0,
        samples: 0,
        sweep: 0,
        solver_grid: args.solver_grid,
        solver_tol: args.solver_tol,
        seed: 0,
    };
    let json = to_json(&approx_report(config, norm, &sol));
    emit(args.out.as_deref(), &json)?;
    Ok(0)
}

fn run_favard(args: FavardTableArgs) -> Result<i32> {
    let r_values = match parse_values(&args.r) {
        Ok(v) => v,
        Err(e) => return usage_error(format_args!("--r: {e:#}")),
    };
    let n_values = match parse_values(&args.n) {
        Ok(v) => v.into_iter().map(|n| n as usize).collect::<Vec<_>>(),
        Err(e) => return usage_error(format_args!("--n: {e:#}")),
    };
    let rows = match favard_rows(&r_values, &n_values, args.solver_grid, args.solver_tol) {
        Ok(rows) => rows,
        Err(e) => match e.downcast_ref::<CoreError>() {
            Some(CoreError::InvalidArgument(msg)) => return usage_error(msg),
            _ => return Err(e).context("table computation failed"),
        },
    };
    emit(args.out.as_deref(), &to_csv(&rows))?;
    Ok(0)
}

/// Parses "1-4", "3", or "1,2,4" into an explicit list.
fn parse_values(spec: &str) -> Result<Vec<u32>> {
    if let Some((a, b)) = spec.split_once('-') {
        let a: u32 = a.trim().parse().context("range start")?;
        let b: u32 = b.trim().parse().context("range end")?;
        if a > b || a == 0 {
            anyhow::bail!("range {spec:?} is empty or starts at zero");
        }
        return Ok((a..=b).collect());
    }
    let values = spec
        .split(',')
        .map(|v| v.trim().parse::<u32>().context("list entry"))
        .collect::<Result<Vec<_>>>()?;
    if values.is_empty() || values.contains(&0) {
        anyhow::bail!("list {spec:?} is empty or contains zero");
    }
    Ok(values)
}

fn emit(path: Option<&std::path::Path>, content: &str) -> Result<()> {
    match path {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            std::io::stdout().write_all(content.as_bytes()).context("writing to stdout")
        }
    }
}
