//! Experiment runners for the five extremal statements about approximating
//! convolution classes of set-valued periodic functions by generalized
//! trigonometric polynomials.
//!
//! Each runner computes both sides of one bound or equality, builds the
//! extremal objects that make the bound tight (square-wave carriers, dual
//! witnesses, inflated tubes), and emits a [`TheoremReport`] with named
//! values, serialized witnesses, and a pass/fail verdict.
//!
//! The randomized checks are designed to be watertight in the discrete
//! model, not merely true up to quadrature error:
//!
//! * Upper bounds use the discrete Hölder and Young chain. For materialized
//!   convolutions on a common grid, δ((K⊛h)(x), (T⊛h)(x)) is at most
//!   ‖K−T‖_q · ν_p(h) with every norm taken as a Δ-weighted sum over the
//!   same grid points, an inequality that holds exactly in floating point
//!   up to rounding.
//! * Lower-bound sweeps use exact discrete dual certificates. An atomic
//!   alternating certificate (for the uniform metric) or a shifted
//!   square-wave certificate (for the mean metric) annihilates every
//!   admissible competitor on the grid exactly, provided the grid length is
//!   a multiple of 2n; the sweep grid is padded to guarantee that.
//!
//! Dense-grid solver values, which do carry quadrature error, are reported
//! next to the discrete references under a separate, looser tolerance.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

// Required by the no_std build; under cfg(test) std's inherent f64 methods
// shadow the trait and the import goes unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::aumann::{set_convolution, Convolver};
use crate::convex_sets::{ConvexBody, DirectionGrid, Point, DEFAULT_N_XI};
use crate::kernels::{convolve_with_sign, ClosedForm, Kernel, SignFunction};
use crate::rng::SampleRng;
use crate::set_functions::{
    delta_lap, in_phi_p, lp_of_samples, random_phi_p, scalar_times_point, set_norm_lap,
    PNorm, PeriodicGrid, ScalarPeriodicFunction, SetValuedFunction, DEFAULT_N_X,
};
use crate::trig_approx::{
    best_l1, best_l2, best_linf, dual_witness, BestApprox, Certificate, TrigPolynomial,
};
use crate::{Error, Result};

/// Agreement tolerance for values computed by independent dense routes.
pub const EQUALITY_TOL: f64 = 2e-3;
/// Float slack for inequalities that are exact in the discrete model.
pub const SWEEP_SLACK: f64 = 1e-9;
/// Slack for the hard containment invariant of the inflated tube.
pub const CONTAINMENT_SLACK: f64 = 1e-9;
/// Tolerance for the dual-witness identity at the optimal polynomial.
pub const WITNESS_TOL: f64 = 1e-3;
/// Tolerance for comparisons that mix grid resolutions.
pub const LOOSE_TOL: f64 = 5e-3;

/// Grid sizes, sample counts, and solver settings shared by all runners.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    /// Points on the periodic argument grid.
    pub n_x: usize,
    /// Directions on the support grid.
    pub n_xi: usize,
    /// Ambient dimension of the sets, 1 or 2.
    pub dim: usize,
    /// Random members of the class drawn per experiment.
    pub samples: usize,
    /// Random approximants tried per adversarial sweep.
    pub sweep: usize,
    /// Grid length handed to the iterative solvers.
    pub solver_grid: usize,
    /// Convergence tolerance handed to the iterative solvers.
    pub solver_tol: f64,
    /// Seed for every random draw; reports are a pure function of it.
    pub seed: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            n_x: DEFAULT_N_X,
            n_xi: DEFAULT_N_XI,
            dim: 2,
            samples: 100,
            sweep: 200,
            solver_grid: 2048,
            solver_tol: 1e-9,
            seed: 0,
        }
    }
}

impl ExperimentConfig {
    fn grids(&self) -> Result<(PeriodicGrid, Arc<DirectionGrid>)> {
        Ok((PeriodicGrid::new(self.n_x)?, DirectionGrid::new(self.dim, self.n_xi)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The statement's hypotheses could not be established numerically.
    NotApplicable,
}

/// Outcome of one verification run: named values, serialized witness
/// functions, free-form notes, and the verdict. Reports are deterministic
/// given the kernel, the exponents, and the configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub theorem: u8,
    pub kernel: String,
    pub n: usize,
    pub p: PNorm,
    pub q: Option<PNorm>,
    pub values: Vec<(String, f64)>,
    pub witnesses: Vec<(String, Vec<f64>)>,
    pub notes: Vec<String>,
    /// The combined tolerance the verdict was judged against.
    pub tolerance: f64,
    pub verdict: Verdict,
}

impl TheoremReport {
    fn new(theorem: u8, kernel: &Kernel, n: usize, p: PNorm, q: Option<PNorm>) -> Self {
        TheoremReport {
            theorem,
            kernel: kernel_tag(kernel),
            n,
            p,
            q,
            values: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            tolerance: 0.0,
            verdict: Verdict::Fail,
        }
    }

    fn push(&mut self, name: &str, value: f64) {
        self.values.push((String::from(name), value));
    }

    fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    /// Looks up a named value; test and CLI convenience.
    pub fn value(&self, name: &str) -> Option<f64> {
        self.values.iter().find(|(k, _)| k == name).map(|&(_, v)| v)
    }
}

/// Short human-readable description of a kernel for report headers.
pub fn kernel_tag(kernel: &Kernel) -> String {
    let m = kernel.max_harmonic();
    match kernel.family() {
        ClosedForm::BernoulliR1 => format!("bernoulli r=1 M={m}"),
        ClosedForm::BernoulliR2 => format!("bernoulli r=2 M={m}"),
        ClosedForm::BernoulliHigher { r } => format!("bernoulli r={r} M={m}"),
        ClosedForm::Poisson { rho } => format!("poisson rho={rho} M={m}"),
        ClosedForm::None => format!("custom M={m}"),
    }
}

/// A generalized trigonometric polynomial τ = T ⊛ h: a scalar polynomial
/// convolved against a set-valued carrier. Materializing it runs the
/// set-valued convolution on the carrier's grid.
#[derive(Clone, Debug)]
pub struct SetTrigApproximant {
    poly: TrigPolynomial,
    carrier: SetValuedFunction,
}

impl SetTrigApproximant {
    pub fn new(poly: TrigPolynomial, carrier: SetValuedFunction) -> Self {
        SetTrigApproximant { poly, carrier }
    }

    pub fn poly(&self) -> &TrigPolynomial {
        &self.poly
    }

    pub fn carrier(&self) -> &SetValuedFunction {
        &self.carrier
    }

    /// Runs the convolution; every materialized value is a valid convex
    /// body on the carrier's grids.
    pub fn materialize(&self, conv: &mut dyn Convolver) -> Result<SetValuedFunction> {
        let samples = self.poly.sample(self.carrier.grid());
        set_convolution(&samples, &self.carrier, conv)
    }
}

/// A materialized approximant with a ball of fixed radius added to every
/// value: the tube used for one-sided approximation from above.
#[derive(Clone, Debug)]
pub struct InflatedApproximant {
    base: SetTrigApproximant,
    radius: f64,
    plain: SetValuedFunction,
    inflated: SetValuedFunction,
}

impl InflatedApproximant {
    pub fn new(base: SetTrigApproximant, radius: f64, conv: &mut dyn Convolver) -> Result<Self> {
        if !(radius >= 0.0) {
            return Err(Error::InvalidArgument("inflation radius must be nonnegative"));
        }
        let plain = base.materialize(conv)?;
        let bodies = plain
            .bodies()
            .iter()
            .map(|b| b.inflate(radius))
            .collect::<Result<Vec<_>>>()?;
        let inflated = SetValuedFunction::new(plain.grid(), bodies)?;
        Ok(InflatedApproximant { base, radius, plain, inflated })
    }

    pub fn base(&self) -> &SetTrigApproximant {
        &self.base
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// The materialized approximant before inflation.
    pub fn plain(&self) -> &SetValuedFunction {
        &self.plain
    }

    /// The inflated tube; contains `plain` pointwise by construction.
    pub fn values(&self) -> &SetValuedFunction {
        &self.inflated
    }
}

/// δ in the chosen metric between K ⊛ g and T ⊛ g for a member g of the
/// class Φ_p, both convolutions materialized on g's grid.
pub fn linear_approx_error(
    kernel: &Kernel,
    poly: &TrigPolynomial,
    g: &SetValuedFunction,
    p: PNorm,
    conv: &mut dyn Convolver,
) -> Result<f64> {
    if !in_phi_p(g, p) {
        return Err(Error::NotInClass { norm_value: set_norm_lap(g, p) });
    }
    let k_samp = kernel.sample(g.grid());
    let t_samp = poly.sample(g.grid());
    conv_delta(&k_samp, &t_samp, g, p, conv)
}

/// The same distance with pre-sampled kernels and no class check.
fn conv_delta(
    k_samp: &ScalarPeriodicFunction,
    t_samp: &ScalarPeriodicFunction,
    g: &SetValuedFunction,
    metric: PNorm,
    conv: &mut dyn Convolver,
) -> Result<f64> {
    let kg = set_convolution(k_samp, g, conv)?;
    let tg = set_convolution(t_samp, g, conv)?;
    delta_lap(&kg, &tg, metric)
}

fn solve_best(kernel: &Kernel, n: usize, q: PNorm, grid: usize, tol: f64) -> Result<BestApprox> {
    match q {
        PNorm::One => best_l1(kernel, n, grid, tol),
        PNorm::Two => best_l2(kernel, n),
        PNorm::Inf => best_linf(kernel, n, grid, tol),
    }
}

/// ‖K − T‖_q as a Δ-weighted sum over the given grid. This is the exact
/// constant of the discrete Hölder chain on that grid.
fn residual_norm_disc(
    kernel: &Kernel,
    poly: &TrigPolynomial,
    grid: PeriodicGrid,
    q: PNorm,
) -> f64 {
    let k = kernel.sample(grid);
    let t = poly.sample(grid);
    let diff: Vec<f64> = k.values().iter().zip(t.values()).map(|(a, b)| a - b).collect();
    lp_of_samples(&diff, grid.step(), q)
}

fn exponent_rank(p: PNorm) -> u8 {
    match p {
        PNorm::One => 0,
        PNorm::Two => 1,
        PNorm::Inf => 2,
    }
}

/// Smallest length ≥ n_x divisible by 2n. On such a grid the square wave
/// with n sign changes per half-period is exactly antiperiodic under
/// n_s / (2n) index steps, which the discrete dual certificates rely on.
fn sweep_grid_len(n_x: usize, n: usize) -> usize {
    let block = 2 * n;
    let rem = n_x % block;
    if rem == 0 {
        n_x
    } else {
        n_x + block - rem
    }
}

/// The square-wave singleton carrier φₙ(· − shift)·{a}, rescaled so its
/// discrete ν_p sits just below one. The direction a is the first grid
/// direction, so singleton distances reduce to scalar distances exactly.
/// Returns the carrier and the applied scale.
fn sign_carrier(
    n: usize,
    shift: f64,
    grid: PeriodicGrid,
    xi: &Arc<DirectionGrid>,
    p: PNorm,
) -> Result<(SetValuedFunction, f64)> {
    let sign = SignFunction::new(n)?;
    let raw: Vec<f64> = (0..grid.len()).map(|j| sign.eval(grid.point(j) - shift)).collect();
    let nu = lp_of_samples(&raw, grid.step(), p);
    let scale = (1.0 - 1e-9) / nu;
    let scaled: Vec<f64> = raw.iter().map(|v| v * scale).collect();
    let f = ScalarPeriodicFunction::from_samples(grid, scaled)?;
    Ok((scalar_times_point(&f, xi.dir(0), xi)?, scale))
}

fn null_carrier(grid: PeriodicGrid, xi: &Arc<DirectionGrid>) -> Result<SetValuedFunction> {
    let origin = ConvexBody::singleton(xi, Point::ORIGIN)?;
    Ok(SetValuedFunction::constant(grid, origin))
}

fn scale_set_function(f: &SetValuedFunction, c: f64) -> Result<SetValuedFunction> {
    let bodies = f.bodies().iter().map(|b| b.scale(c)).collect();
    SetValuedFunction::new(f.grid(), bodies)
}

fn scale_kernel(kernel: &Kernel, c: f64) -> Result<Kernel> {
    let cos: Vec<f64> = (1..=kernel.max_harmonic()).map(|k| c * kernel.cos_coeff(k)).collect();
    let sin: Vec<f64> = (1..=kernel.max_harmonic()).map(|k| c * kernel.sin_coeff(k)).collect();
    Kernel::from_coeffs(c * kernel.a0(), cos, sin)
}

/// Singleton target s·{a} along the first grid direction.
fn scalar_target(
    s: &[f64],
    grid: PeriodicGrid,
    xi: &Arc<DirectionGrid>,
) -> Result<SetValuedFunction> {
    let f = ScalarPeriodicFunction::from_samples(grid, s.to_vec())?;
    scalar_times_point(&f, xi.dir(0), xi)
}

/// Largest Δ·|Σ_j s_j φₙ(x_j − θ)| over a θ scan. Each tested ψ = φₙ(·−θ)
/// has unit sup norm, and its samples are antiperiodic under n_s/(2n) index
/// steps, hence exactly orthogonal on the grid to every polynomial of order
/// below n. Every scan value is therefore a valid lower bound for the
/// discrete L₁ distance from s to that span; the scan maximizes tightness.
fn l1_dual_lower(s: &[f64], grid: PeriodicGrid, n: usize) -> f64 {
    let sign = SignFunction::new(n).expect("order is at least 1");
    let step = grid.step();
    let scan = 4 * grid.len();
    let mut best = 0.0;
    for t in 0..scan {
        let theta = PI * t as f64 / (n as f64 * scan as f64);
        let mut acc = 0.0;
        for (j, &sj) in s.iter().enumerate() {
            acc += sj * sign.eval(grid.point(j) - theta);
        }
        let value = (acc * step).abs();
        if value > best {
            best = value;
        }
    }
    best
}

/// One random approximant for the adversarial sweeps: a random polynomial
/// of admissible order against a random carrier of random overall size.
fn random_approximant(
    n: usize,
    grid: PeriodicGrid,
    xi: &Arc<DirectionGrid>,
    p: PNorm,
    rng: &mut SampleRng,
    conv: &mut dyn Convolver,
) -> Result<SetValuedFunction> {
    let poly = TrigPolynomial::random(n, 2.0 * rng.uniform(), rng)?;
    let h = random_phi_p(grid, xi, p, rng)?;
    let h = scale_set_function(&h, 2.0 * rng.uniform())?;
    set_convolution(&poly.sample(grid), &h, conv)
}

/// Upper-bound chain: for every sampled g in Φ_p, the distance between
/// K ⊛ g and T* ⊛ g is at most the residual norm of the matching solver.
/// Both branches are checked against residual norms taken on the sample
/// grid itself, so the inequality is exact in the discrete model; dense
/// solver errors are reported alongside. The square-wave carrier is added
/// to the sample set to confirm the bound is nearly attained.
pub fn verify_theorem1(
    kernel: &Kernel,
    n: usize,
    p: PNorm,
    cfg: &ExperimentConfig,
    conv: &mut dyn Convolver,
) -> Result<TheoremReport> {
    if p == PNorm::Two {
        return Err(Error::InvalidArgument("the sampled chain runs at p = 1 or p = inf"));
    }
    let (grid, xi) = cfg.grids()?;
    let q = p.conjugate();
    let mut report = TheoremReport::new(1, kernel, n, p, Some(q));
    let mut rng = SampleRng::from_seed(cfg.seed ^ 0x7431);

    // The uniform-metric branch compares against the best L_q polynomial,
    // the matched-metric branch against the best L_1 polynomial. For
    // p = inf the two coincide.
    let mean = best_l1(kernel, n, cfg.solver_grid, cfg.solver_tol)?;
    if !mean.certified {
        report.note(String::from("mean solver result is not certified"));
    }
    let uniform = if q == PNorm::One {
        None
    } else {
        match solve_best(kernel, n, q, cfg.solver_grid, cfg.solver_tol) {
            Ok(sol) => {
                if !sol.certified {
                    report.note(String::from("uniform-branch solver result is not certified"));
                }
                Some(sol)
            }
            Err(Error::InvalidArgument(msg)) => {
                report.note(format!("uniform branch skipped: {msg}"));
                None
            }
            Err(e) => return Err(e),
        }
    };

    let rhs_mean = residual_norm_disc(kernel, &mean.poly, grid, PNorm::One);
    let rhs_uniform = uniform.as_ref().map(|s| residual_norm_disc(kernel, &s.poly, grid, q));

    let k_samp = kernel.sample(grid);
    let mean_samp = mean.poly.sample(grid);
    let uniform_samp = uniform.as_ref().map(|s| s.poly.sample(grid));

    let mut samples: Vec<SetValuedFunction> = Vec::with_capacity(cfg.samples + 1);
    for _ in 0..cfg.samples {
        samples.push(random_phi_p(grid, &xi, p, &mut rng)?);
    }
    let adversarial_index = samples.len();
    samples.push(sign_carrier(n, 0.0, grid, &xi, p)?.0);

    let mut violations = 0usize;
    let mut max_mean = 0.0_f64;
    let mut max_uniform = 0.0_f64;
    let mut ratio_mean = 0.0_f64;
    let mut ratio_uniform = 0.0_f64;
    let mut adversarial_ratio = 0.0_f64;
    for (i, g) in samples.iter().enumerate() {
        let lhs = conv_delta(&k_samp, &mean_samp, g, p, conv)?;
        if lhs > rhs_mean + SWEEP_SLACK {
            violations += 1;
        }
        max_mean = max_mean.max(lhs);
        let r = lhs / rhs_mean.max(1e-300);
        ratio_mean = ratio_mean.max(r);
        if i == adversarial_index {
            adversarial_ratio = r;
        }
        if let (Some(ts), Some(rhs)) = (&uniform_samp, rhs_uniform) {
            let lhs = conv_delta(&k_samp, ts, g, PNorm::Inf, conv)?;
            if lhs > rhs + SWEEP_SLACK {
                violations += 1;
            }
            max_uniform = max_uniform.max(lhs);
            ratio_uniform = ratio_uniform.max(lhs / rhs.max(1e-300));
        }
    }

    report.push("samples", samples.len() as f64);
    report.push("violations", violations as f64);
    report.push("rhs mean branch (solver)", mean.error);
    report.push("rhs mean branch (grid)", rhs_mean);
    report.push("max delta mean branch", max_mean);
    report.push("max ratio mean branch", ratio_mean);
    report.push("square-wave ratio", adversarial_ratio);
    if let (Some(sol), Some(rhs)) = (&uniform, rhs_uniform) {
        report.push("rhs uniform branch (solver)", sol.error);
        report.push("rhs uniform branch (grid)", rhs);
        report.push("max delta uniform branch", max_uniform);
        report.push("max ratio uniform branch", ratio_uniform);
    }
    report.tolerance = SWEEP_SLACK;
    let ratios_ok = ratio_mean <= 1.0 + 1e-3 && ratio_uniform <= 1.0 + 1e-3;
    let active = adversarial_ratio >= 0.5 - 1e-3;
    report.verdict = if violations == 0 && ratios_ok && active {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// Equality of the class error with the square-wave convolution sup.
/// Upper route: the certified best L₁ error of the kernel. Lower route: an
/// independent scan of ‖K ⊛ φₙ‖_∞. An adversarial sweep then pits the
/// extremal target against random approximants with a discrete dual
/// certificate as the reference, watertight on the padded sweep grid.
pub fn verify_theorem2(
    kernel: &Kernel,
    n: usize,
    p: PNorm,
    cfg: &ExperimentConfig,
    conv: &mut dyn Convolver,
) -> Result<TheoremReport> {
    if p == PNorm::Two {
        // The equality is proved at p = 1 and p = inf only. The mean-square
        // analogue is an open question, so this branch reports both sides of
        // the conjectured identity without claiming a verdict and skips the
        // adversarial sweep entirely.
        let mut report = TheoremReport::new(2, kernel, n, p, None);
        let sol = best_l2(kernel, n)?;
        let sc = convolve_with_sign(kernel, &SignFunction::new(n)?);
        report.push("mean-square error", sol.error);
        report.push("sign convolution sup", sc.sup_norm());
        report.push("gap", (sol.error - sc.sup_norm()).abs());
        report.tolerance = EQUALITY_TOL + sc.truncation_tail();
        report.note(String::from(
            "conjectural: the mean-square case lies outside the proved statement",
        ));
        report.verdict = Verdict::NotApplicable;
        return Ok(report);
    }
    let mut report = TheoremReport::new(2, kernel, n, p, None);
    let mut rng = SampleRng::from_seed(cfg.seed ^ 0x7432);
    let sgrid = PeriodicGrid::new(sweep_grid_len(cfg.n_x, n))?;
    let xi = DirectionGrid::new(cfg.dim, cfg.n_xi)?;

    let mean = best_l1(kernel, n, cfg.solver_grid, cfg.solver_tol)?;
    let theta = match mean.certificate {
        Certificate::SignAgreement { theta, .. } => theta,
        _ => 0.0,
    };
    if !mean.certified {
        report.note(String::from(
            "sign-agreement certificate failed, the equality hypotheses are unmet",
        ));
        report.push("upper: certified mean error", mean.error);
        report.verdict = Verdict::NotApplicable;
        return Ok(report);
    }

    let sc = convolve_with_sign(kernel, &SignFunction::new(n)?);
    let upper = mean.error;
    let lower = sc.sup_norm();
    let tol = EQUALITY_TOL + sc.truncation_tail();
    let gap = (upper - lower).abs();

    // Extremal target of the sweep and its discrete lower reference.
    let (target, reference) = match p {
        PNorm::Inf => {
            // s = K ⊛ φₙ sampled on the sweep grid. Its extrema repeat with
            // alternating sign every n_s/(2n) steps, so the alternating
            // atomic certificate certifies max_j |s_j| as a lower bound on
            // the uniform distance to every competitor.
            let s = sc.sample(sgrid);
            let reference = s.max_abs();
            (s.values().to_vec(), reference)
        }
        _ => {
            // The witness carrier is the square wave aligned with the
            // residual's sign pattern, scaled into the unit ball of L₁;
            // its image under K is a shifted reflection of K ⊛ φₙ.
            let r_samp = kernel.sample(sgrid);
            let t_samp = mean.poly.sample(sgrid);
            let mut i0 = 0;
            let mut best = -1.0;
            for j in 0..sgrid.len() {
                let v = (r_samp.value(j) - t_samp.value(j)).abs();
                if v > best {
                    best = v;
                    i0 = j;
                }
            }
            let x0 = sgrid.point(i0);
            let sign = SignFunction::new(n)?;
            let witness: Vec<f64> =
                (0..sgrid.len()).map(|j| sign.eval(x0 - theta - sgrid.point(j))).collect();
            let nu = lp_of_samples(&witness, sgrid.step(), PNorm::One);
            let s: Vec<f64> =
                (0..sgrid.len()).map(|j| -sc.eval(sgrid.point(j) - x0 + theta) / nu).collect();
            let reference = l1_dual_lower(&s, sgrid, n);
            report.push("mean-case carrier norm", nu);
            (s, reference)
        }
    };
    let f = scalar_target(&target, sgrid, &xi)?;

    let mut min_margin = f64::INFINITY;
    for _ in 0..cfg.sweep {
        let tau = random_approximant(n, sgrid, &xi, p, &mut rng, conv)?;
        let dist = delta_lap(&f, &tau, p)?;
        min_margin = min_margin.min(dist - reference);
    }

    report.push("upper: certified mean error", upper);
    report.push("lower: square-wave convolution sup", lower);
    report.push("gap", gap);
    report.push("theta", theta);
    report.push("sweep size", cfg.sweep as f64);
    report.push("sweep reference (discrete dual)", reference);
    report.push("sweep min margin", min_margin);
    report.witnesses.push((String::from("extremal target samples"), target));
    report.tolerance = tol;
    report.verdict = if gap <= tol && min_margin >= -SWEEP_SLACK {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// Lower bound of the set-valued class error by scalar best approximation:
/// singleton-directed targets built from members of F_p keep the full
/// scalar error in the metric with exponent q ≤ p. Also checks the exact
/// singleton reduction, where the set distance and the scalar distance
/// agree to near machine precision.
pub fn verify_theorem3(
    kernel: &Kernel,
    n: usize,
    p: PNorm,
    q: PNorm,
    cfg: &ExperimentConfig,
    conv: &mut dyn Convolver,
) -> Result<TheoremReport> {
    if exponent_rank(q) > exponent_rank(p) {
        return Err(Error::InvalidArgument("the lower bound needs q at most p"));
    }
    let (grid, xi) = cfg.grids()?;
    let mut report = TheoremReport::new(3, kernel, n, p, Some(q));
    let mut rng = SampleRng::from_seed(cfg.seed ^ 0x7433);

    // Carriers with exactly representable images under K: the square wave
    // (via the term-wise convolution series), band-limited random
    // polynomials (via the spectral product), and the null carrier.
    let mut cases: Vec<(String, Vec<f64>, Kernel)> = Vec::new();
    {
        let sign = SignFunction::new(n)?;
        let raw: Vec<f64> = (0..grid.len()).map(|j| sign.eval(grid.point(j))).collect();
        let nu = lp_of_samples(&raw, grid.step(), p);
        let c = (1.0 - 1e-9) / nu;
        let kg = scale_kernel(&convolve_with_sign(kernel, &sign).to_kernel(), c)?;
        let s: Vec<f64> = (0..grid.len()).map(|j| kg.eval(grid.point(j))).collect();
        cases.push((String::from("square wave"), s, kg));
    }
    for i in 0..3 {
        let g = TrigPolynomial::random(3 * n + 1, 1.0, &mut rng)?;
        let raw = g.sample(grid);
        let nu = raw.lp_norm(p);
        let c = (1.0 - 1e-9) / nu;
        let kg = scale_kernel(&kernel.convolve(&g.to_kernel()), c)?;
        let s: Vec<f64> = (0..grid.len()).map(|j| kg.eval(grid.point(j))).collect();
        cases.push((format!("random polynomial {i}"), s, kg));
    }
    cases.push((
        String::from("null"),
        vec![0.0; grid.len()],
        Kernel::from_coeffs(0.0, Vec::new(), Vec::new())?,
    ));

    let per_case = (cfg.sweep / cases.len()).max(8);
    let mut min_margin = f64::INFINITY;
    for (name, s, kg) in &cases {
        let sol = solve_best(kg, n, q, cfg.solver_grid, cfg.solver_tol)?;
        let f = scalar_target(s, grid, &xi)?;
        let mut case_min = f64::INFINITY;
        for _ in 0..per_case {
            let tau = random_approximant(n, grid, &xi, p, &mut rng, conv)?;
            let dist = delta_lap(&f, &tau, q)?;
            case_min = case_min.min(dist - sol.error);
        }
        min_margin = min_margin.min(case_min);
        report.push(&format!("{name}: scalar error"), sol.error);
        report.push(&format!("{name}: sweep min margin"), case_min);
    }

    // Exact reduction: a singleton-directed approximant against a
    // singleton-directed target, set route versus scalar route.
    let (_, s0, _) = &cases[0];
    let f0 = scalar_target(s0, grid, &xi)?;
    let mut max_gap = 0.0_f64;
    for _ in 0..8 {
        let poly = TrigPolynomial::random(n, 1.0, &mut rng)?;
        let h = TrigPolynomial::random(3 * n + 1, 1.0, &mut rng)?;
        let h_samp = h.sample(grid);
        let carrier = scalar_times_point(&h_samp, xi.dir(0), &xi)?;
        let tau = set_convolution(&poly.sample(grid), &carrier, conv)?;
        let set_route = delta_lap(&f0, &tau, q)?;
        let u = crate::aumann::scalar_convolution(&poly.sample(grid), &h_samp, conv)?;
        let diff: Vec<f64> = s0.iter().zip(u.values()).map(|(a, b)| a - b).collect();
        let scalar_route = lp_of_samples(&diff, grid.step(), q);
        max_gap = max_gap.max((set_route - scalar_route).abs());
    }

    report.push("cases", cases.len() as f64);
    report.push("sweeps per case", per_case as f64);
    report.push("sweep min margin", min_margin);
    report.push("reduction max gap", max_gap);
    report.tolerance = LOOSE_TOL;
    report.verdict = if min_margin >= -LOOSE_TOL && max_gap <= 1e-10 {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// Witness-convolution sup for one competitor polynomial: the maximum of
/// |((K−T) ⊛ g)(x)| over the grid, where g is the dual witness for K−T in
/// L_q. By discrete Hölder this equals ‖K−T‖_q on the grid exactly, which
/// the runner exploits as an independently computed objective.
fn witness_sup(
    kernel: &Kernel,
    poly: &TrigPolynomial,
    q: PNorm,
    grid: PeriodicGrid,
    conv: &mut dyn Convolver,
) -> Result<(f64, f64, ScalarPeriodicFunction)> {
    let witness = dual_witness(kernel, poly, q, 0, grid)?;
    let k = kernel.sample(grid);
    let t = poly.sample(grid);
    let residual: Vec<f64> = k.values().iter().zip(t.values()).map(|(a, b)| a - b).collect();
    let mut out = vec![0.0; grid.len()];
    conv.circular(&residual, witness.g.values(), &mut out)?;
    let step = grid.step();
    let sup = out.iter().fold(0.0_f64, |m, v| m.max((v * step).abs()));
    Ok((sup, witness.value, witness.g))
}

/// Equality of the linear-approximation functional with the scalar best
/// approximation error: the upper route follows the Hölder chain at the
/// solver's polynomial, the lower route minimizes the witness sup over a
/// local search around it. Conjugate exponents required.
pub fn verify_theorem4(
    kernel: &Kernel,
    n: usize,
    p: PNorm,
    q: PNorm,
    cfg: &ExperimentConfig,
    conv: &mut dyn Convolver,
) -> Result<TheoremReport> {
    if q != p.conjugate() {
        return Err(Error::InvalidArgument("exponents must be conjugate"));
    }
    let (grid, xi) = cfg.grids()?;
    let mut report = TheoremReport::new(4, kernel, n, p, Some(q));
    let mut rng = SampleRng::from_seed(cfg.seed ^ 0x7434);
    // Doubled relative to the solver grid: the witness machinery samples at
    // the nodes, and a kernel jump sitting on a node under-counts the mean
    // norm at the solver's own resolution.
    let wgrid = PeriodicGrid::new(2 * cfg.solver_grid)?;

    let sol = solve_best(kernel, n, q, cfg.solver_grid, cfg.solver_tol)?;
    if !sol.certified {
        report.note(String::from("solver result is not certified"));
    }

    let (sup0, value0, witness0) = witness_sup(kernel, &sol.poly, q, wgrid, conv)?;

    // Local coordinate search from the solver's polynomial. The witness sup
    // of every competitor is its residual norm, so the minimum over the
    // search is attained at or near the starting point; a decrease below
    // the solver error beyond tolerance would flag non-convergence.
    let mut best_coeffs = sol.poly.coeff_vec();
    let mut best_sup = sup0;
    let mut evaluations = 1usize;
    for &step in &[1e-2, 1e-3] {
        for _pass in 0..2 {
            let mut improved = false;
            for k in 0..best_coeffs.len() {
                for dir in [1.0, -1.0] {
                    let mut coeffs = best_coeffs.clone();
                    coeffs[k] += dir * step;
                    let cand = TrigPolynomial::from_coeff_vec(n, &coeffs)?;
                    let (sup, _, _) = witness_sup(kernel, &cand, q, wgrid, conv)?;
                    evaluations += 1;
                    if sup < best_sup - 1e-12 {
                        best_sup = sup;
                        best_coeffs = coeffs;
                        improved = true;
                    }
                }
            }
            if !improved {
                break;
            }
        }
    }
    if best_sup < sol.error - EQUALITY_TOL {
        report.note(String::from("search found a competitor below the solver error"));
    }

    // Upper route on the experiment grid: sampled members of the class stay
    // within the discrete residual norm.
    let rhs_disc = residual_norm_disc(kernel, &sol.poly, grid, q);
    let k_samp = kernel.sample(grid);
    let t_samp = sol.poly.sample(grid);
    let mut max_delta = 0.0_f64;
    let mut upper_ok = true;
    for _ in 0..8 {
        let g = random_phi_p(grid, &xi, p, &mut rng)?;
        let d = conv_delta(&k_samp, &t_samp, &g, PNorm::Inf, conv)?;
        max_delta = max_delta.max(d);
        if d > rhs_disc + SWEEP_SLACK {
            upper_ok = false;
        }
    }

    let witness_gap = (sup0 - value0).abs();
    let functional_gap = (best_sup - sol.error).abs();
    report.push("E (solver)", sol.error);
    report.push("U (witness search)", best_sup);
    report.push("gap", functional_gap);
    report.push("witness sup at optimum", sup0);
    report.push("witness value at optimum", value0);
    report.push("witness identity gap", witness_gap);
    report.push("search evaluations", evaluations as f64);
    report.push("upper-path rhs (grid)", rhs_disc);
    report.push("upper-path max delta", max_delta);
    report.witnesses.push((String::from("dual witness samples"), witness0.values().to_vec()));
    report.tolerance = EQUALITY_TOL;
    report.verdict = if functional_gap <= EQUALITY_TOL && witness_gap <= WITNESS_TOL && upper_ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// One-sided approximation from above by an inflated tube: for every
/// sampled member, the inflated approximant contains K ⊛ g pointwise and
/// stays within twice the scalar error. The inflation radius is the larger
/// of the solver error and the residual norm on the sample grid, which
/// makes containment exact in the discrete model.
pub fn verify_theorem5(
    kernel: &Kernel,
    n: usize,
    p: PNorm,
    q: PNorm,
    cfg: &ExperimentConfig,
    conv: &mut dyn Convolver,
) -> Result<TheoremReport> {
    if q != p.conjugate() {
        return Err(Error::InvalidArgument("exponents must be conjugate"));
    }
    let (grid, xi) = cfg.grids()?;
    let mut report = TheoremReport::new(5, kernel, n, p, Some(q));
    let mut rng = SampleRng::from_seed(cfg.seed ^ 0x7435);

    let sol = solve_best(kernel, n, q, cfg.solver_grid, cfg.solver_tol)?;
    let rhs_disc = residual_norm_disc(kernel, &sol.poly, grid, q);
    let radius = sol.error.max(rhs_disc);
    let tol = 2.0 * (rhs_disc - sol.error).max(0.0) + 1e-3;
    let k_samp = kernel.sample(grid);

    let mut samples: Vec<SetValuedFunction> = Vec::with_capacity(cfg.samples + 2);
    samples.push(null_carrier(grid, &xi)?);
    samples.push(sign_carrier(n, 0.0, grid, &xi, p)?.0);
    for _ in 0..cfg.samples {
        samples.push(random_phi_p(grid, &xi, p, &mut rng)?);
    }

    let mut min_margin = f64::INFINITY;
    let mut worst = (0usize, 0usize);
    let mut max_error = 0.0_f64;
    let mut at_least_e = 0usize;
    for g in &samples {
        let kg = set_convolution(&k_samp, g, conv)?;
        let tube = InflatedApproximant::new(
            SetTrigApproximant::new(sol.poly.clone(), g.clone()),
            radius,
            conv,
        )?;
        for j in 0..grid.len() {
            let outer = tube.values().value(j);
            let inner = kg.value(j);
            for i in 0..xi.len() {
                let margin = outer.support(i) - inner.support(i);
                if margin < min_margin {
                    min_margin = margin;
                    worst = (j, i);
                }
            }
        }
        let err = delta_lap(&kg, tube.values(), PNorm::Inf)?;
        max_error = max_error.max(err);
        if err >= sol.error {
            at_least_e += 1;
        }
    }
    if min_margin < -CONTAINMENT_SLACK {
        let (j, i) = worst;
        let d = xi.dir(i);
        report.note(format!(
            "containment fails at x = {:.6}, xi = ({:.6}, {:.6})",
            grid.point(j),
            d.x,
            d.y,
        ));
    }

    report.push("E (solver)", sol.error);
    report.push("residual norm (grid)", rhs_disc);
    report.push("inflation radius", radius);
    report.push("containment min margin", min_margin);
    report.push("max one-sided error", max_error);
    report.push("error bound 2E + tol", 2.0 * sol.error + tol);
    report.push("samples at or above E", at_least_e as f64);
    report.push("samples", samples.len() as f64);
    report.tolerance = tol;
    report.verdict = if min_margin >= -CONTAINMENT_SLACK
        && max_error <= 2.0 * sol.error + tol
        && at_least_e >= 1
    {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aumann::DirectConvolver;

    fn small_config() -> ExperimentConfig {
        ExperimentConfig { samples: 20, sweep: 60, ..ExperimentConfig::default() }
    }

    #[test]
    fn sweep_grid_is_padded_to_a_multiple_of_twice_the_order() {
        assert_eq!(sweep_grid_len(64, 1), 64);
        assert_eq!(sweep_grid_len(64, 2), 64);
        assert_eq!(sweep_grid_len(64, 4), 64);
        assert_eq!(sweep_grid_len(64, 3), 66);
        assert_eq!(sweep_grid_len(60, 4), 64);
    }

    #[test]
    fn linear_error_is_zero_for_an_exact_truncation() {
        let kernel = Kernel::from_coeffs(0.4, vec![1.0, -0.5], vec![0.2, 0.0]).unwrap();
        let poly = TrigPolynomial::truncation_of(&kernel, 3).unwrap();
        let cfg = ExperimentConfig::default();
        let (grid, xi) = cfg.grids().unwrap();
        let mut rng = SampleRng::from_seed(11);
        let g = random_phi_p(grid, &xi, PNorm::Inf, &mut rng).unwrap();
        let mut conv = DirectConvolver;
        let err = linear_approx_error(&kernel, &poly, &g, PNorm::Inf, &mut conv).unwrap();
        assert_eq!(err, 0.0);
    }

    #[test]
    fn linear_error_vanishes_for_the_null_carrier() {
        let kernel = Kernel::bernoulli_default(2).unwrap();
        let poly = TrigPolynomial::zero(2).unwrap();
        let cfg = ExperimentConfig::default();
        let (grid, xi) = cfg.grids().unwrap();
        let g = null_carrier(grid, &xi).unwrap();
        let mut conv = DirectConvolver;
        let err = linear_approx_error(&kernel, &poly, &g, PNorm::One, &mut conv).unwrap();
        assert!(err.abs() < 1e-12);
    }

    #[test]
    fn linear_error_rejects_carriers_outside_the_class() {
        let kernel = Kernel::bernoulli_default(2).unwrap();
        let poly = TrigPolynomial::zero(2).unwrap();
        let cfg = ExperimentConfig::default();
        let (grid, xi) = cfg.grids().unwrap();
        let g = sign_carrier(1, 0.0, grid, &xi, PNorm::Inf).unwrap().0;
        let g = scale_set_function(&g, 3.0).unwrap();
        let mut conv = DirectConvolver;
        let err = linear_approx_error(&kernel, &poly, &g, PNorm::Inf, &mut conv);
        assert!(matches!(err, Err(Error::NotInClass { .. })));
    }

    #[test]
    fn square_wave_carrier_nearly_attains_the_discrete_bound() {
        // The adversarial carrier aligns the kernel residual with its own
        // sign, so the materialized distance lands within a fraction of a
        // percent of the grid-sampled mean norm of the residual. The grid
        // value itself sits below pi/4 by an O(step) jump-cell deficit.
        let kernel = Kernel::bernoulli_default(1).unwrap();
        let cfg = ExperimentConfig::default();
        let (grid, xi) = cfg.grids().unwrap();
        let sol = best_l1(&kernel, 2, cfg.solver_grid, cfg.solver_tol).unwrap();
        let rhs = residual_norm_disc(&kernel, &sol.poly, grid, PNorm::One);
        let g = sign_carrier(2, 0.0, grid, &xi, PNorm::Inf).unwrap().0;
        let mut conv = DirectConvolver;
        let err = linear_approx_error(&kernel, &sol.poly, &g, PNorm::Inf, &mut conv).unwrap();
        assert!(err <= rhs + 1e-9, "err = {err}, rhs = {rhs}");
        assert!(err >= 0.99 * rhs, "err = {err}, rhs = {rhs}");
        assert!((err - PI / 4.0).abs() < 6e-2, "err = {err}");
    }

    #[test]
    fn theorem1_holds_for_the_first_order_kernel() {
        let kernel = Kernel::bernoulli_default(1).unwrap();
        let cfg = small_config();
        let mut conv = DirectConvolver;
        let report = verify_theorem1(&kernel, 2, PNorm::Inf, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.value("violations"), Some(0.0));
        let rhs = report.value("rhs mean branch (solver)").unwrap();
        assert!((rhs - PI / 4.0).abs() < 2e-3, "rhs = {rhs}");
        let ratio = report.value("square-wave ratio").unwrap();
        assert!(ratio > 0.9, "ratio = {ratio}");
    }

    #[test]
    fn theorem1_mean_case_runs_both_branches_for_poisson() {
        let kernel = Kernel::poisson_default(0.5).unwrap();
        let cfg = ExperimentConfig { samples: 10, ..small_config() };
        let mut conv = DirectConvolver;
        let report = verify_theorem1(&kernel, 1, PNorm::One, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.value("rhs uniform branch (grid)").is_some());
    }

    #[test]
    fn theorem1_skips_the_uniform_branch_for_slow_tails() {
        // The first-order kernel has no summable tail, so the uniform
        // solver refuses it and only the mean branch is checked at p = 1.
        let kernel = Kernel::bernoulli_default(1).unwrap();
        let cfg = ExperimentConfig { samples: 10, ..small_config() };
        let mut conv = DirectConvolver;
        let report = verify_theorem1(&kernel, 1, PNorm::One, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.value("rhs uniform branch (grid)").is_none());
        assert!(report.notes.iter().any(|s| s.contains("uniform branch skipped")));
    }

    #[test]
    fn theorem2_matches_the_favard_value_for_order_one() {
        let kernel = Kernel::bernoulli_default(1).unwrap();
        let cfg = small_config();
        let mut conv = DirectConvolver;
        let report = verify_theorem2(&kernel, 1, PNorm::Inf, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        let upper = report.value("upper: certified mean error").unwrap();
        let lower = report.value("lower: square-wave convolution sup").unwrap();
        assert!((upper - PI / 2.0).abs() < 2e-3, "upper = {upper}");
        assert!((lower - PI / 2.0).abs() < 2e-3, "lower = {lower}");
        assert!(report.value("sweep min margin").unwrap() >= -SWEEP_SLACK);
    }

    #[test]
    fn theorem2_mean_case_for_the_second_order_kernel() {
        let kernel = Kernel::bernoulli_default(2).unwrap();
        let cfg = small_config();
        let mut conv = DirectConvolver;
        let report = verify_theorem2(&kernel, 2, PNorm::One, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        let upper = report.value("upper: certified mean error").unwrap();
        let expect = PI * PI / 32.0;
        assert!((upper - expect).abs() < 2e-3, "upper = {upper}");
        assert!(report.value("sweep min margin").unwrap() >= -SWEEP_SLACK);
    }

    #[test]
    fn theorem2_mean_square_case_is_reported_but_not_judged() {
        let kernel = Kernel::bernoulli_default(1).unwrap();
        let cfg = small_config();
        let mut conv = DirectConvolver;
        let report = verify_theorem2(&kernel, 1, PNorm::Two, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::NotApplicable);
        assert!(report.notes.iter().any(|s| s.contains("conjectural")));
        assert!(report.value("mean-square error").unwrap() > 0.0);
        assert!(report.value("sweep min margin").is_none());
    }

    #[test]
    fn theorem2_is_trivial_for_polynomial_kernels() {
        let kernel = Kernel::from_coeffs(0.3, vec![0.7], vec![-0.2]).unwrap();
        let cfg = small_config();
        let mut conv = DirectConvolver;
        let report = verify_theorem2(&kernel, 3, PNorm::Inf, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.value("upper: certified mean error").unwrap() < 1e-9);
        assert!(report.value("lower: square-wave convolution sup").unwrap() < 1e-12);
    }

    #[test]
    fn theorem3_scalar_lower_bound_and_reduction() {
        let kernel = Kernel::bernoulli_default(1).unwrap();
        let cfg = ExperimentConfig { sweep: 40, ..small_config() };
        let mut conv = DirectConvolver;
        let report =
            verify_theorem3(&kernel, 1, PNorm::Inf, PNorm::One, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.value("reduction max gap").unwrap() <= 1e-10);
        assert!(report.value("sweep min margin").unwrap() >= -LOOSE_TOL);
    }

    #[test]
    fn theorem3_rejects_exponents_out_of_range() {
        let kernel = Kernel::bernoulli_default(2).unwrap();
        let cfg = small_config();
        let mut conv = DirectConvolver;
        let r = verify_theorem3(&kernel, 1, PNorm::One, PNorm::Inf, &cfg, &mut conv);
        assert!(matches!(r, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn theorem4_recovers_the_scalar_error_through_witnesses() {
        let kernel = Kernel::bernoulli_default(1).unwrap();
        let cfg = small_config();
        let mut conv = DirectConvolver;
        let report =
            verify_theorem4(&kernel, 2, PNorm::Inf, PNorm::One, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        let u = report.value("U (witness search)").unwrap();
        assert!((u - PI / 4.0).abs() < 2e-3, "U = {u}");
        assert!(report.value("witness identity gap").unwrap() <= WITNESS_TOL);
    }

    #[test]
    fn theorem4_rejects_non_conjugate_exponents() {
        let kernel = Kernel::bernoulli_default(2).unwrap();
        let cfg = small_config();
        let mut conv = DirectConvolver;
        let r = verify_theorem4(&kernel, 1, PNorm::Inf, PNorm::Two, &cfg, &mut conv);
        assert!(matches!(r, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn theorem5_tube_contains_the_class_within_twice_the_error() {
        let kernel = Kernel::bernoulli_default(1).unwrap();
        let cfg = ExperimentConfig { samples: 15, ..small_config() };
        let mut conv = DirectConvolver;
        let report =
            verify_theorem5(&kernel, 2, PNorm::Inf, PNorm::One, &cfg, &mut conv).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.value("containment min margin").unwrap() >= -CONTAINMENT_SLACK);
        assert!(report.value("samples at or above E").unwrap() >= 1.0);
        let e = report.value("E (solver)").unwrap();
        assert!((e - PI / 4.0).abs() < 2e-3);
    }

    #[test]
    fn inflated_tube_contains_its_base_and_rejects_negative_radius() {
        let cfg = ExperimentConfig::default();
        let (grid, xi) = cfg.grids().unwrap();
        let mut rng = SampleRng::from_seed(5);
        let g = random_phi_p(grid, &xi, PNorm::Inf, &mut rng).unwrap();
        let poly = TrigPolynomial::random(2, 1.0, &mut rng).unwrap();
        let mut conv = DirectConvolver;
        let base = SetTrigApproximant::new(poly, g);
        let tube = InflatedApproximant::new(base.clone(), 0.25, &mut conv).unwrap();
        for j in 0..grid.len() {
            assert!(tube
                .values()
                .value(j)
                .contains_body(tube.plain().value(j), 1e-12)
                .unwrap());
        }
        assert!(InflatedApproximant::new(base, -0.1, &mut conv).is_err());
    }

    #[test]
    fn reports_are_deterministic_in_the_seed() {
        let kernel = Kernel::bernoulli_default(2).unwrap();
        let cfg = ExperimentConfig { samples: 6, sweep: 10, ..ExperimentConfig::default() };
        let mut conv = DirectConvolver;
        let a = verify_theorem1(&kernel, 2, PNorm::Inf, &cfg, &mut conv).unwrap();
        let b = verify_theorem1(&kernel, 2, PNorm::Inf, &cfg, &mut conv).unwrap();
        assert_eq!(a, b);
    }
}
