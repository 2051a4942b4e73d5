//! Best approximation by trigonometric polynomials of order below n, in the
//! L₁, L₂, and uniform norms, with per-norm optimality certificates.
//!
//! The approximant space has dimension 2n−1: a₀/2 plus harmonics 1..n−1.
//! Solvers:
//! - L₂: Fourier truncation; the error comes from the coefficient tail and
//!   the certificate checks discrete orthogonality of the residual on a grid
//!   fine enough to rule out aliasing.
//! - uniform: Remez exchange on the circle with a 2n-point alternating
//!   reference, run on a dense scan grid (so with a coarse grid it computes
//!   the discrete minimax on exactly those points).
//! - L₁: iteratively reweighted least squares with ε-continuation, certified
//!   after the fact by the sign-agreement condition: a phase θ for which
//!   (K − T)(x) and the square wave φₙ(x − θ) agree in sign away from the
//!   wave's jumps. That condition is what ties the L₁ error to ‖K*φₙ‖_∞.
//!
//! Dual witnesses realize ‖K − T‖_{L_q} as a convolution value against a
//! unit-norm conjugate function; on the sampling grid all three witness
//! identities are exact by construction.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
// Required by the no_std build; under cfg(test) std's inherent f64 methods
// shadow the trait and the import goes unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::kernels::{convolve_with_sign, ClosedForm, Kernel, SignFunction};
use crate::linalg::{solve_dense, solve_spd};
use crate::rng::SampleRng;
use crate::set_functions::{PNorm, PeriodicGrid, ScalarPeriodicFunction};
use crate::{Error, Result};

/// Margin tolerance of the sign-agreement certificate, relative to ‖K−T‖_∞.
pub const NN_STAR_TOL: f64 = 1e-3;

/// Trigonometric polynomial of order below n: a₀/2 + Σ_{k<n} a_k cos + b_k sin.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigPolynomial {
    n: usize,
    a0: f64,
    cos_coeffs: Vec<f64>,
    sin_coeffs: Vec<f64>,
}

impl TrigPolynomial {
    pub fn zero(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("order bound must be at least 1"));
        }
        Ok(TrigPolynomial {
            n,
            a0: 0.0,
            cos_coeffs: vec![0.0; n - 1],
            sin_coeffs: vec![0.0; n - 1],
        })
    }

    pub fn new(n: usize, a0: f64, cos_coeffs: Vec<f64>, sin_coeffs: Vec<f64>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("order bound must be at least 1"));
        }
        if cos_coeffs.len() != n - 1 || sin_coeffs.len() != n - 1 {
            return Err(Error::InvalidArgument("coefficient count must be order bound minus one"));
        }
        if !a0.is_finite()
            || cos_coeffs.iter().chain(&sin_coeffs).any(|v| !v.is_finite())
        {
            return Err(Error::NonFinite("polynomial coefficients"));
        }
        Ok(TrigPolynomial { n, a0, cos_coeffs, sin_coeffs })
    }

    /// The L₂ projection of a kernel: its series cut at order n−1.
    pub fn truncation_of(kernel: &Kernel, n: usize) -> Result<Self> {
        let cos_coeffs = (1..n).map(|k| kernel.cos_coeff(k)).collect();
        let sin_coeffs = (1..n).map(|k| kernel.sin_coeff(k)).collect();
        Self::new(n, kernel.a0(), cos_coeffs, sin_coeffs)
    }

    /// Random polynomial with 1/k-damped coefficients in [−scale, scale].
    pub fn random(n: usize, scale: f64, rng: &mut SampleRng) -> Result<Self> {
        let mut p = Self::zero(n)?;
        p.a0 = scale * rng.symmetric();
        for k in 1..n {
            p.cos_coeffs[k - 1] = scale * rng.symmetric() / k as f64;
            p.sin_coeffs[k - 1] = scale * rng.symmetric() / k as f64;
        }
        Ok(p)
    }

    /// Order bound n; harmonics strictly below it are representable.
    pub fn order_bound(&self) -> usize {
        self.n
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn cos_coeff(&self, k: usize) -> f64 {
        if k >= 1 && k < self.n {
            self.cos_coeffs[k - 1]
        } else {
            0.0
        }
    }

    pub fn sin_coeff(&self, k: usize) -> f64 {
        if k >= 1 && k < self.n {
            self.sin_coeffs[k - 1]
        } else {
            0.0
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.5 * self.a0;
        let (step_sin, step_cos) = x.sin_cos();
        let mut cos_kx = step_cos;
        let mut sin_kx = step_sin;
        for k in 0..self.cos_coeffs.len() {
            acc += self.cos_coeffs[k] * cos_kx + self.sin_coeffs[k] * sin_kx;
            let c = cos_kx * step_cos - sin_kx * step_sin;
            sin_kx = sin_kx * step_cos + cos_kx * step_sin;
            cos_kx = c;
        }
        acc
    }

    pub fn sample(&self, grid: PeriodicGrid) -> ScalarPeriodicFunction {
        ScalarPeriodicFunction::from_fn(grid, |x| self.eval(x))
            .expect("polynomial values are finite")
    }

    pub fn to_kernel(&self) -> Kernel {
        Kernel::from_coeffs(self.a0, self.cos_coeffs.clone(), self.sin_coeffs.clone())
            .expect("validated coefficients")
    }

    /// Flattened coefficients [a₀, a_1.., b_1..] for generic optimizers.
    pub fn coeff_vec(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(2 * self.n - 1);
        v.push(self.a0);
        v.extend_from_slice(&self.cos_coeffs);
        v.extend_from_slice(&self.sin_coeffs);
        v
    }

    pub fn from_coeff_vec(n: usize, v: &[f64]) -> Result<Self> {
        if n < 1 || v.len() != 2 * n - 1 {
            return Err(Error::InvalidArgument("coefficient vector must have length 2n - 1"));
        }
        Self::new(n, v[0], v[1..n].to_vec(), v[n..].to_vec())
    }
}

/// Optimality evidence attached to a solver result.
#[derive(Clone, Debug)]
pub enum Certificate {
    /// L₂: largest inner product of the residual with a basis function.
    Orthogonality { max_residual: f64 },
    /// Uniform: alternating reference of size `count` at level `level`;
    /// `deviation` is how far the scanned maximum exceeds the level.
    Alternation { count: usize, level: f64, deviation: f64 },
    /// L₁: sign agreement of the residual with φₙ(· − θ); `min_margin` is
    /// relative to ‖K−T‖_∞ and `excluded` counts jump-neighborhood points.
    SignAgreement { theta: f64, min_margin: f64, excluded: usize },
}

/// A best-approximation result with its certificate.
#[derive(Clone, Debug)]
pub struct BestApprox {
    pub poly: TrigPolynomial,
    pub error: f64,
    pub certified: bool,
    pub certificate: Certificate,
    pub iterations: usize,
}

/// L₂ best approximation: Fourier truncation. The error is the coefficient
/// tail, error² = π Σ_{k≥n} (a_k² + b_k²); the certificate re-checks
/// orthogonality of the residual on an alias-free grid.
pub fn best_l2(kernel: &Kernel, n: usize) -> Result<BestApprox> {
    let poly = TrigPolynomial::truncation_of(kernel, n)?;
    let mut tail = 0.0;
    for k in n..=kernel.max_harmonic() {
        let (a, b) = (kernel.cos_coeff(k), kernel.sin_coeff(k));
        tail += a * a + b * b;
    }
    let error = (PI * tail).sqrt();

    // Residual harmonics reach M; products with harmonics < n alias on grids
    // of size ≤ M + n, so go one power of two above.
    let n_cert = (kernel.max_harmonic() + n + 1).next_power_of_two().max(64);
    let grid = PeriodicGrid::new(n_cert)?;
    let step = grid.step();
    let mut residual = vec![0.0; n_cert];
    for j in 0..n_cert {
        let x = grid.point(j);
        residual[j] = kernel.eval(x) - poly.eval(x);
    }
    let mut max_inner = 0.0f64;
    for k in 0..n {
        let mut inner_cos = 0.0;
        let mut inner_sin = 0.0;
        for (j, &r) in residual.iter().enumerate() {
            let (s, c) = (k as f64 * grid.point(j)).sin_cos();
            inner_cos += r * c;
            inner_sin += r * s;
        }
        max_inner = max_inner.max((inner_cos * step).abs());
        if k > 0 {
            max_inner = max_inner.max((inner_sin * step).abs());
        }
    }
    let scale = error.max(1.0);
    Ok(BestApprox {
        poly,
        error,
        certified: max_inner <= 1e-10 * scale,
        certificate: Certificate::Orthogonality { max_residual: max_inner },
        iterations: 1,
    })
}

/// Kernel tail bound in the uniform norm: what the truncation can hide from
/// a sup-norm solver. `None` when the ideal kernel's coefficients are not
/// absolutely summable (order-1 Bernoulli), which rules out uniform-norm
/// approximation of the ideal kernel through the truncation.
pub fn uniform_tail(kernel: &Kernel) -> Option<f64> {
    let m = kernel.max_harmonic() as f64;
    match kernel.family() {
        ClosedForm::None => Some(0.0),
        ClosedForm::BernoulliR1 => None,
        ClosedForm::BernoulliR2 => Some(1.0 / (PI * m)),
        ClosedForm::BernoulliHigher { r } => {
            let rf = r as f64;
            Some(m.powf(1.0 - rf) / (PI * (rf - 1.0)))
        }
        ClosedForm::Poisson { rho } => Some(rho.powf(m + 1.0) / (PI * (1.0 - rho))),
    }
}

/// Uniform best approximation by Remez exchange over a scan grid of
/// `grid` points. With a coarse grid this is the discrete minimax on those
/// points; `tol` is the relative equioscillation gap accepted as converged.
pub fn best_linf(kernel: &Kernel, n: usize, grid: usize, tol: f64) -> Result<BestApprox> {
    if uniform_tail(kernel).is_none() {
        return Err(Error::InvalidArgument(
            "uniform approximation needs a summable coefficient tail",
        ));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("order bound must be at least 1"));
    }
    if grid < 8 * n || grid < 64 {
        return Err(Error::InvalidArgument("scan grid too coarse for the order bound"));
    }
    let scan = PeriodicGrid::new(grid)?;
    let values: Vec<f64> = (0..grid).map(|j| kernel.eval(scan.point(j))).collect();

    // Reference init: L₂ truncation residual's largest point, then 2n points
    // spaced π/n (the extrema pattern of cos(nx − phase)).
    let init = TrigPolynomial::truncation_of(kernel, n)?;
    let mut best_j = 0;
    let mut best_v = 0.0f64;
    for j in 0..grid {
        let r = values[j] - init.eval(scan.point(j));
        if r.abs() > best_v {
            best_v = r.abs();
            best_j = j;
        }
    }
    if best_v == 0.0 {
        // The kernel lies in the space; nothing to exchange.
        return Ok(BestApprox {
            poly: init,
            error: 0.0,
            certified: true,
            certificate: Certificate::Alternation { count: 2 * n, level: 0.0, deviation: 0.0 },
            iterations: 0,
        });
    }
    let x_star = scan.point(best_j);
    let dim = 2 * n;
    let mut refs: Vec<(f64, f64)> = (0..dim)
        .map(|i| {
            let t = (x_star + i as f64 * PI / n as f64) % (2.0 * PI);
            (t, if i % 2 == 0 { 1.0 } else { -1.0 })
        })
        .collect();
    refs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite reference points"));

    let mut poly = init;
    let mut level = 0.0;
    let max_iters = 40;
    let mut iterations = 0;
    let mut converged = false;
    let mut scan_max = best_v;
    let mut matrix = vec![0.0; dim * dim];
    let mut rhs = vec![0.0; dim];

    for iter in 0..max_iters {
        iterations = iter + 1;
        for (row, &(t, sigma)) in refs.iter().enumerate() {
            matrix[row * dim] = 0.5;
            for k in 1..n {
                let (s, c) = (k as f64 * t).sin_cos();
                matrix[row * dim + k] = c;
                matrix[row * dim + n - 1 + k] = s;
            }
            matrix[row * dim + dim - 1] = sigma;
            rhs[row] = kernel.eval(t);
        }
        if !solve_dense(&mut matrix, dim, &mut rhs) {
            // Degenerate reference; report the best polynomial so far,
            // flagged as non-certified.
            return Ok(BestApprox {
                poly,
                error: scan_max,
                certified: false,
                certificate: Certificate::Alternation {
                    count: dim,
                    level,
                    deviation: scan_max - level,
                },
                iterations,
            });
        }
        level = rhs[dim - 1];
        if level < 0.0 {
            level = -level;
            for r in refs.iter_mut() {
                r.1 = -r.1;
            }
        }
        poly = TrigPolynomial::new(
            n,
            rhs[0],
            rhs[1..n].to_vec(),
            rhs[n..dim - 1].to_vec(),
        )?;

        let residual: Vec<f64> = (0..grid)
            .map(|j| values[j] - poly.eval(scan.point(j)))
            .collect();
        scan_max = residual.iter().fold(0.0f64, |acc, r| acc.max(r.abs()));
        if scan_max <= level * (1.0 + tol) + 1e-15 {
            converged = true;
            break;
        }

        // One exchange point per arc between reference midpoints.
        let mids: Vec<f64> = (0..dim)
            .map(|i| {
                let a = refs[i].0;
                let b = if i + 1 < dim { refs[i + 1].0 } else { refs[0].0 + 2.0 * PI };
                0.5 * (a + b)
            })
            .collect();
        let arc_of = |x: f64| -> usize {
            // Arc i covers [mids[i-1], mids[i]) around refs[i] (cyclic).
            let lo = mids[dim - 1] - 2.0 * PI;
            let xx = if x < lo { x + 2.0 * PI } else { x };
            for i in 0..dim {
                let left = if i == 0 { lo } else { mids[i - 1] };
                if xx >= left && xx < mids[i] {
                    return i;
                }
            }
            0
        };
        let mut best_in_arc: Vec<(f64, f64)> = refs
            .iter()
            .map(|&(t, sigma)| {
                let r = kernel.eval(t) - poly.eval(t);
                (sigma * r, t)
            })
            .collect();
        for j in 0..grid {
            let x = scan.point(j);
            let i = arc_of(x);
            let v = refs[i].1 * residual[j];
            if v > best_in_arc[i].0 {
                best_in_arc[i] = (v, x);
            }
        }
        for (i, r) in refs.iter_mut().enumerate() {
            r.0 = best_in_arc[i].1;
        }
    }

    let deviation = scan_max - level;
    Ok(BestApprox {
        poly,
        error: scan_max,
        certified: converged,
        certificate: Certificate::Alternation { count: dim, level, deviation },
        iterations,
    })
}

/// Sign-agreement check of the residual K − T against φₙ(· − θ) on a fine
/// grid, excluding half a grid step around the square wave's jumps.
#[derive(Clone, Debug)]
pub struct NnStarReport {
    pub theta: f64,
    /// Worst included margin, relative to ‖K−T‖_∞.
    pub min_margin: f64,
    pub worst_x: f64,
    pub excluded: usize,
    pub pass: bool,
}

fn sign_margins(
    residual: &[f64],
    grid: PeriodicGrid,
    n: usize,
    theta: f64,
    sup: f64,
) -> (f64, f64, usize) {
    let step = grid.step();
    let half_period = PI / n as f64;
    let mut min_margin = f64::INFINITY;
    let mut worst_x = 0.0;
    let mut excluded = 0;
    for (j, &r) in residual.iter().enumerate() {
        let x = grid.point(j);
        let d = wrap_positive(x - theta, half_period);
        let dist = d.min(half_period - d);
        // The residual's zeros are pinned no better than the quadrature the
        // polynomial came from; two fine cells is half a quadrature cell
        // under the default wiring fine = 4 * grid.
        if dist < 2.0 * step {
            excluded += 1;
            continue;
        }
        let phi = if (n as f64 * (x - theta)).sin() >= 0.0 { 1.0 } else { -1.0 };
        let margin = r * phi / sup;
        if margin < min_margin {
            min_margin = margin;
            worst_x = x;
        }
    }
    (min_margin, worst_x, excluded)
}

fn wrap_positive(v: f64, period: f64) -> f64 {
    let r = v % period;
    if r < 0.0 {
        r + period
    } else {
        r
    }
}

/// Evaluates the sign-agreement condition at one phase θ.
pub fn check_nn_star(
    kernel: &Kernel,
    poly: &TrigPolynomial,
    n: usize,
    theta: f64,
    tol: f64,
    fine: usize,
) -> Result<NnStarReport> {
    if n < 1 {
        return Err(Error::InvalidArgument("order must be at least 1"));
    }
    let grid = PeriodicGrid::new(fine)?;
    let residual: Vec<f64> = (0..fine)
        .map(|j| kernel.eval(grid.point(j)) - poly.eval(grid.point(j)))
        .collect();
    let sup = residual.iter().fold(0.0f64, |acc, r| acc.max(r.abs()));
    if sup <= 1e-13 {
        // Zero residual agrees with any sign pattern.
        return Ok(NnStarReport {
            theta,
            min_margin: 0.0,
            worst_x: 0.0,
            excluded: 0,
            pass: true,
        });
    }
    let (min_margin, worst_x, excluded) = sign_margins(&residual, grid, n, theta, sup);
    Ok(NnStarReport {
        theta,
        min_margin,
        worst_x,
        excluded,
        pass: min_margin >= -tol,
    })
}

/// Searches θ over [0, π/n] (256-point grid plus one local refinement) for
/// the best sign-agreement margin.
pub fn certify_nn_star(
    kernel: &Kernel,
    poly: &TrigPolynomial,
    n: usize,
    tol: f64,
    fine: usize,
) -> Result<NnStarReport> {
    let grid = PeriodicGrid::new(fine)?;
    let residual: Vec<f64> = (0..fine)
        .map(|j| kernel.eval(grid.point(j)) - poly.eval(grid.point(j)))
        .collect();
    let sup = residual.iter().fold(0.0f64, |acc, r| acc.max(r.abs()));
    if sup <= 1e-13 {
        return Ok(NnStarReport {
            theta: 0.0,
            min_margin: 0.0,
            worst_x: 0.0,
            excluded: 0,
            pass: true,
        });
    }
    let half_period = PI / n as f64;
    let coarse = 256;
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0, 0usize);
    let mut thetas: Vec<f64> = (0..=coarse)
        .map(|i| half_period * i as f64 / coarse as f64)
        .collect();
    for pass in 0..2 {
        for &theta in &thetas {
            let (margin, worst, excluded) = sign_margins(&residual, grid, n, theta, sup);
            if margin > best.0 {
                best = (margin, theta, worst, excluded);
            }
        }
        if pass == 0 {
            // Refine around the best coarse phase.
            let h = half_period / coarse as f64;
            let center = best.1;
            thetas = (0..=32)
                .map(|i| center - h + 2.0 * h * i as f64 / 32.0)
                .collect();
        }
    }
    Ok(NnStarReport {
        theta: best.1,
        min_margin: best.0,
        worst_x: best.2,
        excluded: best.3,
        pass: best.0 >= -tol,
    })
}

/// L₁ best approximation by IRLS with ε-continuation, certified by the
/// sign-agreement search. `grid` is the quadrature grid for the objective;
/// `tol` is the coefficient-change convergence threshold.
pub fn best_l1(kernel: &Kernel, n: usize, grid: usize, tol: f64) -> Result<BestApprox> {
    if n < 1 {
        return Err(Error::InvalidArgument("order bound must be at least 1"));
    }
    if grid < 8 * n || grid < 64 {
        return Err(Error::InvalidArgument("quadrature grid too coarse for the order bound"));
    }
    let quad = PeriodicGrid::new(grid)?;
    let step = quad.step();
    // Midpoint nodes: a kernel with a jump on a grid point (the first-order
    // case at x = 0) would otherwise be sampled at the jump midpoint, which
    // under-counts the mean norm by O(step) instead of O(step^2).
    let half = 0.5 * step;
    let values: Vec<f64> = (0..grid).map(|j| kernel.eval(quad.point(j) + half)).collect();

    // Basis columns evaluated once: 0.5, cos kx, sin kx.
    let dim = 2 * n - 1;
    let mut basis = vec![0.0; grid * dim];
    for j in 0..grid {
        let x = quad.point(j) + half;
        basis[j * dim] = 0.5;
        for k in 1..n {
            let (s, c) = (k as f64 * x).sin_cos();
            basis[j * dim + k] = c;
            basis[j * dim + n - 1 + k] = s;
        }
    }

    let mut coeffs = TrigPolynomial::truncation_of(kernel, n)?.coeff_vec();
    let mut gram = vec![0.0; dim * dim];
    let mut rhs = vec![0.0; dim];
    let mut iterations = 0;
    let mut eps = 1e-2;
    let mut converged_solver = true;
    // Weiszfeld-type iterations converge linearly, and the final accuracy
    // of the residual's zero crossings (which the sign certificate reads)
    // is set by how far the inner loop is run, so the cap is generous.
    while eps >= 1e-8 {
        for _ in 0..60 {
            iterations += 1;
            gram.iter_mut().for_each(|v| *v = 0.0);
            rhs.iter_mut().for_each(|v| *v = 0.0);
            for j in 0..grid {
                let row = &basis[j * dim..(j + 1) * dim];
                let fitted: f64 = row.iter().zip(&coeffs).map(|(b, c)| b * c).sum();
                let r = values[j] - fitted;
                let w = 1.0 / (r * r + eps * eps).sqrt();
                for a in 0..dim {
                    let wa = w * row[a];
                    rhs[a] += wa * values[j];
                    for b in a..dim {
                        gram[a * dim + b] += wa * row[b];
                    }
                }
            }
            for a in 0..dim {
                for b in 0..a {
                    gram[a * dim + b] = gram[b * dim + a];
                }
            }
            let mut sol = rhs.clone();
            if !solve_spd(&mut gram, dim, &mut sol) {
                converged_solver = false;
                break;
            }
            let change = sol
                .iter()
                .zip(&coeffs)
                .map(|(s, c)| (s - c).abs())
                .fold(0.0f64, f64::max);
            coeffs.copy_from_slice(&sol);
            if change < tol * eps {
                break;
            }
        }
        if !converged_solver {
            break;
        }
        eps /= 10.0;
    }

    let poly = TrigPolynomial::from_coeff_vec(n, &coeffs)?;
    let mut error = 0.0;
    for j in 0..grid {
        let row = &basis[j * dim..(j + 1) * dim];
        let fitted: f64 = row.iter().zip(&coeffs).map(|(b, c)| b * c).sum();
        error += (values[j] - fitted).abs();
    }
    error *= step;

    let fine = (4 * grid).max(8192);
    let report = certify_nn_star(kernel, &poly, n, NN_STAR_TOL, fine)?;
    let pass = report.pass && converged_solver;
    Ok(BestApprox {
        poly,
        error,
        certified: pass,
        certificate: Certificate::SignAgreement {
            theta: report.theta,
            min_margin: report.min_margin,
            excluded: report.excluded,
        },
        iterations,
    })
}

/// Cross-check value for a certified L₁ result: ‖K*φₙ‖_∞ computed term-wise.
pub fn sign_convolution_sup(kernel: &Kernel, n: usize) -> Result<f64> {
    let sign = SignFunction::new(n)?;
    Ok(convolve_with_sign(kernel, &sign).sup_norm())
}

/// A unit-norm function realizing ‖K−T‖_{L_q} as a convolution value at one
/// grid point. All identities are exact in the discrete norms by
/// construction: pairing the residual with its own sign (q=1), with itself
/// normalized (q=2), or with a single-cell spike of unit discrete L₁ norm
/// (q=∞).
#[derive(Clone, Debug)]
pub struct DualWitness {
    pub g: ScalarPeriodicFunction,
    /// The convolution value (R*g)(x₀) on the grid.
    pub value: f64,
    /// ‖g‖_p in the discrete conjugate norm.
    pub norm: f64,
}

/// Builds the witness for the residual K − T at grid index x₀.
pub fn dual_witness(
    kernel: &Kernel,
    poly: &TrigPolynomial,
    q: PNorm,
    x0: usize,
    grid: PeriodicGrid,
) -> Result<DualWitness> {
    if x0 >= grid.len() {
        return Err(Error::InvalidArgument("witness index outside the grid"));
    }
    let n_x = grid.len();
    let step = grid.step();
    let residual: Vec<f64> = (0..n_x)
        .map(|j| {
            let x = grid.point(j);
            kernel.eval(x) - poly.eval(x)
        })
        .collect();
    // r_shift[j] = R(x₀ − t_j).
    let shifted: Vec<f64> = (0..n_x)
        .map(|j| residual[grid.wrap_index(x0 as i64 - j as i64)])
        .collect();

    let p = q.conjugate();
    let mut g = vec![0.0; n_x];
    match q {
        PNorm::One => {
            for (gj, &r) in g.iter_mut().zip(&shifted) {
                *gj = if r > 0.0 {
                    1.0
                } else if r < 0.0 {
                    -1.0
                } else {
                    0.0
                };
            }
        }
        PNorm::Two => {
            let norm = lp_discrete(&shifted, step, PNorm::Two);
            if norm > 0.0 {
                for (gj, &r) in g.iter_mut().zip(&shifted) {
                    *gj = r / norm;
                }
            }
        }
        PNorm::Inf => {
            let mut best = 0;
            for j in 1..n_x {
                if shifted[j].abs() > shifted[best].abs() {
                    best = j;
                }
            }
            if shifted[best] != 0.0 {
                g[best] = shifted[best].signum() / step;
            }
        }
    }
    let value = g
        .iter()
        .zip(&shifted)
        .map(|(gj, r)| gj * r)
        .sum::<f64>()
        * step;
    let norm = lp_discrete(&g, step, p);
    Ok(DualWitness {
        g: ScalarPeriodicFunction::from_samples(grid, g)?,
        value,
        norm,
    })
}

fn lp_discrete(values: &[f64], step: f64, p: PNorm) -> f64 {
    match p {
        PNorm::One => values.iter().map(|v| v.abs()).sum::<f64>() * step,
        PNorm::Two => (values.iter().map(|v| v * v).sum::<f64>() * step).sqrt(),
        PNorm::Inf => values.iter().fold(0.0, |acc, v| acc.max(v.abs())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn harmonic_kernel(order: usize) -> Kernel {
        // K = cos(order·x).
        let mut a = vec![0.0; order];
        a[order - 1] = 1.0;
        Kernel::from_coeffs(0.0, a, vec![0.0; order]).unwrap()
    }

    #[test]
    fn polynomial_eval_and_round_trip() {
        let p = TrigPolynomial::new(3, 1.0, vec![0.5, -0.25], vec![0.0, 2.0]).unwrap();
        let x = 0.83;
        let direct = 0.5 + 0.5 * x.cos() - 0.25 * (2.0 * x).cos() + 2.0 * (2.0 * x).sin();
        assert!((p.eval(x) - direct).abs() < 1e-14);
        let k = p.to_kernel();
        assert!((k.eval(x) - direct).abs() < 1e-14);
        let v = p.coeff_vec();
        let q = TrigPolynomial::from_coeff_vec(3, &v).unwrap();
        assert_eq!(p, q);
        assert!(TrigPolynomial::new(3, 0.0, vec![1.0], vec![0.0, 0.0]).is_err());
        assert!(TrigPolynomial::zero(0).is_err());
    }

    #[test]
    fn l2_projection_fixes_the_subspace() {
        // K has harmonics up to 2; order bound 4 covers them all.
        let k = Kernel::from_coeffs(0.6, vec![1.0, -0.5], vec![0.25, 0.0]).unwrap();
        let r = best_l2(&k, 4).unwrap();
        assert!(r.error < 1e-15);
        assert!(r.certified);
        assert!((r.poly.cos_coeff(1) - 1.0).abs() < 1e-15);
        assert!((r.poly.sin_coeff(1) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn l2_error_of_pure_harmonic() {
        let k = harmonic_kernel(3);
        let r = best_l2(&k, 3).unwrap();
        assert!((r.error - PI.sqrt()).abs() < 1e-12);
        assert!(r.certified);
        let all: f64 = r.poly.coeff_vec().iter().map(|c| c.abs()).sum();
        assert!(all < 1e-15);
    }

    #[test]
    fn l2_error_of_bernoulli_two_tail() {
        let k = Kernel::bernoulli(2, 512).unwrap();
        let r = best_l2(&k, 2).unwrap();
        // error² = π Σ_{k≥2} 1/(πk²)² = (π⁴/90 − 1)/π.
        let expected = ((PI.powi(4) / 90.0 - 1.0) / PI).sqrt();
        assert!((r.error - expected).abs() < 1e-6, "{} vs {expected}", r.error);
        assert!(r.certified, "orthogonality defect: {:?}", r.certificate);
    }

    #[test]
    fn l2_errors_decrease_in_order() {
        let k = Kernel::bernoulli(2, 256).unwrap();
        let errors: Vec<f64> = (1..=4).map(|n| best_l2(&k, n).unwrap().error).collect();
        for w in errors.windows(2) {
            assert!(w[1] <= w[0] + 1e-15);
        }
    }

    #[test]
    fn remez_on_pure_harmonic_is_exact() {
        let k = harmonic_kernel(2);
        let r = best_linf(&k, 2, 1024, 1e-9).unwrap();
        assert!((r.error - 1.0).abs() < 1e-9, "error {}", r.error);
        assert!(r.certified);
        let coeff_mass: f64 = r.poly.coeff_vec().iter().map(|c| c.abs()).sum();
        assert!(coeff_mass < 1e-9, "polynomial should vanish, mass {coeff_mass}");
        if let Certificate::Alternation { count, deviation, .. } = r.certificate {
            assert_eq!(count, 4);
            assert!(deviation.abs() < 1e-9);
        } else {
            panic!("wrong certificate kind");
        }
    }

    #[test]
    fn remez_member_of_space_gives_zero() {
        let k = Kernel::from_coeffs(0.3, vec![1.0], vec![-0.5]).unwrap();
        let r = best_linf(&k, 4, 512, 1e-9).unwrap();
        assert!(r.error < 1e-12);
        assert!(r.certified);
    }

    #[test]
    fn remez_on_even_kernel_by_constants() {
        // Best constant approximation of D₂: half the range, error π/8.
        let k = Kernel::bernoulli(2, 512).unwrap();
        let r = best_linf(&k, 1, 4096, 1e-8).unwrap();
        assert!((r.error - PI / 8.0).abs() < 1e-3, "error {}", r.error);
        assert!(r.certified);
        // Optimal constant: midpoint of the range, a₀/2 = −π/24.
        assert!((0.5 * r.poly.a0() + PI / 24.0).abs() < 1e-3);
    }

    #[test]
    fn remez_rejects_nonsummable_tail() {
        let k = Kernel::bernoulli(1, 4096).unwrap();
        assert!(best_linf(&k, 1, 1024, 1e-8).is_err());
    }

    #[test]
    fn sign_agreement_direct_checks() {
        // K = sin x, T = 0: perfect agreement with φ₁ at θ = 0.
        let k = Kernel::from_coeffs(0.0, vec![0.0], vec![1.0]).unwrap();
        let t = TrigPolynomial::zero(1).unwrap();
        let at0 = check_nn_star(&k, &t, 1, 0.0, 1e-3, 4096).unwrap();
        assert!(at0.pass);
        assert!(at0.min_margin >= 0.0);
        // Shifting the wave by a quarter period breaks the agreement badly.
        let off = check_nn_star(&k, &t, 1, PI / 2.0, 1e-3, 4096).unwrap();
        assert!(!off.pass);
        assert!(off.min_margin < -0.5);
        // Zero residual passes for any phase.
        let trivially = check_nn_star(&k, &TrigPolynomial::truncation_of(&k, 2).unwrap(), 1, 1.0, 1e-3, 4096).unwrap();
        assert!(trivially.pass);
    }

    #[test]
    fn l1_solver_reaches_favard_error() {
        let k = Kernel::bernoulli(1, 4096).unwrap();
        let r = best_l1(&k, 1, 2048, 1e-10).unwrap();
        assert!((r.error - PI / 2.0).abs() < 5e-3, "error {}", r.error);
        assert!(r.certified, "certificate: {:?}", r.certificate);
        let r4 = best_l1(&k, 4, 2048, 1e-10).unwrap();
        assert!((r4.error - PI / 8.0).abs() < 5e-3, "error {}", r4.error);
        assert!(r4.certified);
    }

    #[test]
    fn l1_of_member_is_zero() {
        let k = Kernel::from_coeffs(0.2, vec![0.4, 0.1], vec![-0.3, 0.0]).unwrap();
        let r = best_l1(&k, 4, 512, 1e-10).unwrap();
        assert!(r.error < 1e-7, "error {}", r.error);
        assert!(r.certified);
    }

    #[test]
    fn l1_cross_check_against_sign_convolution() {
        let k = Kernel::bernoulli(2, 512).unwrap();
        let r = best_l1(&k, 2, 2048, 1e-10).unwrap();
        let sup = sign_convolution_sup(&k, 2).unwrap();
        assert!((r.error - sup).abs() < 2e-3, "{} vs {sup}", r.error);
        assert!((sup - PI * PI / 32.0).abs() < 1e-3);
    }

    #[test]
    fn witness_identities_are_grid_exact() {
        let grid = PeriodicGrid::new(256).unwrap();
        // Residual sin x: K = sin kernel, T = 0.
        let k = Kernel::from_coeffs(0.0, vec![0.0], vec![1.0]).unwrap();
        let t = TrigPolynomial::zero(1).unwrap();

        let w1 = dual_witness(&k, &t, PNorm::One, 0, grid).unwrap();
        assert!((w1.norm - 1.0).abs() < 1e-15);
        assert!((w1.value - 4.0).abs() < 1e-3, "value {}", w1.value);

        let w2 = dual_witness(&k, &t, PNorm::Two, 17, grid).unwrap();
        assert!((w2.norm - 1.0).abs() < 1e-12);
        assert!((w2.value - PI.sqrt()).abs() < 1e-12);

        let winf = dual_witness(&k, &t, PNorm::Inf, 5, grid).unwrap();
        assert!((winf.norm - 1.0).abs() < 1e-12);
        assert!((winf.value - 1.0).abs() < 1e-10, "value {}", winf.value);
    }

    #[test]
    fn witness_of_zero_residual() {
        let k = Kernel::from_coeffs(0.4, vec![1.0], vec![0.0]).unwrap();
        let t = TrigPolynomial::truncation_of(&k, 2).unwrap();
        let grid = PeriodicGrid::new(64).unwrap();
        let w = dual_witness(&k, &t, PNorm::One, 0, grid).unwrap();
        assert!(w.value.abs() < 1e-12);
        let w = dual_witness(&k, &t, PNorm::Inf, 0, grid).unwrap();
        assert!(w.value.abs() < 1e-12);
        assert!(w.norm < 1e-12);
    }

    #[test]
    fn norm_comparison_chain() {
        // ‖·‖₁ ≤ √(2π) ‖·‖₂ and ‖·‖₂ ≤ √(2π) ‖·‖_∞ transfer to the errors.
        let k = Kernel::bernoulli(2, 512).unwrap();
        for n in 1..=3 {
            let e1 = best_l1(&k, n, 2048, 1e-9).unwrap().error;
            let e2 = best_l2(&k, n).unwrap().error;
            let einf = best_linf(&k, n, 2048, 1e-8).unwrap().error;
            let period = 2.0 * PI;
            assert!(e1 <= period.sqrt() * e2 + 1e-9);
            assert!(e2 <= period.sqrt() * einf + 1e-9);
            assert!(e1 <= e2 * period.sqrt() + 1e-9 && e2 > 0.0);
        }
    }
}
