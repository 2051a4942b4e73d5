//! Convolution kernels as truncated Fourier series, the square-wave sign
//! function, and their exact term-wise convolution.
//!
//! A kernel is K(t) = a₀/2 + Σ_{k=1..M} (a_k cos kt + b_k sin kt). The named
//! families keep their ideal closed form alongside the coefficients, which
//! gives pointwise reference values and rigorous truncation-tail bounds.
//!
//! The square wave φₙ(t) = sgn sin(nt) has the sine series
//! Σ_{j odd} (4/(πj)) sin(jnt), so K*φₙ collapses to the finite sum
//! Σ_{j odd, jn ≤ M} (4/j)(a_{jn} sin(jnx) − b_{jn} cos(jnx)); no quadrature
//! touches the discontinuities. K*φₙ is antiperiodic with antiperiod π/n, so
//! its sup-norm is scanned on [0, π/n] only.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
// Required by the no_std build; under cfg(test) std's inherent f64 methods
// shadow the trait and the import goes unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::set_functions::{PeriodicGrid, ScalarPeriodicFunction};
use crate::{Error, Result};

/// Default truncation order for the r = 1 Bernoulli kernel (1/k decay).
pub const DEFAULT_M_R1: usize = 4096;
/// Default truncation order for r ≥ 2 Bernoulli and Poisson kernels.
pub const DEFAULT_M_FAST: usize = 512;

/// Ideal-kernel family behind a truncated series, if any. Supplies closed
/// form values and coefficient tail bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClosedForm {
    /// Coefficients given directly; the series is the kernel, tail 0.
    None,
    /// Sawtooth (π − t)/(2π) on (0, 2π), value 0 at the jump.
    BernoulliR1,
    /// −(1/π)(π²/6 − πt/2 + t²/4) on [0, 2π].
    BernoulliR2,
    /// Bernoulli kernel of order r ≥ 3; tail bound only.
    BernoulliHigher { r: u32 },
    /// (1/2π)(1 − ρ²)/(1 − 2ρ cos t + ρ²).
    Poisson { rho: f64 },
}

/// 2π-periodic convolution kernel held as a truncated Fourier series.
#[derive(Clone, Debug)]
pub struct Kernel {
    a0: f64,
    cos_coeffs: Vec<f64>,
    sin_coeffs: Vec<f64>,
    family: ClosedForm,
}

impl Kernel {
    /// Kernel from explicit coefficients; `cos_coeffs[k-1]` is a_k. The two
    /// coefficient vectors must have one common length M (possibly zero).
    pub fn from_coeffs(a0: f64, cos_coeffs: Vec<f64>, sin_coeffs: Vec<f64>) -> Result<Self> {
        if cos_coeffs.len() != sin_coeffs.len() {
            return Err(Error::InvalidArgument("coefficient vectors must have equal length"));
        }
        if !a0.is_finite()
            || cos_coeffs.iter().chain(&sin_coeffs).any(|v| !v.is_finite())
        {
            return Err(Error::NonFinite("kernel coefficients"));
        }
        Ok(Kernel { a0, cos_coeffs, sin_coeffs, family: ClosedForm::None })
    }

    /// Bernoulli kernel D_r(t) = (1/π) Σ_{k=1..M} cos(kt − rπ/2)/k^r.
    /// The phase puts the whole weight on sines for odd r and cosines for
    /// even r, with alternating sign.
    pub fn bernoulli(r: u32, m: usize) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidArgument("Bernoulli order r must be at least 1"));
        }
        if m < 16 {
            return Err(Error::InvalidArgument("truncation order must be at least 16"));
        }
        let mut cos_coeffs = vec![0.0; m];
        let mut sin_coeffs = vec![0.0; m];
        for k in 1..=m {
            let amp = 1.0 / (PI * (k as f64).powi(r as i32));
            match r % 4 {
                1 => sin_coeffs[k - 1] = amp,
                2 => cos_coeffs[k - 1] = -amp,
                3 => sin_coeffs[k - 1] = -amp,
                _ => cos_coeffs[k - 1] = amp,
            }
        }
        let family = match r {
            1 => ClosedForm::BernoulliR1,
            2 => ClosedForm::BernoulliR2,
            _ => ClosedForm::BernoulliHigher { r },
        };
        Ok(Kernel { a0: 0.0, cos_coeffs, sin_coeffs, family })
    }

    /// Bernoulli kernel at the documented default truncation for its order.
    pub fn bernoulli_default(r: u32) -> Result<Self> {
        Self::bernoulli(r, if r == 1 { DEFAULT_M_R1 } else { DEFAULT_M_FAST })
    }

    /// Poisson kernel: a₀ = 1/π, a_k = ρ^k/π, so the kernel integrates to 1.
    pub fn poisson(rho: f64, m: usize) -> Result<Self> {
        if !(rho > 0.0 && rho < 1.0) {
            return Err(Error::InvalidArgument("Poisson parameter must lie in (0, 1)"));
        }
        if m < 1 {
            return Err(Error::InvalidArgument("truncation order must be at least 1"));
        }
        let cos_coeffs = (1..=m).map(|k| rho.powi(k as i32) / PI).collect();
        Ok(Kernel {
            a0: 1.0 / PI,
            cos_coeffs,
            sin_coeffs: vec![0.0; m],
            family: ClosedForm::Poisson { rho },
        })
    }

    pub fn poisson_default(rho: f64) -> Result<Self> {
        Self::poisson(rho, DEFAULT_M_FAST)
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    /// a_k for k ≥ 1; zero beyond the truncation order.
    pub fn cos_coeff(&self, k: usize) -> f64 {
        if k >= 1 && k <= self.cos_coeffs.len() {
            self.cos_coeffs[k - 1]
        } else {
            0.0
        }
    }

    /// b_k for k ≥ 1; zero beyond the truncation order.
    pub fn sin_coeff(&self, k: usize) -> f64 {
        if k >= 1 && k <= self.sin_coeffs.len() {
            self.sin_coeffs[k - 1]
        } else {
            0.0
        }
    }

    pub fn max_harmonic(&self) -> usize {
        self.cos_coeffs.len()
    }

    pub fn family(&self) -> ClosedForm {
        self.family
    }

    /// Value of the truncated series at t, by incremental angle rotation.
    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.5 * self.a0;
        let (step_sin, step_cos) = t.sin_cos();
        let mut cos_kt = step_cos;
        let mut sin_kt = step_sin;
        for k in 0..self.cos_coeffs.len() {
            acc += self.cos_coeffs[k] * cos_kt + self.sin_coeffs[k] * sin_kt;
            let c = cos_kt * step_cos - sin_kt * step_sin;
            sin_kt = sin_kt * step_cos + cos_kt * step_sin;
            cos_kt = c;
        }
        acc
    }

    /// Ideal-kernel value where the family has a closed form.
    pub fn closed_form_eval(&self, t: f64) -> Option<f64> {
        let mut t = t % (2.0 * PI);
        if t < 0.0 {
            t += 2.0 * PI;
        }
        match self.family {
            ClosedForm::BernoulliR1 => {
                Some(if t == 0.0 { 0.0 } else { (PI - t) / (2.0 * PI) })
            }
            ClosedForm::BernoulliR2 => {
                Some(-(PI * PI / 6.0 - PI * t / 2.0 + t * t / 4.0) / PI)
            }
            ClosedForm::Poisson { rho } => {
                let denom = 1.0 - 2.0 * rho * t.cos() + rho * rho;
                Some((1.0 - rho * rho) / (2.0 * PI * denom))
            }
            _ => None,
        }
    }

    pub fn sample(&self, grid: PeriodicGrid) -> ScalarPeriodicFunction {
        let values = (0..grid.len()).map(|j| self.eval(grid.point(j))).collect();
        ScalarPeriodicFunction::from_samples(grid, values)
            .expect("series values are finite")
    }

    /// Exact convolution of two truncated series: harmonic k of K*L is
    /// π(a_k a'_k − b_k b'_k) in cos and π(a_k b'_k + b_k a'_k) in sin, the
    /// constant term is 2π · (a₀/2)(a'₀/2).
    pub fn convolve(&self, other: &Kernel) -> Kernel {
        let m = self.max_harmonic().min(other.max_harmonic());
        let mut cos_coeffs = vec![0.0; m];
        let mut sin_coeffs = vec![0.0; m];
        for k in 1..=m {
            let (a, b) = (self.cos_coeff(k), self.sin_coeff(k));
            let (ap, bp) = (other.cos_coeff(k), other.sin_coeff(k));
            cos_coeffs[k - 1] = PI * (a * ap - b * bp);
            sin_coeffs[k - 1] = PI * (a * bp + b * ap);
        }
        Kernel {
            a0: PI * self.a0 * other.a0,
            cos_coeffs,
            sin_coeffs,
            family: ClosedForm::None,
        }
    }

    /// Upper bound on the sup-norm gap between this truncation and its ideal
    /// kernel's convolution with φₙ (sum of dropped term amplitudes). Zero
    /// for coefficient-defined kernels.
    fn sign_tail(&self, n: usize) -> f64 {
        let m = self.max_harmonic();
        let j_last_odd = {
            let j = m / n;
            if j == 0 { -1i64 } else if j % 2 == 1 { j as i64 } else { j as i64 - 1 }
        };
        let j0 = (j_last_odd + 2) as f64;
        match self.family {
            ClosedForm::None => 0.0,
            ClosedForm::BernoulliR1 => 4.0 / PI * odd_power_tail(2.0, j0) / n as f64,
            ClosedForm::BernoulliR2 => {
                4.0 / PI * odd_power_tail(3.0, j0) / (n as f64).powi(2)
            }
            ClosedForm::BernoulliHigher { r } => {
                4.0 / PI * odd_power_tail(r as f64 + 1.0, j0) / (n as f64).powi(r as i32)
            }
            ClosedForm::Poisson { rho } => {
                let rn = rho.powi(n as i32);
                4.0 / (PI * j0) * rn.powf(j0) / (1.0 - rn * rn)
            }
        }
    }
}

/// Σ over odd j ≥ j_start of j^{−s}, for s > 1. First 64 terms summed
/// directly, the rest by an Euler–Maclaurin estimate accurate far beyond the
/// use here (tail bounds and diagnostics).
fn odd_power_tail(s: f64, j_start: f64) -> f64 {
    let mut sum = 0.0;
    let mut j = j_start;
    for _ in 0..64 {
        sum += j.powf(-s);
        j += 2.0;
    }
    sum + j.powf(1.0 - s) / (2.0 * (s - 1.0)) + 0.5 * j.powf(-s) + s * j.powf(-s - 1.0) / 6.0
}

/// The square wave φₙ(t) = sgn sin(nt), with value 0 at its jumps (the
/// midpoint convention, matching the Fourier series value).
#[derive(Clone, Copy, Debug)]
pub struct SignFunction {
    n: usize,
}

impl SignFunction {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("sign function order must be at least 1"));
        }
        Ok(SignFunction { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eval(&self, t: f64) -> f64 {
        let s = (self.n as f64 * t).sin();
        // Snap roundoff at the jump points to the midpoint value.
        if s.abs() <= 1e-12 {
            0.0
        } else {
            s.signum()
        }
    }

    /// Jump locations in [0, 2π): kπ/n for k = 0..2n.
    pub fn jumps(&self) -> Vec<f64> {
        (0..2 * self.n).map(|k| k as f64 * PI / self.n as f64).collect()
    }

    pub fn sample(&self, grid: PeriodicGrid) -> ScalarPeriodicFunction {
        ScalarPeriodicFunction::from_fn(grid, |t| self.eval(t))
            .expect("sign values are finite")
    }
}

#[derive(Clone, Copy, Debug)]
struct SignTerm {
    /// Odd multiplier j; the term frequency is j·n.
    j: usize,
    freq: usize,
    cos_amp: f64,
    sin_amp: f64,
}

/// The exact finite series of K*φₙ with its sup-norm, argmax, and the
/// truncation tail inherited from the kernel family.
#[derive(Clone, Debug)]
pub struct SignConvolution {
    n: usize,
    terms: Vec<SignTerm>,
    tail: f64,
    sup: f64,
    arg_max: f64,
}

/// Builds K*φₙ term-wise and scans its sup-norm on one antiperiod.
pub fn convolve_with_sign(kernel: &Kernel, sign: &SignFunction) -> SignConvolution {
    let n = sign.n();
    let mut terms = Vec::new();
    let mut j = 1usize;
    while j * n <= kernel.max_harmonic() {
        let k = j * n;
        let amp = 4.0 / j as f64;
        let cos_amp = -amp * kernel.sin_coeff(k);
        let sin_amp = amp * kernel.cos_coeff(k);
        if cos_amp != 0.0 || sin_amp != 0.0 {
            terms.push(SignTerm { j, freq: k, cos_amp, sin_amp });
        }
        j += 2;
    }
    let mut sc = SignConvolution {
        n,
        terms,
        tail: kernel.sign_tail(n),
        sup: 0.0,
        arg_max: 0.0,
    };
    let (sup, arg) = sc.scan_sup();
    sc.sup = sup;
    sc.arg_max = arg;
    sc
}

impl SignConvolution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let (s, c) = (t.freq as f64 * x).sin_cos();
                t.cos_amp * c + t.sin_amp * s
            })
            .sum()
    }

    /// Value at x = u/n, evaluated by stepping a rotation through the odd
    /// multiples of u. O(j_max) per point with two trig calls total.
    fn eval_scaled(&self, u: f64) -> f64 {
        let (step_sin, step_cos) = (2.0 * u).sin_cos();
        let (mut sin_ju, mut cos_ju) = u.sin_cos();
        let mut j = 1usize;
        let mut acc = 0.0;
        for term in &self.terms {
            while j < term.j {
                let c = cos_ju * step_cos - sin_ju * step_sin;
                sin_ju = sin_ju * step_cos + cos_ju * step_sin;
                cos_ju = c;
                j += 2;
            }
            acc += term.cos_amp * cos_ju + term.sin_amp * sin_ju;
        }
        acc
    }

    /// Sup of |K*φₙ| over one antiperiod [0, π/n] in the scaled variable
    /// u = nx: one dense pass sized to the highest multiplier, then two
    /// shrinking local refinements around the best point.
    fn scan_sup(&self) -> (f64, f64) {
        let Some(last) = self.terms.last() else {
            return (0.0, 0.0);
        };
        let coarse = (8 * last.j).clamp(2048, 16384);
        let mut best_u = 0.0;
        let mut best = 0.0;
        for i in 0..=coarse {
            let u = PI * i as f64 / coarse as f64;
            let v = self.eval_scaled(u).abs();
            if v > best {
                best = v;
                best_u = u;
            }
        }
        let mut h = PI / coarse as f64;
        for _ in 0..2 {
            let center = best_u;
            for i in 0..=64 {
                let u = center - h + 2.0 * h * i as f64 / 64.0;
                let v = self.eval_scaled(u).abs();
                if v > best {
                    best = v;
                    best_u = u;
                }
            }
            h /= 16.0;
        }
        (best, best_u / self.n as f64)
    }

    pub fn sup_norm(&self) -> f64 {
        self.sup
    }

    /// Location in [0, π/n] where the scan attained the sup.
    pub fn arg_max(&self) -> f64 {
        self.arg_max
    }

    /// Sup-norm bound on the terms dropped by the kernel's truncation.
    pub fn truncation_tail(&self) -> f64 {
        self.tail
    }

    pub fn sample(&self, grid: PeriodicGrid) -> ScalarPeriodicFunction {
        ScalarPeriodicFunction::from_fn(grid, |x| self.eval(x))
            .expect("series values are finite")
    }

    /// The same finite series repackaged as a kernel (for feeding the
    /// convolution back into solvers).
    pub fn to_kernel(&self) -> Kernel {
        let m = self.terms.last().map_or(0, |t| t.freq);
        let mut cos_coeffs = vec![0.0; m];
        let mut sin_coeffs = vec![0.0; m];
        for t in &self.terms {
            cos_coeffs[t.freq - 1] = t.cos_amp;
            sin_coeffs[t.freq - 1] = t.sin_amp;
        }
        Kernel { a0: 0.0, cos_coeffs, sin_coeffs, family: ClosedForm::None }
    }
}
