//! 2π-periodic scalar and set-valued functions sampled on a uniform grid.
//!
//! Sampling convention: x_j = 2π j / N_x for j = 0..N_x, so the rectangle
//! rule Δx Σ_j v_j is the trapezoid rule of the periodic extension. L_p norms
//! use the unnormalized measure on [0, 2π]: ||1||_1 = 2π, ||1||_2 = √(2π).
//!
//! A set-valued function stores one `ConvexBody` per grid point, all sharing
//! one direction grid. Distances between set-valued functions are L_p norms
//! of the pointwise Hausdorff distance curve.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::TAU;
// Required by the no_std build; under cfg(test) std's inherent f64 methods
// shadow the trait and the import goes unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::convex_sets::{ConvexBody, DirectionGrid, Point};
use crate::rng::SampleRng;
use crate::{Error, Result};

/// Default number of spatial samples per period.
pub const DEFAULT_N_X: usize = 64;

/// Uniform periodic grid on [0, 2π).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeriodicGrid {
    n: usize,
}

impl PeriodicGrid {
    pub fn new(n_x: usize) -> Result<Self> {
        if n_x < 4 {
            return Err(Error::InvalidArgument("periodic grid needs at least 4 samples"));
        }
        Ok(PeriodicGrid { n: n_x })
    }

    pub fn len(self) -> usize {
        self.n
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn step(self) -> f64 {
        TAU / self.n as f64
    }

    pub fn point(self, j: usize) -> f64 {
        TAU * j as f64 / self.n as f64
    }

    /// Folds a signed index into 0..N_x.
    pub fn wrap_index(self, j: i64) -> usize {
        let n = self.n as i64;
        (((j % n) + n) % n) as usize
    }
}

/// Exponent of an L_p norm over the period.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PNorm {
    One,
    Two,
    Inf,
}

impl PNorm {
    /// The Hölder conjugate: 1 ↔ ∞, 2 ↔ 2.
    pub fn conjugate(self) -> PNorm {
        match self {
            PNorm::One => PNorm::Inf,
            PNorm::Two => PNorm::Two,
            PNorm::Inf => PNorm::One,
        }
    }
}

/// Discrete L_p norm of a sample vector on the periodic grid.
pub(crate) fn lp_of_samples(values: &[f64], step: f64, p: PNorm) -> f64 {
    match p {
        PNorm::One => values.iter().map(|v| v.abs()).sum::<f64>() * step,
        PNorm::Two => (values.iter().map(|v| v * v).sum::<f64>() * step).sqrt(),
        PNorm::Inf => values.iter().fold(0.0, |acc, v| acc.max(v.abs())),
    }
}

/// Scalar 2π-periodic function given by its grid samples.
#[derive(Clone, Debug)]
pub struct ScalarPeriodicFunction {
    grid: PeriodicGrid,
    values: Vec<f64>,
}

impl ScalarPeriodicFunction {
    pub fn from_samples(grid: PeriodicGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidArgument("sample count must match the grid"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("scalar samples"));
        }
        Ok(ScalarPeriodicFunction { grid, values })
    }

    pub fn from_fn(grid: PeriodicGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = (0..grid.len()).map(|j| f(grid.point(j))).collect();
        Self::from_samples(grid, values)
    }

    pub fn grid(&self) -> PeriodicGrid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, j: usize) -> f64 {
        self.values[j]
    }

    pub fn lp_norm(&self, p: PNorm) -> f64 {
        lp_of_samples(&self.values, self.grid.step(), p)
    }

    pub fn max_abs(&self) -> f64 {
        self.lp_norm(PNorm::Inf)
    }
}

/// Set-valued 2π-periodic function: one convex body per grid point.
#[derive(Clone, Debug)]
pub struct SetValuedFunction {
    grid: PeriodicGrid,
    xi_grid: Arc<DirectionGrid>,
    bodies: Vec<ConvexBody>,
}

impl SetValuedFunction {
    pub fn new(grid: PeriodicGrid, bodies: Vec<ConvexBody>) -> Result<Self> {
        if bodies.len() != grid.len() {
            return Err(Error::InvalidArgument("body count must match the grid"));
        }
        let xi_grid = Arc::clone(bodies[0].grid());
        if bodies.iter().any(|b| **b.grid() != *xi_grid) {
            return Err(Error::GridMismatch);
        }
        Ok(SetValuedFunction { grid, xi_grid, bodies })
    }

    pub fn from_fn(
        grid: PeriodicGrid,
        f: impl Fn(f64) -> Result<ConvexBody>,
    ) -> Result<Self> {
        let bodies = (0..grid.len())
            .map(|j| f(grid.point(j)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(grid, bodies)
    }

    pub fn constant(grid: PeriodicGrid, body: ConvexBody) -> Self {
        let bodies = (0..grid.len()).map(|_| body.clone()).collect();
        SetValuedFunction {
            grid,
            xi_grid: Arc::clone(body.grid()),
            bodies,
        }
    }

    pub fn grid(&self) -> PeriodicGrid {
        self.grid
    }

    pub fn xi_grid(&self) -> &Arc<DirectionGrid> {
        &self.xi_grid
    }

    pub fn value(&self, j: usize) -> &ConvexBody {
        &self.bodies[j]
    }

    pub fn bodies(&self) -> &[ConvexBody] {
        &self.bodies
    }

    /// The scalar curve x_j ↦ ||f(x_j)||.
    pub fn norm_curve(&self) -> ScalarPeriodicFunction {
        let values = self.bodies.iter().map(ConvexBody::norm).collect();
        ScalarPeriodicFunction { grid: self.grid, values }
    }
}

/// Δ_{L_p}(f, g): the L_p norm of x ↦ δ(f(x), g(x)).
pub fn delta_lap(f: &SetValuedFunction, g: &SetValuedFunction, p: PNorm) -> Result<f64> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch);
    }
    let mut dist = Vec::with_capacity(f.grid.len());
    for (a, b) in f.bodies.iter().zip(&g.bodies) {
        dist.push(a.hausdorff(b)?);
    }
    Ok(lp_of_samples(&dist, f.grid.step(), p))
}

/// ||f||_{L_p} = Δ_{L_p}(f, {0}).
pub fn set_norm_lap(f: &SetValuedFunction, p: PNorm) -> f64 {
    f.norm_curve().lp_norm(p)
}

/// Membership in the unit ball of the L_p metric, ||f||_{L_p} <= 1.
pub fn in_phi_p(f: &SetValuedFunction, p: PNorm) -> bool {
    set_norm_lap(f, p) <= 1.0
}

/// The singleton-valued function x ↦ φ(x) · {a}.
pub fn scalar_times_point(
    phi: &ScalarPeriodicFunction,
    a: Point,
    xi_grid: &Arc<DirectionGrid>,
) -> Result<SetValuedFunction> {
    let bodies = phi
        .values
        .iter()
        .map(|&c| ConvexBody::singleton(xi_grid, a * c))
        .collect::<Result<Vec<_>>>()?;
    SetValuedFunction::new(phi.grid, bodies)
}

/// Band-limited random shape: a moving center plus a positive radius curve,
/// both trigonometric polynomials of small degree. The body at x is the ball
/// of radius r(x) centered at c(x) (an interval for m = 1), so every sampled
/// body passes validation with strict convexity margin.
#[derive(Clone, Debug)]
pub struct RandomShape {
    center_cos: Vec<Point>,
    center_sin: Vec<Point>,
    center_mean: Point,
    radius_cos: Vec<f64>,
    radius_sin: Vec<f64>,
    radius_mean: f64,
    scale: f64,
}

impl RandomShape {
    const DEGREE: usize = 3;

    pub fn draw(rng: &mut SampleRng, m: usize) -> Self {
        let d = Self::DEGREE;
        let mut center_cos = Vec::with_capacity(d);
        let mut center_sin = Vec::with_capacity(d);
        let mut radius_cos = Vec::with_capacity(d);
        let mut radius_sin = Vec::with_capacity(d);
        let mut spread = 0.0;
        for k in 1..=d {
            let damp = 0.5 / k as f64;
            let cc = if m == 2 {
                Point::new(rng.symmetric() * damp, rng.symmetric() * damp)
            } else {
                Point::new(rng.symmetric() * damp, 0.0)
            };
            let cs = if m == 2 {
                Point::new(rng.symmetric() * damp, rng.symmetric() * damp)
            } else {
                Point::new(rng.symmetric() * damp, 0.0)
            };
            center_cos.push(cc);
            center_sin.push(cs);
            let rc = rng.symmetric() * 0.3 / k as f64;
            let rs = rng.symmetric() * 0.3 / k as f64;
            spread += rc.abs() + rs.abs();
            radius_cos.push(rc);
            radius_sin.push(rs);
        }
        let center_mean = if m == 2 {
            Point::new(rng.symmetric() * 0.3, rng.symmetric() * 0.3)
        } else {
            Point::new(rng.symmetric() * 0.3, 0.0)
        };
        RandomShape {
            center_cos,
            center_sin,
            center_mean,
            radius_cos,
            radius_sin,
            radius_mean: 0.05 + spread,
            scale: 1.0,
        }
    }

    fn center(&self, x: f64) -> Point {
        let mut c = self.center_mean;
        for k in 0..Self::DEGREE {
            let kx = (k + 1) as f64 * x;
            c = c + self.center_cos[k] * kx.cos() + self.center_sin[k] * kx.sin();
        }
        c * self.scale
    }

    fn radius(&self, x: f64) -> f64 {
        let mut r = self.radius_mean;
        for k in 0..Self::DEGREE {
            let kx = (k + 1) as f64 * x;
            r += self.radius_cos[k] * kx.cos() + self.radius_sin[k] * kx.sin();
        }
        r * self.scale
    }

    pub fn body_at(&self, x: f64, xi_grid: &Arc<DirectionGrid>) -> Result<ConvexBody> {
        let c = self.center(x);
        let r = self.radius(x);
        Ok(ConvexBody::ball(xi_grid, r)?.translate(c))
    }

    pub fn sample(
        &self,
        grid: PeriodicGrid,
        xi_grid: &Arc<DirectionGrid>,
    ) -> Result<SetValuedFunction> {
        SetValuedFunction::from_fn(grid, |x| self.body_at(x, xi_grid))
    }
}

/// Draws a random set-valued function with ||f||_{L_p} in [1 - 1e-6, 1].
pub fn random_phi_p(
    grid: PeriodicGrid,
    xi_grid: &Arc<DirectionGrid>,
    p: PNorm,
    rng: &mut SampleRng,
) -> Result<SetValuedFunction> {
    let mut shape = RandomShape::draw(rng, xi_grid.m());
    let raw = shape.sample(grid, xi_grid)?;
    let nu = set_norm_lap(&raw, p);
    // nu >= ||radius_mean||_{L_p} > 0, so the rescale is well defined.
    shape.scale = (1.0 - 5e-7) / nu;
    shape.sample(grid, xi_grid)
}

/// Selection s(x_j) ∈ f(x_j) built from a random convex combination of the
/// vertices, with weights redrawn at every grid point.
pub fn random_selection(f: &SetValuedFunction, rng: &mut SampleRng) -> Vec<Point> {
    f.bodies()
        .iter()
        .map(|body| {
            let vs = body.vertices();
            let mut weights = Vec::with_capacity(vs.len());
            let mut total = 0.0;
            for _ in 0..vs.len() {
                let w = rng.uniform();
                total += w;
                weights.push(w);
            }
            if total <= 0.0 {
                return vs[0];
            }
            let mut p = Point::ORIGIN;
            for (v, w) in vs.iter().zip(&weights) {
                p = p + *v * (w / total);
            }
            p
        })
        .collect()
}

/// Selection attaining the support in one common direction at every point.
pub fn support_selection(f: &SetValuedFunction, dir: Point) -> Vec<Point> {
    f.bodies().iter().map(|b| b.support_point(dir)).collect()
}
