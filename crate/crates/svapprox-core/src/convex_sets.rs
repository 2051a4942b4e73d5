//! Convex compact sets in R^1 and R^2 represented by sampled support
//! functions.
//!
//! A body A is stored as the vector of support values h_A(ξ_i) = sup_{a ∈ A}
//! (a, ξ_i) over a fixed grid of unit directions. Minkowski combinations are
//! affine in h, the Hausdorff distance is the sup of |h_A - h_B| over the grid
//! (Hörmander's embedding), and membership or vertex queries go through the
//! half-plane intersection the support vector induces.
//!
//! Conventions:
//! - dimension m = 1 uses exactly the directions {+1, -1}; m = 2 uses an even
//!   number of equally spaced directions, stored so that the second half is
//!   the exact floating-point negation of the first;
//! - `ball(r)` takes the radius as its argument and is centered at the origin;
//! - a support vector must satisfy the width inequality h(ξ) + h(-ξ) >= 0 and,
//!   for m = 2, the discrete convexity inequality
//!   h_{i-1} + h_{i+1} >= 2 h_i cos Δ, both up to `CONVEXITY_TOL` relative to
//!   max(1, ||h||_∞).
//!
//! Grid error: for C² bodies the grid Hausdorff distance underestimates the
//! true one by at most (curvature radius + norm) · Δ²/8. For polytopes the
//! maximum of |h_A - h_B| can sit at a support kink, and only the Lipschitz
//! bound (||A|| + ||B||) · Δ/2 holds in general.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::ops::{Add, Mul, Neg, Sub};
// Required by the no_std build; under cfg(test) std's inherent f64 methods
// shadow the trait and the import goes unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Default direction count for m = 2.
pub const DEFAULT_N_XI: usize = 64;

/// Tolerance for the convexity and width invariants, relative to
/// max(1, ||h||_∞).
pub const CONVEXITY_TOL: f64 = 1e-9;

/// A point of the ambient space. For m = 1 the second coordinate is zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, c: f64) -> Point {
        Point::new(self.x * c, self.y * c)
    }
}

/// Fixed grid of unit directions, closed under negation with the index map
/// stored. Immutable after construction; share it through the `Arc`.
#[derive(Debug)]
pub struct DirectionGrid {
    m: usize,
    dirs: Vec<Point>,
    neg: Vec<usize>,
}

impl DirectionGrid {
    /// The m = 1 grid: directions +1 and -1.
    pub fn dim1() -> Arc<Self> {
        Arc::new(DirectionGrid {
            m: 1,
            dirs: vec![Point::new(1.0, 0.0), Point::new(-1.0, 0.0)],
            neg: vec![1, 0],
        })
    }

    /// The m = 2 grid of `n_xi` equally spaced directions; `n_xi` must be an
    /// even number >= 4. ξ_{i + n/2} is stored as the exact negation of ξ_i.
    pub fn dim2(n_xi: usize) -> Result<Arc<Self>> {
        if n_xi < 4 || n_xi % 2 != 0 {
            return Err(Error::InvalidArgument("n_xi must be even and at least 4"));
        }
        let half = n_xi / 2;
        let mut dirs = Vec::with_capacity(n_xi);
        for i in 0..half {
            let angle = TAU * i as f64 / n_xi as f64;
            dirs.push(Point::new(angle.cos(), angle.sin()));
        }
        for i in 0..half {
            dirs.push(-dirs[i]);
        }
        let neg = (0..n_xi).map(|i| (i + half) % n_xi).collect();
        Ok(Arc::new(DirectionGrid { m: 2, dirs, neg }))
    }

    pub fn new(m: usize, n_xi: usize) -> Result<Arc<Self>> {
        match m {
            1 => {
                if n_xi != 2 {
                    return Err(Error::InvalidArgument("m = 1 has exactly two directions"));
                }
                Ok(Self::dim1())
            }
            2 => Self::dim2(n_xi),
            _ => Err(Error::InvalidArgument("dimension must be 1 or 2")),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dir(&self, i: usize) -> Point {
        self.dirs[i]
    }

    pub fn dirs(&self) -> &[Point] {
        &self.dirs
    }

    /// Index j with ξ_j = -ξ_i exactly.
    pub fn negated(&self, i: usize) -> usize {
        self.neg[i]
    }

    /// Angular step between neighboring directions (m = 2).
    pub fn angle_step(&self) -> f64 {
        TAU / self.dirs.len() as f64
    }
}

impl PartialEq for DirectionGrid {
    // Grids are fully determined by (m, n_xi).
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.dirs.len() == other.dirs.len()
    }
}

fn same_grid(a: &DirectionGrid, b: &DirectionGrid) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::GridMismatch)
    }
}

/// A convex compact body given by its support values on a direction grid.
#[derive(Clone, Debug)]
pub struct ConvexBody {
    grid: Arc<DirectionGrid>,
    h: Vec<f64>,
}

impl ConvexBody {
    /// Builds a body from raw support values, validating the invariants.
    pub fn from_support(grid: &Arc<DirectionGrid>, h: Vec<f64>) -> Result<Self> {
        if h.len() != grid.len() {
            return Err(Error::InvalidArgument("support vector length must match the grid"));
        }
        let mut max_abs: f64 = 0.0;
        for &v in &h {
            if !v.is_finite() {
                return Err(Error::NonFinite("support values"));
            }
            max_abs = max_abs.max(v.abs());
        }
        let tol = CONVEXITY_TOL * max_abs.max(1.0);
        for i in 0..h.len() {
            let defect = h[i] + h[grid.negated(i)];
            if defect < -tol {
                return Err(Error::NotConvex { index: i, defect });
            }
        }
        if grid.m() == 2 {
            let n = h.len();
            let cos_step = grid.angle_step().cos();
            for i in 0..n {
                let prev = h[(i + n - 1) % n];
                let next = h[(i + 1) % n];
                let defect = prev + next - 2.0 * h[i] * cos_step;
                if defect < -tol {
                    return Err(Error::NotConvex { index: i, defect });
                }
            }
        }
        Ok(ConvexBody { grid: Arc::clone(grid), h })
    }

    /// The one-point body {p}; h(ξ) = (p, ξ).
    pub fn singleton(grid: &Arc<DirectionGrid>, p: Point) -> Result<Self> {
        if !p.is_finite() {
            return Err(Error::NonFinite("singleton point"));
        }
        let h = grid.dirs().iter().map(|&d| p.dot(d)).collect();
        Ok(ConvexBody { grid: Arc::clone(grid), h })
    }

    /// Origin-centered ball of radius r; for m = 1 the interval [-r, r].
    pub fn ball(grid: &Arc<DirectionGrid>, r: f64) -> Result<Self> {
        if !(r >= 0.0) || !r.is_finite() {
            return Err(Error::InvalidArgument("ball radius must be finite and nonnegative"));
        }
        Ok(ConvexBody { grid: Arc::clone(grid), h: vec![r; grid.len()] })
    }

    /// Support hull of a finite point set: h(ξ_i) = max_p (p, ξ_i).
    pub fn convexify(grid: &Arc<DirectionGrid>, points: &[Point]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("convexify needs at least one point"));
        }
        for p in points {
            if !p.is_finite() {
                return Err(Error::NonFinite("point cloud"));
            }
        }
        let h = grid
            .dirs()
            .iter()
            .map(|&d| {
                points
                    .iter()
                    .map(|&p| p.dot(d))
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .collect();
        Ok(ConvexBody { grid: Arc::clone(grid), h })
    }

    pub fn grid(&self) -> &Arc<DirectionGrid> {
        &self.grid
    }

    pub fn support(&self, i: usize) -> f64 {
        self.h[i]
    }

    pub fn support_values(&self) -> &[f64] {
        &self.h
    }

    /// Minkowski translate A + {p}.
    pub fn translate(&self, p: Point) -> Self {
        let h = self
            .grid
            .dirs()
            .iter()
            .zip(&self.h)
            .map(|(&d, &v)| v + p.dot(d))
            .collect();
        ConvexBody { grid: Arc::clone(&self.grid), h }
    }

    /// Minkowski sum with the r-ball: every support value grows by r.
    pub fn inflate(&self, r: f64) -> Result<Self> {
        if !(r >= 0.0) || !r.is_finite() {
            return Err(Error::InvalidArgument("inflation radius must be finite and nonnegative"));
        }
        let h = self.h.iter().map(|&v| v + r).collect();
        Ok(ConvexBody { grid: Arc::clone(&self.grid), h })
    }

    /// Scalar multiple c·A as a set; for c < 0 this is the reflection, via
    /// h_{cA}(ξ) = |c| h_A(sign(c) ξ).
    pub fn scale(&self, c: f64) -> Self {
        let n = self.h.len();
        let mut h = vec![0.0; n];
        if c >= 0.0 {
            for i in 0..n {
                h[i] = c * self.h[i];
            }
        } else {
            for i in 0..n {
                h[i] = -c * self.h[self.grid.negated(i)];
            }
        }
        ConvexBody { grid: Arc::clone(&self.grid), h }
    }

    /// λA + μB pointwise in support values. Grids must match.
    pub fn minkowski_combine(lambda: f64, a: &ConvexBody, mu: f64, b: &ConvexBody) -> Result<Self> {
        same_grid(&a.grid, &b.grid)?;
        let sa = a.scale(lambda);
        let sb = b.scale(mu);
        let h = sa.h.iter().zip(&sb.h).map(|(&x, &y)| x + y).collect();
        Ok(ConvexBody { grid: Arc::clone(&a.grid), h })
    }

    /// Hausdorff distance max_i |h_A(ξ_i) - h_B(ξ_i)|.
    pub fn hausdorff(&self, other: &ConvexBody) -> Result<f64> {
        same_grid(&self.grid, &other.grid)?;
        Ok(self
            .h
            .iter()
            .zip(&other.h)
            .map(|(&x, &y)| (x - y).abs())
            .fold(0.0, f64::max))
    }

    /// ||A|| = δ(A, {0}). By the width invariant this equals max_i h_i.
    pub fn norm(&self) -> f64 {
        self.h.iter().fold(0.0, |acc, &v| acc.max(v.abs()))
    }

    /// Whether B ⊆ A up to `tol` in support values.
    pub fn contains_body(&self, inner: &ConvexBody, tol: f64) -> Result<bool> {
        same_grid(&self.grid, &inner.grid)?;
        Ok(self
            .h
            .iter()
            .zip(&inner.h)
            .all(|(&ho, &hi)| hi <= ho + tol))
    }

    /// Whether p lies in the body up to `tol`: (p, ξ_i) <= h_i + tol for all i.
    pub fn contains_point(&self, p: Point, tol: f64) -> bool {
        self.grid
            .dirs()
            .iter()
            .zip(&self.h)
            .all(|(&d, &v)| p.dot(d) <= v + tol)
    }

    /// Extreme points of the induced polytope. For m = 2 these are the
    /// intersections of consecutive support lines; discrete convexity makes
    /// every one of them feasible for all other constraints. For m = 1 the two
    /// interval endpoints.
    pub fn vertices(&self) -> Vec<Point> {
        if self.grid.m() == 1 {
            let right = self.h[0];
            let left = -self.h[1];
            return vec![Point::new(left, 0.0), Point::new(right, 0.0)];
        }
        let n = self.h.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let j = (i + 1) % n;
            let di = self.grid.dir(i);
            let dj = self.grid.dir(j);
            let det = di.x * dj.y - dj.x * di.y; // sin Δ > 0
            out.push(Point::new(
                (self.h[i] * dj.y - self.h[j] * di.y) / det,
                (di.x * self.h[j] - dj.x * self.h[i]) / det,
            ));
        }
        out
    }

    /// A point of the body attaining max over the vertex set of (v, dir).
    /// `dir` need not be a grid direction.
    pub fn support_point(&self, dir: Point) -> Point {
        let vs = self.vertices();
        let mut best = vs[0];
        let mut best_val = best.dot(dir);
        for &v in &vs[1..] {
            let val = v.dot(dir);
            if val > best_val {
                best_val = val;
                best = v;
            }
        }
        best
    }
}
