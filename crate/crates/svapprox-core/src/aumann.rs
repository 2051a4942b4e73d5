//! Aumann integration and set-valued convolution through support functions.
//!
//! On the sampling grid the Aumann integral is per-direction quadrature,
//! ∫ f ↦ Δx Σ_j h_{f(x_j)}(ξ), and convolution with a scalar kernel K splits
//! by the sign of K:
//!
//!   h_{(K*g)(x)}(ξ) = Δx Σ_j [K⁺(x - x_j) h_{g(x_j)}(ξ)
//!                           + K⁻(x - x_j) h_{g(x_j)}(-ξ)],
//!
//! which is a positive combination of support functions, so the result
//! passes convexity validation by construction. Per direction this is two
//! circular convolutions; the `Convolver` trait lets callers swap the O(N²)
//! direct loop for an FFT-backed implementation without changing results
//! beyond roundoff.

use alloc::vec;
use alloc::vec::Vec;

use crate::convex_sets::ConvexBody;
use crate::set_functions::{ScalarPeriodicFunction, SetValuedFunction};
use crate::{Error, Result};

/// Circular convolution backend: out[i] = Σ_j kernel[(i - j) mod N] values[j].
///
/// `out` is overwritten. All three slices have the same length.
pub trait Convolver {
    fn circular(&mut self, kernel: &[f64], values: &[f64], out: &mut [f64]) -> Result<()>;
}

/// Direct O(N²) reference backend.
#[derive(Clone, Copy, Debug, Default)]
pub struct DirectConvolver;

impl Convolver for DirectConvolver {
    fn circular(&mut self, kernel: &[f64], values: &[f64], out: &mut [f64]) -> Result<()> {
        let n = kernel.len();
        if values.len() != n || out.len() != n {
            return Err(Error::InvalidArgument("convolution buffers must share one length"));
        }
        for i in 0..n {
            let mut acc = 0.0;
            // Split at j = i to keep the index i - j nonnegative.
            for j in 0..=i {
                acc += kernel[i - j] * values[j];
            }
            for j in (i + 1)..n {
                acc += kernel[n + i - j] * values[j];
            }
            out[i] = acc;
        }
        Ok(())
    }
}

/// Aumann integral over the period: per-direction quadrature of the support
/// values. The result is a convex body on the same direction grid.
pub fn aumann_integral(f: &SetValuedFunction) -> Result<ConvexBody> {
    let step = f.grid().step();
    let n_xi = f.xi_grid().len();
    let mut h = vec![0.0; n_xi];
    for body in f.bodies() {
        for (acc, &v) in h.iter_mut().zip(body.support_values()) {
            *acc += v;
        }
    }
    for v in &mut h {
        *v *= step;
    }
    ConvexBody::from_support(f.xi_grid(), h)
}

/// (K * g)(x_i) = Δx Σ_j K(x_i - x_j) g(x_j) for scalar g.
pub fn scalar_convolution(
    kernel: &ScalarPeriodicFunction,
    g: &ScalarPeriodicFunction,
    conv: &mut dyn Convolver,
) -> Result<ScalarPeriodicFunction> {
    if kernel.grid() != g.grid() {
        return Err(Error::GridMismatch);
    }
    let n = g.grid().len();
    let mut out = vec![0.0; n];
    conv.circular(kernel.values(), g.values(), &mut out)?;
    let step = g.grid().step();
    for v in &mut out {
        *v *= step;
    }
    ScalarPeriodicFunction::from_samples(g.grid(), out)
}

/// Set-valued convolution by sign splitting of the kernel samples.
pub fn set_convolution(
    kernel: &ScalarPeriodicFunction,
    g: &SetValuedFunction,
    conv: &mut dyn Convolver,
) -> Result<SetValuedFunction> {
    if kernel.grid() != g.grid() {
        return Err(Error::GridMismatch);
    }
    let n_x = g.grid().len();
    let n_xi = g.xi_grid().len();
    let step = g.grid().step();

    let mut kpos = vec![0.0; n_x];
    let mut kneg = vec![0.0; n_x];
    for (j, &v) in kernel.values().iter().enumerate() {
        if v >= 0.0 {
            kpos[j] = v;
        } else {
            kneg[j] = -v;
        }
    }
    let has_neg = kneg.iter().any(|&v| v > 0.0);

    // Column i holds h_{g(x_j)}(ξ_i) over j.
    let mut column = vec![0.0; n_x];
    let mut conv_pos = vec![0.0; n_x];
    let mut conv_neg = vec![0.0; n_x];
    // h_out[j][i], one support vector per grid point.
    let mut h_out = vec![vec![0.0; n_xi]; n_x];

    for i in 0..n_xi {
        for (j, body) in g.bodies().iter().enumerate() {
            column[j] = body.support(i);
        }
        conv.circular(&kpos, &column, &mut conv_pos)?;
        if has_neg {
            let i_neg = g.xi_grid().negated(i);
            for (j, body) in g.bodies().iter().enumerate() {
                column[j] = body.support(i_neg);
            }
            conv.circular(&kneg, &column, &mut conv_neg)?;
        }
        for j in 0..n_x {
            let extra = if has_neg { conv_neg[j] } else { 0.0 };
            h_out[j][i] = step * (conv_pos[j] + extra);
        }
    }

    let bodies = h_out
        .into_iter()
        .map(|h| ConvexBody::from_support(g.xi_grid(), h))
        .collect::<Result<Vec<_>>>()?;
    SetValuedFunction::new(g.grid(), bodies)
}
