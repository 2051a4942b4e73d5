//! Calculus of set-valued 2π-periodic functions and their approximation by
//! generalized trigonometric polynomials.
//!
//! Convex compact sets in R^1 and R^2 are represented by support-function
//! samples on a fixed direction grid; set-valued functions are grids of such
//! bodies over a uniform partition of the period. On top of that sit Aumann
//! integration, set-valued convolution against scalar kernels, best scalar
//! approximation in L1 / L2 / sup norm, and experiment runners that check the
//! resulting error identities and bounds numerically.
//!
//! The crate is `no_std` + alloc; float transcendentals come from `libm` via
//! `num_traits::Float`. IO, serialization and the spectral convolution engine
//! live in the companion `svapprox` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod aumann;
pub mod convex_sets;
pub mod kernels;
pub mod set_functions;
pub mod theorems;
pub mod trig_approx;

mod linalg;
mod rng;

pub use rng::SampleRng;

use core::fmt;

/// Errors reported by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter was outside the supported range.
    InvalidArgument(&'static str),
    /// Two operands were built over different direction or period grids.
    GridMismatch,
    /// A sample vector or coefficient contained NaN or infinity.
    NonFinite(&'static str),
    /// Support values violate the discrete convexity or width invariant.
    NotConvex { index: usize, defect: f64 },
    /// A function failed the unit-class membership test it was required to pass.
    NotInClass { norm_value: f64 },
    /// A linear system inside a solver was numerically singular.
    SingularSystem(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
            Error::GridMismatch => write!(f, "operands use different grids"),
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Error::NotConvex { index, defect } => write!(
                f,
                "support vector is not convex at direction {index} (defect {defect:e})"
            ),
            Error::NotInClass { norm_value } => {
                write!(f, "function is outside the requested unit class (norm {norm_value})")
            }
            Error::SingularSystem(sys) => write!(f, "singular linear system in {sys}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
