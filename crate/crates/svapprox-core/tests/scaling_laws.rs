//! Rate regressions for the certified solvers: the classical sharp constants
//! divided by n^r for the smoothing kernels, monotone decay in the order
//! bound, and a closed-form cross-check for the mean-square solver.

use std::f64::consts::PI;

use svapprox_core::kernels::Kernel;
use svapprox_core::trig_approx::{best_l1, best_l2, sign_convolution_sup};

fn sharp_constant(r: u32) -> f64 {
    match r {
        1 => PI / 2.0,
        2 => PI * PI / 8.0,
        3 => PI.powi(3) / 24.0,
        _ => unreachable!(),
    }
}

#[test]
fn mean_error_follows_the_sharp_constant_rate() {
    for r in 1..=3u32 {
        let kernel = Kernel::bernoulli_default(r).unwrap();
        // The first-order kernel jumps, so its quadrature bias decays one
        // order slower; the fine grid keeps it below the check tolerance.
        let grid = if r == 1 { 8192 } else { 4096 };
        let mut last = f64::INFINITY;
        for n in [1usize, 2, 3, 4, 6, 8] {
            let sol = best_l1(&kernel, n, grid, 1e-9).unwrap();
            assert!(sol.certified, "r={r} n={n} lost its certificate");
            let reference = sharp_constant(r) / (n as f64).powi(r as i32);
            let err = (sol.error - reference).abs();
            assert!(err <= 2e-3, "r={r} n={n}: {:.6} vs {reference:.6}", sol.error);
            assert!(sol.error < last, "error must decay in n");
            last = sol.error;
        }
    }
}

#[test]
fn sign_convolution_sup_follows_the_same_rate() {
    for r in 1..=3u32 {
        let kernel = Kernel::bernoulli_default(r).unwrap();
        for n in [1usize, 2, 4, 8] {
            let sup = sign_convolution_sup(&kernel, n).unwrap();
            let reference = sharp_constant(r) / (n as f64).powi(r as i32);
            assert!(
                (sup - reference).abs() <= 2e-3,
                "r={r} n={n}: {sup:.6} vs {reference:.6}"
            );
        }
    }
}

#[test]
fn mean_square_error_matches_the_coefficient_tail() {
    let rho: f64 = 0.5;
    let m = 40;
    let kernel = Kernel::poisson(rho, m).unwrap();
    for n in [1usize, 2, 3, 5] {
        let sol = best_l2(&kernel, n).unwrap();
        // Coefficients are rho^k / pi, so the L2 tail over the period is
        // pi * sum_{k>=n} (rho^k / pi)^2, a geometric sum.
        let tail2 = rho.powi(2 * n as i32) * (1.0 - rho.powi(2 * (m - n + 1) as i32))
            / ((1.0 - rho * rho) * PI);
        assert!(
            (sol.error - tail2.sqrt()).abs() <= 1e-12,
            "n={n}: {:.9} vs {:.9}",
            sol.error,
            tail2.sqrt()
        );
    }
}
