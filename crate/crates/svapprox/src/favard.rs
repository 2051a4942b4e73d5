//! Regression table for the sharp approximation constants.
//!
//! For each (r, n) the row carries the certified mean-norm error, the
//! independently computed square-wave convolution sup, the reference value
//! K_r / n^r, and the absolute errors of both routes against it.

use std::env;
use std::f64::consts::PI;
use std::sync::Mutex;
use std::thread;

use anyhow::Result;
use svapprox_core::kernels::Kernel;
use svapprox_core::trig_approx::{best_l1, sign_convolution_sup};

/// The sharp constant for smoothness order r, via closed forms for the two
/// classical cases and the defining odd-harmonic series above that. The
/// series converges like (2j+1)^-(r+1), fast for r >= 3.
pub fn favard_constant(r: u32) -> f64 {
    match r {
        1 => PI / 2.0,
        2 => PI * PI / 8.0,
        _ => {
            let mut sum = 0.0;
            for j in 0..200_000u32 {
                let sign = if (j as u64 * (r as u64 + 1)) % 2 == 0 { 1.0 } else { -1.0 };
                sum += sign / ((2 * j + 1) as f64).powi(r as i32 + 1);
            }
            4.0 / PI * sum
        }
    }
}

#[derive(Clone, Debug)]
pub struct FavardRow {
    pub r: u32,
    pub n: usize,
    pub mean_error: f64,
    pub sign_sup: f64,
    pub reference: f64,
    pub mean_abs_err: f64,
    pub sup_abs_err: f64,
    pub certified: bool,
}

/// Worker count: SVAPPROX_THREADS if set, otherwise the machine's
/// parallelism, never more than the job count.
fn worker_count(jobs: usize) -> usize {
    let hw = thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let cap = env::var("SVAPPROX_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(hw);
    cap.min(jobs).max(1)
}

pub fn favard_rows(
    r_values: &[u32],
    n_values: &[usize],
    solver_grid: usize,
    solver_tol: f64,
) -> Result<Vec<FavardRow>> {
    let jobs: Vec<(u32, usize)> = r_values
        .iter()
        .flat_map(|&r| n_values.iter().map(move |&n| (r, n)))
        .collect();
    let next = Mutex::new(0usize);
    let results: Mutex<Vec<(usize, Result<FavardRow>)>> = Mutex::new(Vec::new());
    thread::scope(|scope| {
        for _ in 0..worker_count(jobs.len()) {
            scope.spawn(|| loop {
                let i = {
                    let mut guard = next.lock().expect("job counter");
                    let i = *guard;
                    if i >= jobs.len() {
                        break;
                    }
                    *guard += 1;
                    i
                };
                let (r, n) = jobs[i];
                let row = favard_row(r, n, solver_grid, solver_tol);
                results.lock().expect("result sink").push((i, row));
            });
        }
    });
    let mut collected = results.into_inner().expect("result sink");
    collected.sort_by_key(|(i, _)| *i);
    collected.into_iter().map(|(_, row)| row).collect()
}

fn favard_row(r: u32, n: usize, solver_grid: usize, solver_tol: f64) -> Result<FavardRow> {
    let kernel = Kernel::bernoulli_default(r)?;
    let sol = best_l1(&kernel, n, solver_grid, solver_tol)?;
    let sign_sup = sign_convolution_sup(&kernel, n)?;
    let reference = favard_constant(r) / (n as f64).powi(r as i32);
    Ok(FavardRow {
        r,
        n,
        mean_error: sol.error,
        sign_sup,
        reference,
        mean_abs_err: (sol.error - reference).abs(),
        sup_abs_err: (sign_sup - reference).abs(),
        certified: sol.certified,
    })
}

pub fn to_csv(rows: &[FavardRow]) -> String {
    let mut out =
        String::from("r,n,mean_error,sign_conv_sup,reference,mean_abs_err,sup_abs_err,certified\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{:.12},{:.12},{:.12},{:.3e},{:.3e},{}\n",
            row.r,
            row.n,
            row.mean_error,
            row.sign_sup,
            row.reference,
            row.mean_abs_err,
            row.sup_abs_err,
            row.certified,
        ));
    }
    out
}
