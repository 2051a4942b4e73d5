//! FFT-backed circular convolution satisfying the core engine trait.

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::Arc;

use svapprox_core::aumann::Convolver;
use svapprox_core::{Error, Result};

/// Circular convolution through forward and inverse FFTs, with plans cached
/// per length and the kernel transform cached across consecutive calls.
/// Set-valued convolutions sweep many direction columns against one kernel,
/// so the kernel cache removes half the transforms in the common case.
pub struct FftConvolver {
    planner: FftPlanner<f64>,
    plans: HashMap<usize, (Arc<dyn Fft<f64>>, Arc<dyn Fft<f64>>)>,
    kernel_cache: Option<(Vec<f64>, Vec<Complex<f64>>)>,
}

impl FftConvolver {
    pub fn new() -> Self {
        FftConvolver { planner: FftPlanner::new(), plans: HashMap::new(), kernel_cache: None }
    }

    fn plans_for(&mut self, len: usize) -> (Arc<dyn Fft<f64>>, Arc<dyn Fft<f64>>) {
        let Self { planner, plans, .. } = self;
        let (f, b) = plans.entry(len).or_insert_with(|| {
            (planner.plan_fft_forward(len), planner.plan_fft_inverse(len))
        });
        (f.clone(), b.clone())
    }

    fn kernel_transform(&mut self, kernel: &[f64]) -> Vec<Complex<f64>> {
        if let Some((cached, transform)) = &self.kernel_cache {
            if cached.as_slice() == kernel {
                return transform.clone();
            }
        }
        let (forward, _) = self.plans_for(kernel.len());
        let mut buf: Vec<Complex<f64>> =
            kernel.iter().map(|&v| Complex::new(v, 0.0)).collect();
        forward.process(&mut buf);
        self.kernel_cache = Some((kernel.to_vec(), buf.clone()));
        buf
    }
}

impl Default for FftConvolver {
    fn default() -> Self {
        Self::new()
    }
}

impl Convolver for FftConvolver {
    fn circular(&mut self, kernel: &[f64], values: &[f64], out: &mut [f64]) -> Result<()> {
        let n = kernel.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty convolution operands"));
        }
        if values.len() != n || out.len() != n {
            return Err(Error::GridMismatch);
        }
        let spectrum = self.kernel_transform(kernel);
        let (forward, inverse) = self.plans_for(n);
        let mut buf: Vec<Complex<f64>> =
            values.iter().map(|&v| Complex::new(v, 0.0)).collect();
        forward.process(&mut buf);
        for (b, k) in buf.iter_mut().zip(&spectrum) {
            *b *= k;
        }
        inverse.process(&mut buf);
        let scale = 1.0 / n as f64;
        for (o, b) in out.iter_mut().zip(&buf) {
            *o = b.re * scale;
        }
        Ok(())
    }
}
