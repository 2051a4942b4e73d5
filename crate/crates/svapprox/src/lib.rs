//! IO companion to `svapprox-core`: an FFT convolution engine, kernel spec
//! parsing, JSON/CSV report formats, the sharp-constant regression table,
//! and the command-line front end.

pub mod cli;
pub mod favard;
pub mod fft;
pub mod kernel_spec;
pub mod report;

pub use fft::FftConvolver;
