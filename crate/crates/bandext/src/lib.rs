//! Seismic bandwidth extension toolkit.
//!
//! The pipeline runs in five stages, each of which is usable on its own:
//!
//! 1. [`synth`] generates labeled synthetic seismic/well-log pairs from
//!    layered earth models (blocky sand, thin beds, shale).
//! 2. [`welltie`] scores seismic-well tie quality on amplitude and
//!    characterization standards and selects a training subset.
//! 3. [`cgan`] trains a conditional GAN that translates seismic-trace
//!    spectrograms into broadband-trace spectrograms, with an L1
//!    regularizer against the log target.
//! 4. [`inference`] draws ensembles of generator realizations per trace and
//!    reduces them to mean/std statistics or whole processed volumes.
//! 5. [`qc`] computes spectrum, sidelobe, band-consistency and blind-well
//!    metrics over the results.
//!
//! [`core`] holds the trace/pair/volume containers and the on-disk formats;
//! [`dsp`] the deterministic signal processing (trapezoid band-pass, STFT,
//! spectra, resampling); [`autodiff`] the reverse-mode tensor engine the GAN
//! is built on.
//!
//! Everything is deterministic given the configured seeds. With the default
//! `parallel` feature, data-parallel loops (pair generation, volume
//! processing, convolution inner loops) fan out over rayon; results are
//! byte-identical to the sequential build.

pub mod autodiff;
pub mod cgan;
pub mod core;
pub mod dsp;
pub mod inference;
pub mod qc;
pub mod seed;
pub mod synth;
pub mod welltie;

mod par;
mod stats;
