//! Deterministic signal processing: wavelets, zero-phase trapezoid
//! band-pass, STFT/ISTFT spectrograms, amplitude spectra, resampling.
//!
//! Everything here is a pure function of its inputs and freely
//! parallelizable across traces.

mod band;
mod fft;
mod filter;
mod resample;
mod spectrum;
mod stft;
mod wavelet;

pub use band::TrapezoidBand;
pub use filter::bandpass_trapezoid;
pub use resample::resample_log;
pub use spectrum::{amplitude_spectrum, Spectrum};
pub use stft::{istft, stft, Spectrogram, StftConfig};
pub use wavelet::ricker;

pub(crate) use fft::{fft_forward, fft_inverse};

use thiserror::Error;

/// Errors raised by the signal-processing layer.
#[derive(Debug, Error)]
pub enum DspError {
    #[error("band error: {0}")]
    Band(String),

    #[error("spectrogram error: {0}")]
    Spectrogram(String),

    #[error("reconstruction error: {0}")]
    Reconstruction(String),

    #[error("resample error: {0}")]
    Resample(String),

    #[error("invalid trace for dsp: {0}")]
    Trace(String),
}
