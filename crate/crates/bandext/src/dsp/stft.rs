//! Short-time Fourier transform and its least-squares overlap-add inverse.
//!
//! Complex values are carried as two real planes (real/imag) so that the
//! inverse is exact without phase retrieval. Traces are symmetrically
//! zero-padded so the frame count reaches the configured image width; the
//! padding is recorded and undone on inversion.

use rustfft::num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::{fft_forward, fft_inverse, DspError};
use crate::core::{Trace, TraceKind};

/// Spectrogram geometry.
///
/// Defaults give a 33x32 complex image per 512-sample trace: Hann window of
/// 64 samples, hop 16 (window/4, COLA-compliant), transform size 64, at
/// least 32 frames.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StftConfig {
    pub window_len: usize,
    pub hop: usize,
    pub n_fft: usize,
    /// Frame-count floor; shorter traces are padded up to this many frames.
    pub min_frames: usize,
}

impl Default for StftConfig {
    fn default() -> Self {
        Self {
            window_len: 64,
            hop: 16,
            n_fft: 64,
            min_frames: 32,
        }
    }
}

impl StftConfig {
    pub fn n_freqs(&self) -> usize {
        self.n_fft / 2 + 1
    }

    fn validate(&self) -> Result<(), DspError> {
        if self.hop == 0 || self.window_len == 0 {
            return Err(DspError::Spectrogram(
                "window_len and hop must be positive".into(),
            ));
        }
        if self.hop > self.window_len {
            return Err(DspError::Spectrogram(format!(
                "hop {} exceeds window_len {}",
                self.hop, self.window_len
            )));
        }
        if self.window_len > self.n_fft {
            return Err(DspError::Spectrogram(format!(
                "window_len {} exceeds n_fft {}",
                self.window_len, self.n_fft
            )));
        }
        Ok(())
    }
}

/// Periodic Hann window of length `len`.
fn hann(len: usize) -> Vec<f64> {
    (0..len)
        .map(|n| 0.5 - 0.5 * (2.0 * std::f64::consts::PI * n as f64 / len as f64).cos())
        .collect()
}

/// A two-plane (real/imag) time-frequency image of one trace.
///
/// Planes are `n_freqs x n_frames`, row-major by frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrogram {
    pub real_plane: Vec<f64>,
    pub imag_plane: Vec<f64>,
    pub n_freqs: usize,
    pub n_frames: usize,
    pub window_len: usize,
    pub hop: usize,
    pub n_fft: usize,
    pub original_len: usize,
    pub pad_left: usize,
    pub dt_ms: f64,
    pub t0_ms: f64,
    pub source_id: String,
    pub source_kind: TraceKind,
}

impl Spectrogram {
    pub fn at(&self, freq_bin: usize, frame: usize) -> (f64, f64) {
        let idx = freq_bin * self.n_frames + frame;
        (self.real_plane[idx], self.imag_plane[idx])
    }

    /// Sum of squared plane values with the half-spectrum bins re-weighted
    /// to count both spectrum halves (DC and Nyquist once, the rest twice).
    pub fn energy(&self) -> f64 {
        let mut total = 0.0;
        for f in 0..self.n_freqs {
            let twofold = f != 0 && !(self.n_fft % 2 == 0 && f == self.n_fft / 2);
            let w = if twofold { 2.0 } else { 1.0 };
            for t in 0..self.n_frames {
                let (re, im) = self.at(f, t);
                total += w * (re * re + im * im);
            }
        }
        total
    }
}

/// Hann-windowed STFT with symmetric zero-padding up to the configured
/// frame count.
pub fn stft(trace: &Trace, cfg: &StftConfig) -> Result<Spectrogram, DspError> {
    cfg.validate()?;
    let len = trace.len();
    let minimal = if len <= cfg.window_len {
        1
    } else {
        (len - cfg.window_len).div_ceil(cfg.hop) + 1
    };
    let n_frames = minimal.max(cfg.min_frames);
    let padded_len = (n_frames - 1) * cfg.hop + cfg.window_len;
    let pad = padded_len - len;
    let pad_left = pad / 2;

    let mut padded = vec![0.0; padded_len];
    padded[pad_left..pad_left + len].copy_from_slice(&trace.samples);

    let window = hann(cfg.window_len);
    let n_freqs = cfg.n_freqs();
    let mut real_plane = vec![0.0; n_freqs * n_frames];
    let mut imag_plane = vec![0.0; n_freqs * n_frames];
    let mut frame_buf = vec![0.0; cfg.n_fft];
    for m in 0..n_frames {
        let start = m * cfg.hop;
        for (i, w) in window.iter().enumerate() {
            frame_buf[i] = padded[start + i] * w;
        }
        for v in frame_buf.iter_mut().skip(cfg.window_len) {
            *v = 0.0;
        }
        let spectrum = fft_forward(&frame_buf);
        for f in 0..n_freqs {
            real_plane[f * n_frames + m] = spectrum[f].re;
            imag_plane[f * n_frames + m] = spectrum[f].im;
        }
    }
    Ok(Spectrogram {
        real_plane,
        imag_plane,
        n_freqs,
        n_frames,
        window_len: cfg.window_len,
        hop: cfg.hop,
        n_fft: cfg.n_fft,
        original_len: len,
        pad_left,
        dt_ms: trace.dt_ms,
        t0_ms: trace.t0_ms,
        source_id: trace.id.clone(),
        source_kind: trace.kind,
    })
}

/// Least-squares overlap-add inverse with window-energy normalization,
/// truncated to the original trace extent.
pub fn istft(spec: &Spectrogram) -> Result<Trace, DspError> {
    let window = hann(spec.window_len);
    let padded_len = (spec.n_frames - 1) * spec.hop + spec.window_len;
    let mut acc = vec![0.0; padded_len];
    let mut wsq = vec![0.0; padded_len];
    let n_freqs = spec.n_freqs;
    let mut full = vec![Complex::new(0.0, 0.0); spec.n_fft];
    for m in 0..spec.n_frames {
        // Rebuild the full spectrum from the half-spectrum by conjugate
        // symmetry, then invert.
        for f in 0..n_freqs {
            let (re, im) = spec.at(f, m);
            full[f] = Complex::new(re, im);
        }
        for f in n_freqs..spec.n_fft {
            full[f] = full[spec.n_fft - f].conj();
        }
        let frame = fft_inverse(&full);
        let start = m * spec.hop;
        for (i, w) in window.iter().enumerate() {
            acc[start + i] += w * frame[i];
            wsq[start + i] += w * w;
        }
    }
    let lo = spec.pad_left;
    let hi = lo + spec.original_len;
    let mut samples = Vec::with_capacity(spec.original_len);
    for t in lo..hi {
        if wsq[t] <= 1e-12 {
            return Err(DspError::Reconstruction(format!(
                "zero window energy at padded sample {t}"
            )));
        }
        samples.push(acc[t] / wsq[t]);
    }
    Trace::new(
        spec.source_id.clone(),
        spec.source_kind,
        spec.dt_ms,
        spec.t0_ms,
        samples,
    )
    .map_err(|e| DspError::Reconstruction(e.to_string()))
}
