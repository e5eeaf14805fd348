//! Amplitude spectra of whole traces.

use super::{fft_forward, DspError};
use crate::core::Trace;

/// One-sided amplitude spectrum: frequencies from 0 up to Nyquist.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub freqs: Vec<f64>,
    pub amplitude: Vec<f64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.freqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.freqs.is_empty()
    }
}

/// Magnitude of the real-FFT bins of the whole trace.
pub fn amplitude_spectrum(trace: &Trace) -> Result<Spectrum, DspError> {
    if trace.is_empty() {
        return Err(DspError::Trace("empty trace".into()));
    }
    let n = trace.len();
    let spectrum = fft_forward(&trace.samples);
    let n_bins = n / 2 + 1;
    let df = trace.sample_rate_hz() / n as f64;
    let freqs = (0..n_bins).map(|k| k as f64 * df).collect();
    let amplitude = spectrum[..n_bins].iter().map(|c| c.norm()).collect();
    Ok(Spectrum { freqs, amplitude })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::TraceKind;
    use std::f64::consts::PI;

    #[test]
    fn zero_trace_is_all_zero() {
        let t = Trace::new("z", TraceKind::Seismic, 2.0, 0.0, vec![0.0; 64]).unwrap();
        let s = amplitude_spectrum(&t).unwrap();
        assert!(s.amplitude.iter().all(|a| *a == 0.0));
        assert_eq!(s.freqs[0], 0.0);
        assert!((s.freqs.last().unwrap() - 250.0).abs() < 1e-12);
    }

    #[test]
    fn unit_impulse_is_flat() {
        let mut samples = vec![0.0; 64];
        samples[0] = 1.0;
        let t = Trace::new("d", TraceKind::Seismic, 2.0, 0.0, samples).unwrap();
        let s = amplitude_spectrum(&t).unwrap();
        for a in &s.amplitude {
            assert!((a - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sinusoid_peaks_at_nearest_bin() {
        // 30 Hz unit sinusoid, 512 samples at dt = 2 ms. Brute-force check:
        // bin spacing 500/512 Hz, so the peak bin index should round 30 Hz.
        let n = 512;
        let dt_s = 0.002;
        let samples: Vec<f64> = (0..n)
            .map(|i| (2.0 * PI * 30.0 * i as f64 * dt_s).sin())
            .collect();
        let t = Trace::new("s", TraceKind::Seismic, 2.0, 0.0, samples).unwrap();
        let s = amplitude_spectrum(&t).unwrap();
        let argmax = s
            .amplitude
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap()
            .0;
        let df = 500.0 / 512.0;
        let expected = (30.0 / df).round() as usize;
        assert_eq!(argmax, expected);
    }

    #[test]
    fn invariant_under_time_reversal() {
        let samples: Vec<f64> = (0..128).map(|i| ((i * 29 % 41) as f64) / 41.0 - 0.5).collect();
        let t = Trace::new("x", TraceKind::Seismic, 2.0, 0.0, samples.clone()).unwrap();
        let rev = Trace::new(
            "xr",
            TraceKind::Seismic,
            2.0,
            0.0,
            samples.into_iter().rev().collect(),
        )
        .unwrap();
        let a = amplitude_spectrum(&t).unwrap();
        let b = amplitude_spectrum(&rev).unwrap();
        for (x, y) in a.amplitude.iter().zip(&b.amplitude) {
            assert!((x - y).abs() < 1e-9);
        }
    }
}
