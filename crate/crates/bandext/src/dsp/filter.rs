//! Zero-phase trapezoid band-pass via frequency-domain multiplication.

use super::{fft_forward, fft_inverse, DspError, TrapezoidBand};
use crate::core::Trace;

/// Filters a trace with the trapezoid gain, zero-phase.
///
/// Forward FFT, per-bin multiplication by the (real, even) trapezoid gain,
/// inverse FFT. Output length equals input length. The implied periodic
/// extension is the usual convention for whole-trace QC filtering.
pub fn bandpass_trapezoid(trace: &Trace, band: &TrapezoidBand) -> Result<Trace, DspError> {
    band.validate_for_nyquist(trace.nyquist_hz())?;
    let n = trace.len();
    let df = trace.sample_rate_hz() / n as f64;
    let mut spectrum = fft_forward(&trace.samples);
    for (k, c) in spectrum.iter_mut().enumerate() {
        // Bin frequency folded to [0, fs/2]: negative-frequency bins carry
        // the mirrored positive frequency, keeping the gain even.
        let f = if 2 * k <= n {
            k as f64 * df
        } else {
            (n - k) as f64 * df
        };
        let g = band.gain(f);
        c.re *= g;
        c.im *= g;
    }
    let samples = fft_inverse(&spectrum);
    let mut out = trace.clone();
    out.samples = samples;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::TraceKind;
    use std::f64::consts::PI;

    fn sinusoid(freq_hz: f64, n: usize, dt_ms: f64) -> Trace {
        let dt_s = dt_ms / 1000.0;
        let samples = (0..n)
            .map(|i| (2.0 * PI * freq_hz * i as f64 * dt_s).sin())
            .collect();
        Trace::new("sin", TraceKind::Seismic, dt_ms, 0.0, samples).unwrap()
    }

    fn rms(samples: &[f64]) -> f64 {
        (samples.iter().map(|s| s * s).sum::<f64>() / samples.len() as f64).sqrt()
    }

    /// Brute-force O(n^2) DFT filter: no FFT, no shared code with the
    /// implementation under test.
    fn brute_force_filtered_rms(x: &Trace, band: &TrapezoidBand) -> f64 {
        let n = x.len();
        let df = x.sample_rate_hz() / n as f64;
        let w = 2.0 * PI / n as f64;
        let mut out = vec![0.0_f64; n];
        for k in 0..n {
            let mut re = 0.0;
            let mut im = 0.0;
            for (t, &s) in x.samples.iter().enumerate() {
                let ph = w * (k * t % n) as f64;
                re += s * ph.cos();
                im -= s * ph.sin();
            }
            let f = if 2 * k <= n { k as f64 } else { (n - k) as f64 } * df;
            let g = band.gain(f);
            re *= g;
            im *= g;
            for (t, o) in out.iter_mut().enumerate() {
                let ph = w * (k * t % n) as f64;
                *o += re * ph.cos() - im * ph.sin();
            }
        }
        for o in &mut out {
            *o /= n as f64;
        }
        rms(&out)
    }

    #[test]
    fn passband_sinusoid_survives_stopband_sinusoid_dies() {
        let band = TrapezoidBand::new(3.0, 6.0, 60.0, 80.0).unwrap();
        let x = sinusoid(30.0, 512, 2.0);
        let y = bandpass_trapezoid(&x, &band).unwrap();
        let in_rms = rms(&x.samples);
        let out_rms = rms(&y.samples);
        assert!(
            (out_rms - in_rms).abs() / in_rms < 0.02,
            "passband RMS ratio {}",
            out_rms / in_rms
        );
        // Oracle agreement: brute-force DFT path lands on the same RMS.
        let oracle = brute_force_filtered_rms(&x, &band);
        assert!((out_rms - oracle).abs() < 1e-9 * in_rms.max(1.0));

        let low = TrapezoidBand::new(0.0, 0.0, 8.0, 16.0).unwrap();
        let z = bandpass_trapezoid(&x, &low).unwrap();
        assert!(
            rms(&z.samples) / in_rms < 0.05,
            "stopband RMS ratio {}",
            rms(&z.samples) / in_rms
        );
        let oracle_low = brute_force_filtered_rms(&x, &low);
        assert!((rms(&z.samples) - oracle_low).abs() < 1e-9 * in_rms.max(1.0));
    }

    #[test]
    fn rejects_band_above_nyquist() {
        let band = TrapezoidBand::new(0.0, 50.0, 250.0, 500.0).unwrap();
        let x = sinusoid(30.0, 512, 2.0); // Nyquist 250 Hz
        assert!(matches!(
            bandpass_trapezoid(&x, &band),
            Err(DspError::Band(_))
        ));
    }

    #[test]
    fn boxcar_filter_is_idempotent_on_arbitrary_input() {
        // With gains in {0, 1} everywhere, g^2 == g exactly per bin.
        let band = TrapezoidBand::new(6.0, 6.0, 60.0, 60.0).unwrap();
        let x = sinusoid(30.0, 512, 2.0);
        let once = bandpass_trapezoid(&x, &band).unwrap();
        let twice = bandpass_trapezoid(&once, &band).unwrap();
        let peak = once.max_abs();
        for (a, b) in once.samples.iter().zip(&twice.samples) {
            assert!((a - b).abs() <= 1e-9 * peak.max(1.0));
        }
    }

    #[test]
    fn filtering_preserves_even_symmetry() {
        // Zero-phase: an even input stays even.
        let n = 257usize;
        let mut samples = vec![0.0; n];
        let c = n / 2;
        for i in 0..n {
            let d = i as isize - c as isize;
            samples[i] = (-0.002 * (d * d) as f64).exp();
        }
        let x = Trace::new("even", TraceKind::Seismic, 2.0, 0.0, samples).unwrap();
        let band = TrapezoidBand::new(3.0, 6.0, 60.0, 80.0).unwrap();
        let y = bandpass_trapezoid(&x, &band).unwrap();
        for d in 0..=c {
            assert!((y.samples[c + d] - y.samples[c - d]).abs() < 1e-9);
        }
    }
}
