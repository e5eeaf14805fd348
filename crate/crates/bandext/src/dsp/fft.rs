//! Thin wrappers over rustfft for real-signal use.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

/// Forward complex FFT of a real signal.
pub(crate) fn fft_forward(samples: &[f64]) -> Vec<Complex<f64>> {
    let n = samples.len();
    let mut buf: Vec<Complex<f64>> = samples.iter().map(|&s| Complex::new(s, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    buf
}

/// Inverse complex FFT returning the real part, normalized by 1/n.
pub(crate) fn fft_inverse(spectrum: &[Complex<f64>]) -> Vec<f64> {
    let n = spectrum.len();
    let mut buf = spectrum.to_vec();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    buf.iter().map(|c| c.re * scale).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_inverse_roundtrip() {
        let x: Vec<f64> = (0..64).map(|i| ((i * i) % 17) as f64 / 17.0 - 0.4).collect();
        let y = fft_inverse(&fft_forward(&x));
        for (a, b) in x.iter().zip(&y) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
