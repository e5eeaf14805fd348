//! Decimation of finely sampled logs onto the seismic grid.

use std::f64::consts::PI;

use super::DspError;
use crate::core::Trace;

/// Symmetric windowed-sinc low-pass at the new Nyquist, normalized to unit
/// DC gain. A symmetric unit-DC kernel passes constants and linear ramps
/// exactly, so resampling does not tilt trends.
fn antialias_kernel(decimation: f64) -> Vec<f64> {
    let cutoff = 0.5 / decimation; // cycles per input sample
    let half = (8.0 * decimation).ceil() as isize;
    let mut taps = Vec::with_capacity((2 * half + 1) as usize);
    for k in -half..=half {
        let t = k as f64;
        let sinc = if k == 0 {
            2.0 * cutoff
        } else {
            (2.0 * PI * cutoff * t).sin() / (PI * t)
        };
        // Blackman window.
        let x = (t + half as f64) / (2.0 * half as f64);
        let w = 0.42 - 0.5 * (2.0 * PI * x).cos() + 0.08 * (4.0 * PI * x).cos();
        taps.push(sinc * w);
    }
    let sum: f64 = taps.iter().sum();
    for t in &mut taps {
        *t /= sum;
    }
    taps
}

/// Extends a signal by first-order extrapolation at both ends.
fn extended(samples: &[f64], margin: usize) -> Vec<f64> {
    let n = samples.len();
    let mut out = Vec::with_capacity(n + 2 * margin);
    let (first, last) = (samples[0], samples[n - 1]);
    let slope_lo = if n >= 2 { samples[1] - samples[0] } else { 0.0 };
    let slope_hi = if n >= 2 {
        samples[n - 1] - samples[n - 2]
    } else {
        0.0
    };
    for k in (1..=margin).rev() {
        out.push(first - k as f64 * slope_lo);
    }
    out.extend_from_slice(samples);
    for k in 1..=margin {
        out.push(last + k as f64 * slope_hi);
    }
    out
}

/// Resamples a log onto a coarser grid: anti-alias low-pass at the new
/// Nyquist, then linear interpolation onto exactly `n_target` samples
/// starting at the log's `t0_ms`.
///
/// Upsampling requests (`dt_target_ms < log.dt_ms`) are rejected.
pub fn resample_log(log: &Trace, dt_target_ms: f64, n_target: usize) -> Result<Trace, DspError> {
    if n_target == 0 {
        return Err(DspError::Resample("n_target must be positive".into()));
    }
    let dt_in = log.dt_ms;
    if dt_target_ms < dt_in * (1.0 - 1e-9) {
        return Err(DspError::Resample(format!(
            "upsampling request: target dt {dt_target_ms} ms < log dt {dt_in} ms"
        )));
    }
    let same_dt = (dt_target_ms - dt_in).abs() <= 1e-9 * dt_in;
    if same_dt && n_target == log.len() {
        return Ok(log.clone());
    }

    let decimation = dt_target_ms / dt_in;
    let filtered: Vec<f64> = if same_dt {
        log.samples.clone()
    } else {
        let taps = antialias_kernel(decimation);
        let half = taps.len() / 2;
        let ext = extended(&log.samples, half);
        (0..log.len())
            .map(|i| {
                taps.iter()
                    .enumerate()
                    .map(|(k, t)| t * ext[i + k])
                    .sum::<f64>()
            })
            .collect()
    };

    // Linear interpolation onto the target grid, extrapolating linearly if
    // the target grid slightly overruns the source extent.
    let margin = (decimation.ceil() as usize).max(2);
    let ext = extended(&filtered, margin);
    let mut samples = Vec::with_capacity(n_target);
    for j in 0..n_target {
        let s = j as f64 * decimation; // source index space
        let i = s.floor() as isize;
        let frac = s - i as f64;
        let i0 = ((i + margin as isize) as usize).min(ext.len() - 2);
        samples.push((1.0 - frac) * ext[i0] + frac * ext[i0 + 1]);
    }
    let mut out = log.clone();
    out.dt_ms = dt_target_ms;
    out.samples = samples;
    Ok(out)
}
