//! Source wavelets for the synthetic forward model.

use std::f64::consts::PI;

use super::DspError;
use crate::core::{Trace, TraceKind};

/// Ricker wavelet `w(t) = (1 - 2 pi^2 f^2 t^2) exp(-pi^2 f^2 t^2)`,
/// sampled symmetrically: `2 * half_len + 1` samples centered on t = 0.
pub fn ricker(f_peak_hz: f64, dt_ms: f64, half_len: usize) -> Result<Trace, DspError> {
    let nyquist = 500.0 / dt_ms;
    if !(f_peak_hz > 0.0) || f_peak_hz >= nyquist {
        return Err(DspError::Band(format!(
            "ricker peak {f_peak_hz} Hz outside (0, Nyquist {nyquist} Hz)"
        )));
    }
    if half_len == 0 {
        return Err(DspError::Trace("ricker half_len must be >= 1".into()));
    }
    let n = 2 * half_len + 1;
    let dt_s = dt_ms / 1000.0;
    let samples = (0..n)
        .map(|i| {
            let t = (i as f64 - half_len as f64) * dt_s;
            let a = PI * PI * f_peak_hz * f_peak_hz * t * t;
            (1.0 - 2.0 * a) * (-a).exp()
        })
        .collect();
    Trace::new(
        format!("ricker{f_peak_hz}"),
        TraceKind::Seismic,
        dt_ms,
        -(half_len as f64) * dt_ms,
        samples,
    )
    .map_err(|e| DspError::Trace(e.to_string()))
}
