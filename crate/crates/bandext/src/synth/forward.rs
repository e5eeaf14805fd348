//! Normal-incidence convolutional forward model and tie degradation.

use rand::Rng;
use rand_distr::{Distribution, Normal};

use super::{dataset::SynthConfig, EarthModel, SynthError};
use crate::core::{TieClass, Trace, TraceKind, TracePair};
use crate::dsp::{bandpass_trapezoid, ricker};
use crate::seed;

/// Spike series: each layer interface contributes
/// `r = (Z_below - Z_above) / (Z_below + Z_above)` at the nearest sample.
pub fn reflectivity_series(model: &EarthModel, dt_ms: f64, n: usize) -> Result<Trace, SynthError> {
    if model.total_thickness_ms() < n as f64 * dt_ms {
        return Err(SynthError::Model(format!(
            "model spans {:.1} ms, trace needs {:.1} ms",
            model.total_thickness_ms(),
            n as f64 * dt_ms
        )));
    }
    let mut samples = vec![0.0; n];
    let mut t = 0.0;
    for w in model.layers.windows(2) {
        t += w[0].thickness_ms;
        let idx = (t / dt_ms).round() as usize;
        if idx < n {
            let (za, zb) = (w[0].impedance, w[1].impedance);
            samples[idx] += (zb - za) / (zb + za);
        }
    }
    Trace::new(
        format!("refl_{}", model.seed),
        TraceKind::Broadband,
        dt_ms,
        0.0,
        samples,
    )
    .map_err(|e| SynthError::Model(e.to_string()))
}

/// Centered convolution with a symmetric wavelet; output length matches the
/// input series.
fn convolve_same(series: &[f64], wavelet: &[f64]) -> Vec<f64> {
    let half = wavelet.len() / 2;
    let n = series.len();
    let mut out = vec![0.0; n];
    for (t, o) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (k, w) in wavelet.iter().enumerate() {
            let src = t as isize + half as isize - k as isize;
            if src >= 0 && (src as usize) < n {
                acc += w * series[src as usize];
            }
        }
        *o = acc;
    }
    out
}

/// Builds one Good pair from a reflectivity series:
/// seismic = bandpass(reflectivity * ricker) + noise, log = bandpass
/// (reflectivity, broadband band). Both peak-normalized; normalization is
/// skipped on all-zero traces.
pub fn forward_model(
    reflectivity: &Trace,
    cfg: &SynthConfig,
    noise_seed: u64,
    well_id: &str,
) -> Result<TracePair, SynthError> {
    let dt = reflectivity.dt_ms;
    // Enough support for the wavelet to decay: two dominant periods.
    let half_len = ((2000.0 / (cfg.wavelet_peak_hz * dt)).ceil() as usize).max(8);
    let wavelet = ricker(cfg.wavelet_peak_hz, dt, half_len)?;

    let convolved = Trace::new(
        "conv",
        TraceKind::Seismic,
        dt,
        reflectivity.t0_ms,
        convolve_same(&reflectivity.samples, &wavelet.samples),
    )
    .map_err(|e| SynthError::Model(e.to_string()))?;
    let clean = bandpass_trapezoid(&convolved, &cfg.seismic_band)?;

    let signal_rms = clean.rms();
    let mut seismic = clean;
    if cfg.noise_rms_fraction > 0.0 && signal_rms > 0.0 {
        let normal = Normal::new(0.0, cfg.noise_rms_fraction * signal_rms)
            .map_err(|e| SynthError::Model(e.to_string()))?;
        let mut rng = seed::rng(noise_seed);
        for s in &mut seismic.samples {
            *s += normal.sample(&mut rng);
        }
    }
    let seismic = seismic
        .peak_normalized()
        .with_kind(TraceKind::Seismic)
        .with_id(format!("{well_id}_seismic"));

    let log = bandpass_trapezoid(reflectivity, &cfg.broadband_band)?
        .peak_normalized()
        .with_kind(TraceKind::Log)
        .with_id(format!("{well_id}_log"));

    Ok(TracePair::new(well_id, seismic, log, Some(TieClass::Good))?)
}

fn circular_shift(samples: &[f64], shift: usize) -> Vec<f64> {
    let n = samples.len();
    let shift = shift % n;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&samples[n - shift..]);
    out.extend_from_slice(&samples[..n - shift]);
    out
}

/// Degrades a Good pair to the target tie class.
///
/// Fair: circular shift of the seismic by 6-12 ms plus 10% extra noise.
/// Poor: polarity flip of a random contiguous half of the seismic plus a
/// 16-30 ms shift. Good returns the pair unchanged.
pub fn degrade_tie(pair: &TracePair, target: TieClass, seed_val: u64) -> TracePair {
    let mut out = pair.clone();
    out.tie_class = Some(target);
    if target == TieClass::Good {
        return out;
    }
    let dt = pair.seismic.dt_ms;
    let mut rng = seed::rng(seed_val);
    match target {
        TieClass::Good => unreachable!(),
        TieClass::Fair => {
            let shift_ms = rng.gen_range(6.0..=12.0);
            let shift = (shift_ms / dt).round().max(1.0) as usize;
            let mut samples = circular_shift(&pair.seismic.samples, shift);
            let extra = 0.10 * crate::stats::rms(&samples);
            if extra > 0.0 {
                let normal = Normal::new(0.0, extra).expect("noise sigma");
                for s in &mut samples {
                    *s += normal.sample(&mut rng);
                }
            }
            out.seismic.samples = samples;
            out.seismic = out.seismic.peak_normalized();
        }
        TieClass::Poor => {
            let shift_ms = rng.gen_range(16.0..=30.0);
            let shift = (shift_ms / dt).round() as usize;
            let mut samples = circular_shift(&pair.seismic.samples, shift);
            let n = samples.len();
            let start = rng.gen_range(0..=n / 2);
            for s in &mut samples[start..start + n / 2] {
                *s = -*s;
            }
            out.seismic.samples = samples;
            out.seismic = out.seismic.peak_normalized();
        }
    }
    out
}

/// The shift (in ms) that `degrade_tie` would apply for this seed/target;
/// exposed for tests that verify reproducibility of the degradation.
pub fn degrade_shift_ms(target: TieClass, seed_val: u64) -> Option<f64> {
    let mut rng = seed::rng(seed_val);
    match target {
        TieClass::Good => None,
        TieClass::Fair => Some(rng.gen_range(6.0..=12.0)),
        TieClass::Poor => Some(rng.gen_range(16.0..=30.0)),
    }
}
