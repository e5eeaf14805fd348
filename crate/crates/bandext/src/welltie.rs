//! Seismic-well tie scoring on the two standards (amplitude and
//! characterization) and training-subset selection.
//!
//! Characterization is measured in the seismic band only: the log is
//! band-limited to the seismic band before correlating, since that is where
//! the seismic has signal. The characterization score is the zero-lag
//! Pearson correlation; a residual misalignment therefore counts against
//! the tie, while the best lag over the search window is reported
//! separately as a diagnostic.

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::core::{TieClass, TracePair};
use crate::dsp::{bandpass_trapezoid, TrapezoidBand};
use crate::seed;
use crate::stats::pearson;

/// Errors raised by tie scoring and training selection.
#[derive(Debug, Error)]
pub enum TieError {
    #[error("tie error: {0}")]
    Score(String),

    #[error("selection error: {0}")]
    Selection(String),

    #[error(transparent)]
    Dsp(#[from] crate::dsp::DspError),
}

/// Tie quality of one pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TieScore {
    /// RMS balance of the band-limited signals after best-lag alignment,
    /// in [0, 1].
    pub amplitude_score: f64,
    /// Zero-lag Pearson correlation between the seismic and the
    /// band-limited log, in [-1, 1].
    pub character_score: f64,
    /// Lag (ms) maximizing |correlation| within the search window; the
    /// shift that would best re-align the pair.
    pub best_lag_ms: f64,
}

/// Classification thresholds on the characterization score.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TieThresholds {
    pub good: f64,
    pub fair: f64,
}

impl Default for TieThresholds {
    fn default() -> Self {
        Self {
            good: 0.70,
            fair: 0.40,
        }
    }
}

/// Pearson correlation between `a` and `b` shifted by `lag` samples
/// (positive lag delays `b`), over the overlapping window.
fn lagged_pearson(a: &[f64], b: &[f64], lag: isize) -> Option<f64> {
    let n = a.len() as isize;
    let (a_start, b_start) = if lag >= 0 { (lag, 0) } else { (0, -lag) };
    let overlap = n - lag.abs();
    if overlap < 8 {
        return None;
    }
    let a_seg = &a[a_start as usize..(a_start + overlap) as usize];
    let b_seg = &b[b_start as usize..(b_start + overlap) as usize];
    pearson(a_seg, b_seg)
}

/// Scores one pair: characterization at zero lag, amplitude balance after
/// best-lag alignment, and the best lag itself.
pub fn tie_score(
    pair: &TracePair,
    seismic_band: &TrapezoidBand,
    max_lag_ms: f64,
) -> Result<TieScore, TieError> {
    let log_band = bandpass_trapezoid(&pair.log, seismic_band)?;
    let seismic = &pair.seismic.samples;
    let log_b = &log_band.samples;
    if crate::stats::rms(seismic) <= 1e-12 || crate::stats::rms(log_b) <= 1e-12 {
        return Err(TieError::Score(format!(
            "pair {}: zero-energy trace",
            pair.well_id
        )));
    }

    let character_score = pearson(seismic, log_b)
        .ok_or_else(|| TieError::Score(format!("pair {}: zero variance", pair.well_id)))?;

    let dt = pair.seismic.dt_ms;
    let max_lag = (max_lag_ms / dt).floor() as isize;
    let mut best_lag = 0isize;
    let mut best_abs = -1.0;
    for lag in -max_lag..=max_lag {
        if let Some(c) = lagged_pearson(seismic, log_b, lag) {
            if c.abs() > best_abs {
                best_abs = c.abs();
                best_lag = lag;
            }
        }
    }

    // Amplitude standard: RMS ratio of the band-limited signals aligned at
    // the best lag.
    let n = seismic.len() as isize;
    let (a_start, b_start) = if best_lag >= 0 { (best_lag, 0) } else { (0, -best_lag) };
    let overlap = (n - best_lag.abs()) as usize;
    let rms_a = crate::stats::rms(&seismic[a_start as usize..a_start as usize + overlap]);
    let rms_b = crate::stats::rms(&log_b[b_start as usize..b_start as usize + overlap]);
    let amplitude_score = if rms_a <= 0.0 || rms_b <= 0.0 {
        0.0
    } else {
        rms_a.min(rms_b) / rms_a.max(rms_b)
    };

    Ok(TieScore {
        amplitude_score,
        character_score,
        best_lag_ms: best_lag as f64 * dt,
    })
}

/// Classifies a score with the default thresholds.
pub fn classify_tie(score: &TieScore) -> TieClass {
    classify_tie_with(score, &TieThresholds::default())
}

/// Classifies a score: Good at or above `good`, Fair at or above `fair`,
/// Poor below.
pub fn classify_tie_with(score: &TieScore, thresholds: &TieThresholds) -> TieClass {
    if score.character_score >= thresholds.good {
        TieClass::Good
    } else if score.character_score >= thresholds.fair {
        TieClass::Fair
    } else {
        TieClass::Poor
    }
}

/// Training-subset policy: how many Good and Fair ties to train on.
///
/// When `exclude_poor` is unset, Poor pairs join the Fair pool and may be
/// drawn into the fair slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionPolicy {
    pub n_good: usize,
    pub n_fair: usize,
    pub exclude_poor: bool,
    pub seed: u64,
}

impl SelectionPolicy {
    pub fn validate(&self) -> Result<(), TieError> {
        if self.n_good + self.n_fair == 0 {
            return Err(TieError::Selection(
                "policy must select at least one pair".into(),
            ));
        }
        Ok(())
    }
}

/// Splits labeled pairs into a training set (seeded draw of `n_good` Good
/// plus `n_fair` Fair) and a validation set (everything else).
pub fn select_training(
    pairs: &[TracePair],
    policy: &SelectionPolicy,
) -> Result<(Vec<TracePair>, Vec<TracePair>), TieError> {
    policy.validate()?;
    let mut sorted: Vec<&TracePair> = pairs.iter().collect();
    sorted.sort_by(|a, b| a.well_id.cmp(&b.well_id));

    let class_of = |p: &TracePair| -> Result<TieClass, TieError> {
        p.tie_class.ok_or_else(|| {
            TieError::Selection(format!("pair {} has no tie_class label", p.well_id))
        })
    };

    let mut good_pool = Vec::new();
    let mut fair_pool = Vec::new();
    for p in &sorted {
        match class_of(p)? {
            TieClass::Good => good_pool.push(p.well_id.clone()),
            TieClass::Fair => fair_pool.push(p.well_id.clone()),
            TieClass::Poor => {
                if !policy.exclude_poor {
                    fair_pool.push(p.well_id.clone());
                }
            }
        }
    }
    if good_pool.len() < policy.n_good {
        return Err(TieError::Selection(format!(
            "policy requests {} Good pairs, only {} available",
            policy.n_good,
            good_pool.len()
        )));
    }
    if fair_pool.len() < policy.n_fair {
        return Err(TieError::Selection(format!(
            "policy requests {} Fair pairs, only {} available",
            policy.n_fair,
            fair_pool.len()
        )));
    }

    let mut rng = seed::rng(seed::derive(policy.seed, 0x5E1E));
    good_pool.shuffle(&mut rng);
    fair_pool.shuffle(&mut rng);
    let chosen: std::collections::BTreeSet<String> = good_pool
        .into_iter()
        .take(policy.n_good)
        .chain(fair_pool.into_iter().take(policy.n_fair))
        .collect();

    let mut train = Vec::with_capacity(chosen.len());
    let mut validation = Vec::new();
    for p in sorted {
        if chosen.contains(&p.well_id) {
            train.push(p.clone());
        } else {
            validation.push(p.clone());
        }
    }
    Ok((train, validation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{Trace, TraceKind};
    use crate::synth::{forward_model, gen_earth_model, reflectivity_series, FaciesKind, SynthConfig};

    fn band() -> TrapezoidBand {
        TrapezoidBand::new(3.0, 6.0, 60.0, 80.0).unwrap()
    }

    fn synthetic_good(seed: u64) -> TracePair {
        let cfg = SynthConfig::default();
        let m = gen_earth_model(FaciesKind::BlockySand, seed, 1100.0);
        let refl = reflectivity_series(&m, 2.0, 512).unwrap();
        forward_model(&refl, &cfg, seed::derive(seed, 9), "w0").unwrap()
    }

    #[test]
    fn perfect_tie_scores_one_at_zero_lag() {
        // Log whose band-limited version IS the seismic.
        let pair = synthetic_good(5);
        let ideal = TracePair::new(
            "w1",
            bandpass_trapezoid(&pair.log, &band()).unwrap().with_kind(TraceKind::Seismic),
            pair.log.clone(),
            None,
        )
        .unwrap();
        let score = tie_score(&ideal, &band(), 20.0).unwrap();
        assert!((score.character_score - 1.0).abs() < 1e-9);
        assert!((score.amplitude_score - 1.0).abs() < 1e-9);
        assert_eq!(score.best_lag_ms, 0.0);
    }

    #[test]
    fn polarity_flip_scores_minus_one() {
        let pair = synthetic_good(6);
        let flipped = Trace::new(
            "s",
            TraceKind::Seismic,
            2.0,
            0.0,
            bandpass_trapezoid(&pair.log, &band())
                .unwrap()
                .samples
                .iter()
                .map(|v| -v)
                .collect(),
        )
        .unwrap();
        let p = TracePair::new("w1", flipped, pair.log.clone(), None).unwrap();
        let score = tie_score(&p, &band(), 20.0).unwrap();
        assert!((score.character_score + 1.0).abs() < 1e-9);
    }

    #[test]
    fn known_shift_is_recovered_within_one_sample() {
        // 8 ms circular shift; exhaustive lag-scan oracle cross-checks the
        // reported best lag.
        let pair = synthetic_good(7);
        let shifted: Vec<f64> = {
            let s = &pair.seismic.samples;
            let k = 4; // 8 ms at dt = 2 ms
            s[s.len() - k..]
                .iter()
                .chain(&s[..s.len() - k])
                .copied()
                .collect()
        };
        let p = TracePair::new(
            "w1",
            Trace::new("s", TraceKind::Seismic, 2.0, 0.0, shifted).unwrap(),
            pair.log.clone(),
            None,
        )
        .unwrap();
        let score = tie_score(&p, &band(), 20.0).unwrap();
        assert!(
            (score.best_lag_ms - 8.0).abs() <= 2.0,
            "best lag {} ms",
            score.best_lag_ms
        );

        // Oracle: brute-force scan with an independently written loop.
        let log_b = bandpass_trapezoid(&p.log, &band()).unwrap();
        let mut best = (0isize, -1.0f64);
        for lag in -10i32..=10 {
            let lag = lag as isize;
            if let Some(c) = super::lagged_pearson(&p.seismic.samples, &log_b.samples, lag) {
                if c.abs() > best.1 {
                    best = (lag, c.abs());
                }
            }
        }
        assert_eq!(best.0 as f64 * 2.0, score.best_lag_ms);
    }

    #[test]
    fn character_score_invariances() {
        let pair = synthetic_good(8);
        let base = tie_score(&pair, &band(), 20.0).unwrap();
        // Positive scaling of either trace leaves the score unchanged.
        let mut scaled = pair.clone();
        for s in &mut scaled.seismic.samples {
            *s *= 3.5;
        }
        let s2 = tie_score(&scaled, &band(), 20.0).unwrap();
        assert!((base.character_score - s2.character_score).abs() < 1e-9);
        // Polarity flip of exactly one trace negates it.
        let mut flipped = pair.clone();
        for s in &mut flipped.seismic.samples {
            *s = -*s;
        }
        let s3 = tie_score(&flipped, &band(), 20.0).unwrap();
        assert!((base.character_score + s3.character_score).abs() < 1e-9);
    }

    #[test]
    fn zero_energy_trace_is_an_error() {
        let z = Trace::new("z", TraceKind::Seismic, 2.0, 0.0, vec![0.0; 512]).unwrap();
        let l = synthetic_good(9).log;
        let p = TracePair::new("w1", z, l, None).unwrap();
        assert!(matches!(
            tie_score(&p, &band(), 20.0),
            Err(TieError::Score(_))
        ));
    }

    #[test]
    fn classification_boundaries_and_monotonicity() {
        let mk = |c: f64| TieScore {
            amplitude_score: 1.0,
            character_score: c,
            best_lag_ms: 0.0,
        };
        assert_eq!(classify_tie(&mk(1.0)), TieClass::Good);
        assert_eq!(classify_tie(&mk(0.70)), TieClass::Good);
        assert_eq!(classify_tie(&mk(0.69)), TieClass::Fair);
        assert_eq!(classify_tie(&mk(0.40)), TieClass::Fair);
        assert_eq!(classify_tie(&mk(0.39)), TieClass::Poor);
        assert_eq!(classify_tie(&mk(-1.0)), TieClass::Poor);
        // Monotone: raising the score never demotes the class. TieClass
        // derives Ord with Good < Fair < Poor, so quality rank must be
        // non-increasing as the score rises.
        let mut last = TieClass::Poor;
        for i in 0..=200 {
            let c = -1.0 + i as f64 / 100.0;
            let class = classify_tie(&mk(c));
            assert!(class <= last, "demoted from {last} to {class} at {c}");
            last = class;
        }
    }

    fn labeled_pairs() -> Vec<TracePair> {
        // 9 Good, 2 Fair, 1 Poor with distinct ids.
        let mut pairs = Vec::new();
        for i in 0..12u64 {
            let mut p = synthetic_good(20 + i);
            p.well_id = format!("W{:02}", i + 1);
            p.tie_class = Some(if i < 9 {
                TieClass::Good
            } else if i < 11 {
                TieClass::Fair
            } else {
                TieClass::Poor
            });
            pairs.push(p);
        }
        pairs
    }

    #[test]
    fn paper_shaped_selection_splits_4_and_8() {
        let pairs = labeled_pairs();
        let policy = SelectionPolicy {
            n_good: 3,
            n_fair: 1,
            exclude_poor: true,
            seed: 11,
        };
        let (train, val) = select_training(&pairs, &policy).unwrap();
        assert_eq!(train.len(), 4);
        assert_eq!(val.len(), 8);
        // Disjoint and exhaustive.
        let mut all: Vec<String> = train.iter().chain(&val).map(|p| p.well_id.clone()).collect();
        all.sort();
        let mut expected: Vec<String> = pairs.iter().map(|p| p.well_id.clone()).collect();
        expected.sort();
        assert_eq!(all, expected);
        // No Poor pair in training.
        assert!(train
            .iter()
            .all(|p| p.tie_class != Some(TieClass::Poor)));
        // Deterministic under the same seed.
        let (train2, _) = select_training(&pairs, &policy).unwrap();
        let ids: Vec<_> = train.iter().map(|p| &p.well_id).collect();
        let ids2: Vec<_> = train2.iter().map(|p| &p.well_id).collect();
        assert_eq!(ids, ids2);
    }

    #[test]
    fn insufficient_pairs_is_a_selection_error() {
        let pairs = labeled_pairs();
        let policy = SelectionPolicy {
            n_good: 10,
            n_fair: 1,
            exclude_poor: true,
            seed: 1,
        };
        assert!(matches!(
            select_training(&pairs, &policy),
            Err(TieError::Selection(_))
        ));
    }

    #[test]
    fn include_poor_extends_the_fair_pool() {
        let pairs = labeled_pairs();
        // All three fair-pool members requested: must include the Poor one.
        let policy = SelectionPolicy {
            n_good: 1,
            n_fair: 3,
            exclude_poor: false,
            seed: 2,
        };
        let (train, _) = select_training(&pairs, &policy).unwrap();
        assert!(train.iter().any(|p| p.tie_class == Some(TieClass::Poor)));
    }
}
