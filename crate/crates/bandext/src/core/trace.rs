use serde::{Deserialize, Serialize};

use super::CoreError;

/// What a trace represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceKind {
    Seismic,
    Log,
    Broadband,
}

impl TraceKind {
    pub(crate) fn to_byte(self) -> u8 {
        match self {
            TraceKind::Seismic => 0,
            TraceKind::Log => 1,
            TraceKind::Broadband => 2,
        }
    }

    pub(crate) fn from_byte(b: u8) -> Option<Self> {
        match b {
            0 => Some(TraceKind::Seismic),
            1 => Some(TraceKind::Log),
            2 => Some(TraceKind::Broadband),
            _ => None,
        }
    }
}

/// Seismic-well tie quality label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TieClass {
    Good,
    Fair,
    Poor,
}

impl std::fmt::Display for TieClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TieClass::Good => write!(f, "Good"),
            TieClass::Fair => write!(f, "Fair"),
            TieClass::Poor => write!(f, "Poor"),
        }
    }
}

/// A uniformly sampled real-valued signal with sampling metadata.
///
/// Samples are finite, the trace is nonempty, and `dt_ms > 0`; construction
/// enforces all three.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub id: String,
    pub kind: TraceKind,
    /// Sample interval, milliseconds.
    pub dt_ms: f64,
    /// Start time, milliseconds.
    pub t0_ms: f64,
    pub samples: Vec<f64>,
}

impl Trace {
    pub fn new(
        id: impl Into<String>,
        kind: TraceKind,
        dt_ms: f64,
        t0_ms: f64,
        samples: Vec<f64>,
    ) -> Result<Self, CoreError> {
        if samples.is_empty() {
            return Err(CoreError::InvalidTrace("trace has no samples".into()));
        }
        if !(dt_ms > 0.0) || !dt_ms.is_finite() {
            return Err(CoreError::InvalidTrace(format!(
                "dt_ms must be positive and finite, got {dt_ms}"
            )));
        }
        if !t0_ms.is_finite() {
            return Err(CoreError::InvalidTrace("t0_ms must be finite".into()));
        }
        if let Some(i) = samples.iter().position(|s| !s.is_finite()) {
            return Err(CoreError::InvalidTrace(format!(
                "non-finite sample at index {i}"
            )));
        }
        Ok(Self {
            id: id.into(),
            kind,
            dt_ms,
            t0_ms,
            samples,
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Sampling frequency in Hz (`dt_ms` is in milliseconds).
    pub fn sample_rate_hz(&self) -> f64 {
        1000.0 / self.dt_ms
    }

    pub fn nyquist_hz(&self) -> f64 {
        500.0 / self.dt_ms
    }

    pub fn duration_ms(&self) -> f64 {
        self.samples.len() as f64 * self.dt_ms
    }

    pub fn rms(&self) -> f64 {
        crate::stats::rms(&self.samples)
    }

    pub fn max_abs(&self) -> f64 {
        crate::stats::max_abs(&self.samples)
    }

    /// Returns a copy with samples scaled so that `max|s| == 1`.
    /// An all-zero trace is returned unchanged.
    pub fn peak_normalized(&self) -> Trace {
        let peak = self.max_abs();
        if peak == 0.0 {
            return self.clone();
        }
        let mut out = self.clone();
        for s in &mut out.samples {
            *s /= peak;
        }
        out
    }

    /// Same data, different kind tag.
    pub fn with_kind(mut self, kind: TraceKind) -> Trace {
        self.kind = kind;
        self
    }

    /// Same data, different id.
    pub fn with_id(mut self, id: impl Into<String>) -> Trace {
        self.id = id.into();
        self
    }
}

/// A co-located seismic trace and well-log trace; the supervised unit.
#[derive(Debug, Clone, PartialEq)]
pub struct TracePair {
    pub well_id: String,
    pub seismic: Trace,
    pub log: Trace,
    pub tie_class: Option<TieClass>,
}

impl TracePair {
    /// Builds a pair, enforcing the alignment invariants: equal `dt_ms` and
    /// equal sample counts.
    pub fn new(
        well_id: impl Into<String>,
        seismic: Trace,
        log: Trace,
        tie_class: Option<TieClass>,
    ) -> Result<Self, CoreError> {
        let well_id = well_id.into();
        if well_id.is_empty() {
            return Err(CoreError::InvalidPair {
                well_id,
                reason: "well_id is empty".into(),
            });
        }
        if (seismic.dt_ms - log.dt_ms).abs() > 1e-9 {
            return Err(CoreError::InvalidPair {
                well_id,
                reason: format!(
                    "seismic dt {} differs from log dt {}",
                    seismic.dt_ms, log.dt_ms
                ),
            });
        }
        if seismic.len() != log.len() {
            return Err(CoreError::InvalidPair {
                well_id,
                reason: format!(
                    "seismic length {} differs from log length {}",
                    seismic.len(),
                    log.len()
                ),
            });
        }
        Ok(Self {
            well_id,
            seismic,
            log,
            tie_class,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_samples() {
        assert!(Trace::new("t", TraceKind::Seismic, 2.0, 0.0, vec![]).is_err());
    }

    #[test]
    fn rejects_non_finite_samples() {
        assert!(Trace::new("t", TraceKind::Seismic, 2.0, 0.0, vec![1.0, f64::NAN]).is_err());
        assert!(Trace::new("t", TraceKind::Seismic, 2.0, 0.0, vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn rejects_bad_dt() {
        assert!(Trace::new("t", TraceKind::Seismic, 0.0, 0.0, vec![1.0]).is_err());
        assert!(Trace::new("t", TraceKind::Seismic, -2.0, 0.0, vec![1.0]).is_err());
    }

    #[test]
    fn nyquist_matches_sampling() {
        let t = Trace::new("t", TraceKind::Seismic, 2.0, 0.0, vec![0.0; 8]).unwrap();
        assert_eq!(t.nyquist_hz(), 250.0);
        assert_eq!(t.sample_rate_hz(), 500.0);
    }

    #[test]
    fn pair_requires_alignment() {
        let a = Trace::new("s", TraceKind::Seismic, 2.0, 0.0, vec![0.0; 8]).unwrap();
        let b = Trace::new("l", TraceKind::Log, 2.0, 0.0, vec![0.0; 7]).unwrap();
        assert!(TracePair::new("w1", a.clone(), b, None).is_err());
        let c = Trace::new("l", TraceKind::Log, 1.0, 0.0, vec![0.0; 8]).unwrap();
        assert!(TracePair::new("w1", a, c, None).is_err());
    }

    #[test]
    fn peak_normalized_handles_zero() {
        let z = Trace::new("z", TraceKind::Seismic, 2.0, 0.0, vec![0.0; 4]).unwrap();
        assert_eq!(z.peak_normalized().samples, vec![0.0; 4]);
        let t = Trace::new("t", TraceKind::Seismic, 2.0, 0.0, vec![2.0, -4.0]).unwrap();
        assert_eq!(t.peak_normalized().samples, vec![0.5, -1.0]);
    }
}
