//! Trapezoid (Ormsby-style) band definitions in corner notation.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::DspError;

/// An amplitude band defined by four corner frequencies `f1-f2-f3-f4` (Hz):
/// zero below f1 and above f4, unity on [f2, f3], linear ramps between.
///
/// Equal corners are allowed and collapse the ramp to a step at that
/// frequency, e.g. `0-0-8-16` is a low-pass whose passband starts at DC.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrapezoidBand {
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub f4: f64,
}

impl TrapezoidBand {
    pub fn new(f1: f64, f2: f64, f3: f64, f4: f64) -> Result<Self, DspError> {
        for (name, f) in [("f1", f1), ("f2", f2), ("f3", f3), ("f4", f4)] {
            if !f.is_finite() || f < 0.0 {
                return Err(DspError::Band(format!(
                    "corner {name} must be finite and non-negative, got {f}"
                )));
            }
        }
        if !(f1 <= f2 && f2 <= f3 && f3 <= f4) {
            return Err(DspError::Band(format!(
                "corners must be non-decreasing: {f1}-{f2}-{f3}-{f4}"
            )));
        }
        Ok(Self { f1, f2, f3, f4 })
    }

    /// Errors when the top corner exceeds the Nyquist of the data this band
    /// is applied to.
    pub fn validate_for_nyquist(&self, nyquist_hz: f64) -> Result<(), DspError> {
        if self.f4 > nyquist_hz + 1e-9 {
            return Err(DspError::Band(format!(
                "band {self} exceeds Nyquist {nyquist_hz} Hz"
            )));
        }
        Ok(())
    }

    /// Rescales all corners by `factor`. Used to bring display bands quoted
    /// for finely sampled data under a coarser Nyquist.
    pub fn scaled(&self, factor: f64) -> Result<Self, DspError> {
        Self::new(
            self.f1 * factor,
            self.f2 * factor,
            self.f3 * factor,
            self.f4 * factor,
        )
    }

    /// The filter gain at frequency `f` (Hz).
    ///
    /// Exact by construction: 0 in the stopbands, 1 on the plateau
    /// (inclusive of f2 and f3), and a linear ramp strictly between f1..f2
    /// and f3..f4. Degenerate ramps (equal corners) resolve to the plateau
    /// side at the shared corner.
    pub fn gain(&self, f: f64) -> f64 {
        let f = f.abs();
        if f < self.f1 {
            0.0
        } else if f < self.f2 {
            (f - self.f1) / (self.f2 - self.f1)
        } else if f <= self.f3 {
            1.0
        } else if f <= self.f4 {
            // f > f3 here, so f4 > f3 and the division is well-defined.
            (self.f4 - f) / (self.f4 - self.f3)
        } else {
            0.0
        }
    }
}

impl std::fmt::Display for TrapezoidBand {
    /// Corner notation, e.g. `3-6-60-80`; round-trips through `FromStr`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}-{}-{}", self.f1, self.f2, self.f3, self.f4)
    }
}

impl FromStr for TrapezoidBand {
    type Err = DspError;

    /// Parses corner notation like `3-6-60-80`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split('-').collect();
        if parts.len() != 4 {
            return Err(DspError::Band(format!(
                "expected f1-f2-f3-f4 corner notation, got {s:?}"
            )));
        }
        let mut corners = [0.0; 4];
        for (i, p) in parts.iter().enumerate() {
            corners[i] = p
                .trim()
                .parse::<f64>()
                .map_err(|e| DspError::Band(format!("bad corner {p:?} in {s:?}: {e}")))?;
        }
        Self::new(corners[0], corners[1], corners[2], corners[3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gain_is_exact_on_plateau_and_stopbands() {
        let b = TrapezoidBand::new(3.0, 6.0, 60.0, 80.0).unwrap();
        assert_eq!(b.gain(30.0), 1.0);
        assert_eq!(b.gain(6.0), 1.0);
        assert_eq!(b.gain(60.0), 1.0);
        assert_eq!(b.gain(90.0), 0.0);
        assert_eq!(b.gain(2.9), 0.0);
        assert_eq!(b.gain(3.0), 0.0);
        assert_eq!(b.gain(80.0), 0.0);
    }

    #[test]
    fn ramp_midpoints_are_exactly_half() {
        let b = TrapezoidBand::new(3.0, 6.0, 60.0, 80.0).unwrap();
        assert_eq!(b.gain(4.5), 0.5);
        assert_eq!(b.gain(70.0), 0.5);
    }

    #[test]
    fn degenerate_ramps_act_as_steps() {
        let b = TrapezoidBand::new(0.0, 0.0, 8.0, 16.0).unwrap();
        assert_eq!(b.gain(0.0), 1.0);
        assert_eq!(b.gain(8.0), 1.0);
        assert_eq!(b.gain(12.0), 0.5);
        assert_eq!(b.gain(16.0), 0.0);
        let boxcar = TrapezoidBand::new(10.0, 10.0, 20.0, 20.0).unwrap();
        assert_eq!(boxcar.gain(10.0), 1.0);
        assert_eq!(boxcar.gain(20.0), 1.0);
        assert_eq!(boxcar.gain(9.999), 0.0);
        assert_eq!(boxcar.gain(20.001), 0.0);
    }

    #[test]
    fn parse_corner_notation() {
        let b: TrapezoidBand = "3-6-60-80".parse().unwrap();
        assert_eq!(b, TrapezoidBand::new(3.0, 6.0, 60.0, 80.0).unwrap());
        assert!("3-6-60".parse::<TrapezoidBand>().is_err());
        assert!("6-3-60-80".parse::<TrapezoidBand>().is_err());
        assert_eq!(b.to_string(), "3-6-60-80");
    }

    #[test]
    fn nyquist_validation() {
        let b = TrapezoidBand::new(0.0, 50.0, 250.0, 500.0).unwrap();
        assert!(b.validate_for_nyquist(250.0).is_err());
        assert!(b.validate_for_nyquist(500.0).is_ok());
        let scaled = b.scaled(0.5).unwrap();
        assert_eq!(scaled, TrapezoidBand::new(0.0, 25.0, 125.0, 250.0).unwrap());
    }
}
