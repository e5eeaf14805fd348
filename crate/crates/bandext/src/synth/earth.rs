//! Layered earth models drawn per facies.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::seed;

/// Rock-type category controlling the layer statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FaciesKind {
    /// Few thick layers with strong impedance contrast.
    BlockySand,
    /// Many thin layers; the hard case for resolution.
    ThinBeds,
    /// Medium layers with low impedance contrast.
    Shale,
}

impl std::fmt::Display for FaciesKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FaciesKind::BlockySand => write!(f, "BlockySand"),
            FaciesKind::ThinBeds => write!(f, "ThinBeds"),
            FaciesKind::Shale => write!(f, "Shale"),
        }
    }
}

/// One layer: a travel-time thickness and an acoustic impedance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Layer {
    pub thickness_ms: f64,
    pub impedance: f64,
}

/// An ordered stack of layers spanning at least the trace duration.
#[derive(Debug, Clone, PartialEq)]
pub struct EarthModel {
    pub layers: Vec<Layer>,
    pub facies: FaciesKind,
    pub seed: u64,
}

impl EarthModel {
    pub fn total_thickness_ms(&self) -> f64 {
        self.layers.iter().map(|l| l.thickness_ms).sum()
    }
}

/// Per-facies thickness range (ms), used by the generator and by tests that
/// re-simulate its distribution.
pub(crate) fn thickness_range(facies: FaciesKind) -> (f64, f64) {
    match facies {
        FaciesKind::BlockySand => (40.0, 150.0),
        FaciesKind::ThinBeds => (4.0, 16.0),
        FaciesKind::Shale => (20.0, 60.0),
    }
}

fn impedance_for(facies: FaciesKind, layer_index: usize, rng: &mut impl Rng) -> f64 {
    match facies {
        // Alternating sand/shale columns give strong, sign-alternating
        // reflection coefficients.
        FaciesKind::BlockySand | FaciesKind::ThinBeds => {
            if layer_index % 2 == 0 {
                rng.gen_range(2500.0..3500.0)
            } else {
                rng.gen_range(4500.0..6000.0)
            }
        }
        FaciesKind::Shale => rng.gen_range(2900.0..3300.0),
    }
}

/// Draws a layered model for `facies` spanning at least `duration_ms`.
/// Deterministic given `(facies, seed)`.
pub fn gen_earth_model(facies: FaciesKind, seed: u64, duration_ms: f64) -> EarthModel {
    let mut rng = seed::rng(seed::derive(seed, facies as u64));
    let (lo, hi) = thickness_range(facies);
    let mut layers = Vec::new();
    let mut total = 0.0;
    while total < duration_ms || layers.len() < 2 {
        let thickness_ms = rng.gen_range(lo..hi);
        let impedance = impedance_for(facies, layers.len(), &mut rng);
        layers.push(Layer {
            thickness_ms,
            impedance,
        });
        total += thickness_ms;
    }
    EarthModel {
        layers,
        facies,
        seed,
    }
}
