//! Synthetic seismic/log pair generation with controllable facies and tie
//! quality. Stands in for field data at desk scale.

mod dataset;
mod earth;
mod forward;

pub use dataset::{gen_dataset, FaciesMix, SynthConfig, TieMix};
pub use earth::{gen_earth_model, EarthModel, FaciesKind, Layer};
pub use forward::{degrade_tie, forward_model, reflectivity_series};

use thiserror::Error;

/// Errors raised by the synthetic data generator.
#[derive(Debug, Error)]
pub enum SynthError {
    #[error("model error: {0}")]
    Model(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Band(#[from] crate::dsp::DspError),

    #[error(transparent)]
    Core(#[from] crate::core::CoreError),
}
