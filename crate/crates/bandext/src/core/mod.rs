//! Domain containers: traces, co-located trace pairs, dataset manifests and
//! trace volumes, plus their on-disk formats.
//!
//! All types here are immutable after construction and safe to share
//! read-only across workers.

mod container;
mod manifest;
mod trace;
mod volume;

pub use container::{read_trace, write_trace, BXT_HEADER_LEN, BXT_MAGIC};
pub use manifest::{load_manifest, DatasetManifest, ManifestPair, Role};
pub use trace::{TieClass, Trace, TraceKind, TracePair};
pub use volume::Volume;

use thiserror::Error;

/// Errors raised by trace containers, manifests and volumes.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid trace: {0}")]
    InvalidTrace(String),

    #[error("invalid pair {well_id}: {reason}")]
    InvalidPair { well_id: String, reason: String },

    #[error("write error for {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("format error in {path}: {reason}")]
    Format { path: String, reason: String },

    #[error("data error in {path}: {reason}")]
    Data { path: String, reason: String },

    #[error("manifest error: {0}")]
    Manifest(String),

    #[error("volume error: {0}")]
    Volume(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("resample error: {0}")]
    Resample(#[from] crate::dsp::DspError),
}
