//! Dataset manifests: a JSON index of seismic/log pair files plus the seed
//! and description of the run that produced them.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{read_trace, CoreError, TieClass, TracePair};

/// Dataset role of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    Train,
    Validation,
    Unassigned,
}

/// One manifest row. Paths are relative to the manifest file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestPair {
    pub well_id: String,
    pub seismic: String,
    pub log: String,
    pub tie_class: TieClass,
    pub role: Role,
}

/// The dataset index.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatasetManifest {
    pub pairs: Vec<ManifestPair>,
    pub seed: u64,
    pub description: String,
}

impl DatasetManifest {
    pub fn save(&self, path: &Path) -> Result<(), CoreError> {
        let json = serde_json::to_string_pretty(self)
            .map_err(|e| CoreError::Manifest(format!("serialize: {e}")))?;
        fs::write(path, json).map_err(|e| CoreError::Write {
            path: path.display().to_string(),
            source: e,
        })
    }

    pub fn load(path: &Path) -> Result<Self, CoreError> {
        let text = fs::read_to_string(path).map_err(|e| {
            CoreError::Manifest(format!("cannot read {}: {e}", path.display()))
        })?;
        serde_json::from_str(&text)
            .map_err(|e| CoreError::Manifest(format!("cannot parse {}: {e}", path.display())))
    }
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

/// Loads a manifest and all trace pairs it references.
///
/// Logs sampled finer than their seismic are resampled onto the seismic
/// grid, so every returned pair satisfies the alignment invariants.
pub fn load_manifest(path: &Path) -> Result<(DatasetManifest, Vec<TracePair>), CoreError> {
    let manifest = DatasetManifest::load(path)?;
    if manifest.pairs.is_empty() {
        return Err(CoreError::Manifest(format!(
            "{}: empty pair list",
            path.display()
        )));
    }
    let mut seen = BTreeSet::new();
    for p in &manifest.pairs {
        if !seen.insert(p.well_id.clone()) {
            return Err(CoreError::Manifest(format!(
                "duplicate well_id {}",
                p.well_id
            )));
        }
    }
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let mut pairs = Vec::with_capacity(manifest.pairs.len());
    for entry in &manifest.pairs {
        let seismic_path = resolve(base, &entry.seismic);
        let log_path = resolve(base, &entry.log);
        let missing = |p: &Path| {
            CoreError::Manifest(format!(
                "pair {}: missing trace file {}",
                entry.well_id,
                p.display()
            ))
        };
        if !seismic_path.is_file() {
            return Err(missing(&seismic_path));
        }
        if !log_path.is_file() {
            return Err(missing(&log_path));
        }
        let seismic = read_trace(&seismic_path)?;
        let mut log = read_trace(&log_path)?;
        if (log.dt_ms - seismic.dt_ms).abs() > 1e-9 || log.len() != seismic.len() {
            log = crate::dsp::resample_log(&log, seismic.dt_ms, seismic.len())?;
        }
        pairs.push(TracePair::new(
            entry.well_id.clone(),
            seismic,
            log,
            Some(entry.tie_class),
        )?);
    }
    Ok((manifest, pairs))
}
