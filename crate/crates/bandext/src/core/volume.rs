//! Trace volumes keyed by (inline, xline), stored on disk as a directory of
//! BXT1 files plus a JSON index.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{read_trace, write_trace, CoreError, Trace};

/// A map of traces over a survey grid. All members share dt and length.
#[derive(Debug, Clone, PartialEq)]
pub struct Volume {
    traces: BTreeMap<(i32, i32), Trace>,
    dt_ms: f64,
    n_samples: usize,
}

#[derive(Serialize, Deserialize)]
struct VolumeIndex {
    dt_ms: f64,
    n_samples: usize,
    entries: Vec<VolumeEntry>,
}

#[derive(Serialize, Deserialize)]
struct VolumeEntry {
    inline: i32,
    xline: i32,
    path: String,
}

impl Volume {
    pub fn new(dt_ms: f64, n_samples: usize) -> Result<Self, CoreError> {
        if !(dt_ms > 0.0) {
            return Err(CoreError::Volume(format!("dt_ms must be positive: {dt_ms}")));
        }
        if n_samples == 0 {
            return Err(CoreError::Volume("n_samples must be positive".into()));
        }
        Ok(Self {
            traces: BTreeMap::new(),
            dt_ms,
            n_samples,
        })
    }

    pub fn dt_ms(&self) -> f64 {
        self.dt_ms
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn len(&self) -> usize {
        self.traces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traces.is_empty()
    }

    pub fn insert(&mut self, inline: i32, xline: i32, trace: Trace) -> Result<(), CoreError> {
        if (trace.dt_ms - self.dt_ms).abs() > 1e-9 {
            return Err(CoreError::Volume(format!(
                "trace ({inline},{xline}) dt {} does not match volume dt {}",
                trace.dt_ms, self.dt_ms
            )));
        }
        if trace.len() != self.n_samples {
            return Err(CoreError::Volume(format!(
                "trace ({inline},{xline}) length {} does not match volume length {}",
                trace.len(),
                self.n_samples
            )));
        }
        self.traces.insert((inline, xline), trace);
        Ok(())
    }

    pub fn get(&self, inline: i32, xline: i32) -> Option<&Trace> {
        self.traces.get(&(inline, xline))
    }

    /// Keys in deterministic (sorted) order.
    pub fn keys(&self) -> Vec<(i32, i32)> {
        self.traces.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i32, i32), &Trace)> {
        self.traces.iter()
    }

    /// Writes the volume as `<dir>/il<I>_xl<X>.bxt` files plus `index.json`.
    pub fn save_dir(&self, dir: &Path) -> Result<(), CoreError> {
        fs::create_dir_all(dir)?;
        let mut entries = Vec::with_capacity(self.traces.len());
        for ((il, xl), trace) in &self.traces {
            let name = format!("il{il}_xl{xl}.bxt");
            write_trace(trace, &dir.join(&name))?;
            entries.push(VolumeEntry {
                inline: *il,
                xline: *xl,
                path: name,
            });
        }
        let index = VolumeIndex {
            dt_ms: self.dt_ms,
            n_samples: self.n_samples,
            entries,
        };
        let json = serde_json::to_string_pretty(&index)
            .map_err(|e| CoreError::Volume(format!("serialize index: {e}")))?;
        fs::write(dir.join("index.json"), json).map_err(|e| CoreError::Write {
            path: dir.join("index.json").display().to_string(),
            source: e,
        })
    }

    pub fn load_dir(dir: &Path) -> Result<Self, CoreError> {
        let index_path = dir.join("index.json");
        let text = fs::read_to_string(&index_path).map_err(|e| {
            CoreError::Volume(format!("cannot read {}: {e}", index_path.display()))
        })?;
        let index: VolumeIndex = serde_json::from_str(&text)
            .map_err(|e| CoreError::Volume(format!("cannot parse index: {e}")))?;
        let mut volume = Volume::new(index.dt_ms, index.n_samples)?;
        for entry in &index.entries {
            let trace = read_trace(&dir.join(&entry.path))?;
            volume.insert(entry.inline, entry.xline, trace)?;
        }
        Ok(volume)
    }
}
