//! Dataset assembly: configuration, facies/tie mixing, and deterministic
//! generation of the on-disk dataset.

use std::path::Path;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::{degrade_tie, forward_model, gen_earth_model, reflectivity_series};
use super::{FaciesKind, SynthError};
use crate::core::{write_trace, DatasetManifest, ManifestPair, Role, TieClass, TracePair};
use crate::dsp::TrapezoidBand;
use crate::par;
use crate::seed;

/// Tie-quality counts of the generated dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TieMix {
    pub good: usize,
    pub fair: usize,
    pub poor: usize,
}

impl TieMix {
    pub fn total(&self) -> usize {
        self.good + self.fair + self.poor
    }
}

/// Facies proportions; must sum to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaciesMix {
    pub blocky_sand: f64,
    pub thin_beds: f64,
    pub shale: f64,
}

impl FaciesMix {
    fn sum(&self) -> f64 {
        self.blocky_sand + self.thin_beds + self.shale
    }

    /// Largest-remainder apportionment of `n` pairs, so the mix is
    /// respected exactly.
    pub(crate) fn counts(&self, n: usize) -> [usize; 3] {
        let props = [self.blocky_sand, self.thin_beds, self.shale];
        let raw: Vec<f64> = props.iter().map(|p| p * n as f64).collect();
        let mut counts: Vec<usize> = raw.iter().map(|r| r.floor() as usize).collect();
        let mut rem: Vec<(usize, f64)> = raw
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r - r.floor()))
            .collect();
        rem.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
        let mut assigned: usize = counts.iter().sum();
        let mut i = 0;
        while assigned < n {
            counts[rem[i % 3].0] += 1;
            assigned += 1;
            i += 1;
        }
        [counts[0], counts[1], counts[2]]
    }
}

/// Full configuration of a synthetic dataset.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SynthConfig {
    pub n_pairs: usize,
    pub tie_mix: TieMix,
    pub facies_mix: FaciesMix,
    /// Additive Gaussian noise, as a fraction of the clean-signal RMS.
    pub noise_rms_fraction: f64,
    pub wavelet_peak_hz: f64,
    pub seismic_band: TrapezoidBand,
    pub broadband_band: TrapezoidBand,
    pub n_samples: usize,
    pub dt_ms: f64,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        Self {
            n_pairs: 12,
            tie_mix: TieMix {
                good: 9,
                fair: 2,
                poor: 1,
            },
            facies_mix: FaciesMix {
                blocky_sand: 1.0 / 3.0,
                thin_beds: 1.0 / 3.0,
                shale: 1.0 / 3.0,
            },
            noise_rms_fraction: 0.05,
            wavelet_peak_hz: 25.0,
            seismic_band: TrapezoidBand {
                f1: 3.0,
                f2: 6.0,
                f3: 60.0,
                f4: 80.0,
            },
            broadband_band: TrapezoidBand {
                f1: 0.0,
                f2: 1.0,
                f3: 160.0,
                f4: 200.0,
            },
            n_samples: 512,
            dt_ms: 2.0,
            seed: 0,
        }
    }
}

impl SynthConfig {
    pub fn validate(&self) -> Result<(), SynthError> {
        if self.n_pairs == 0 {
            return Err(SynthError::Config("n_pairs must be positive".into()));
        }
        if self.tie_mix.total() != self.n_pairs {
            return Err(SynthError::Config(format!(
                "tie mix {}+{}+{} does not sum to n_pairs {}",
                self.tie_mix.good, self.tie_mix.fair, self.tie_mix.poor, self.n_pairs
            )));
        }
        if (self.facies_mix.sum() - 1.0).abs() > 1e-9 {
            return Err(SynthError::Config(format!(
                "facies proportions sum to {}, expected 1",
                self.facies_mix.sum()
            )));
        }
        if !(0.0..1.0).contains(&self.noise_rms_fraction) {
            return Err(SynthError::Config(format!(
                "noise_rms_fraction {} outside [0, 1)",
                self.noise_rms_fraction
            )));
        }
        let nyquist = 500.0 / self.dt_ms;
        self.seismic_band.validate_for_nyquist(nyquist)?;
        self.broadband_band.validate_for_nyquist(nyquist)?;
        if self.wavelet_peak_hz <= 0.0 || self.wavelet_peak_hz >= nyquist {
            return Err(SynthError::Config(format!(
                "wavelet peak {} Hz outside (0, Nyquist)",
                self.wavelet_peak_hz
            )));
        }
        Ok(())
    }

    pub fn from_json_file(path: &Path) -> Result<Self, SynthError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SynthError::Config(format!("cannot read {}: {e}", path.display())))?;
        let cfg: SynthConfig = serde_json::from_str(&text)
            .map_err(|e| SynthError::Config(format!("cannot parse {}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Generates one pair (without degradation labels applied to disk yet).
fn gen_pair(cfg: &SynthConfig, index: usize, facies: FaciesKind, tie: TieClass) -> Result<TracePair, SynthError> {
    let pair_seed = seed::derive2(cfg.seed, 0xDA7A, index as u64);
    let duration = cfg.n_samples as f64 * cfg.dt_ms;
    // Margin so interfaces keep appearing right up to the trace end.
    let model = gen_earth_model(facies, pair_seed, duration + 160.0);
    let refl = reflectivity_series(&model, cfg.dt_ms, cfg.n_samples)?;
    let well_id = format!("W{:02}", index + 1);
    let good = forward_model(&refl, cfg, seed::derive(pair_seed, 1), &well_id)?;
    Ok(degrade_tie(&good, tie, seed::derive(pair_seed, 2)))
}

/// Deterministic facies/tie assignment per pair index.
pub(crate) fn assignments(cfg: &SynthConfig) -> Vec<(FaciesKind, TieClass)> {
    let [nb, nt, ns] = cfg.facies_mix.counts(cfg.n_pairs);
    let mut facies = Vec::with_capacity(cfg.n_pairs);
    facies.extend(std::iter::repeat(FaciesKind::BlockySand).take(nb));
    facies.extend(std::iter::repeat(FaciesKind::ThinBeds).take(nt));
    facies.extend(std::iter::repeat(FaciesKind::Shale).take(ns));
    let mut ties = Vec::with_capacity(cfg.n_pairs);
    ties.extend(std::iter::repeat(TieClass::Good).take(cfg.tie_mix.good));
    ties.extend(std::iter::repeat(TieClass::Fair).take(cfg.tie_mix.fair));
    ties.extend(std::iter::repeat(TieClass::Poor).take(cfg.tie_mix.poor));
    // Shuffle independently so facies and tie quality decorrelate.
    facies.shuffle(&mut seed::rng(seed::derive(cfg.seed, 0xFAC1)));
    ties.shuffle(&mut seed::rng(seed::derive(cfg.seed, 0x71E5)));
    facies.into_iter().zip(ties).collect()
}

/// Generates the full dataset: pair traces as BXT1 files plus
/// `manifest.json` in `out_dir`. Fully deterministic from the config.
pub fn gen_dataset(cfg: &SynthConfig, out_dir: &Path) -> Result<DatasetManifest, SynthError> {
    cfg.validate()?;
    std::fs::create_dir_all(out_dir).map_err(crate::core::CoreError::Io)?;
    let plan = assignments(cfg);
    let results = par::map_indexed(plan.len(), |i| {
        let (facies, tie) = plan[i];
        gen_pair(cfg, i, facies, tie)
    });

    let mut pairs = Vec::with_capacity(results.len());
    for r in results {
        pairs.push(r?);
    }

    let mut entries = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        let seismic_name = format!("{}_seismic.bxt", pair.well_id);
        let log_name = format!("{}_log.bxt", pair.well_id);
        write_trace(&pair.seismic, &out_dir.join(&seismic_name))?;
        write_trace(&pair.log, &out_dir.join(&log_name))?;
        entries.push(ManifestPair {
            well_id: pair.well_id.clone(),
            seismic: seismic_name,
            log: log_name,
            tie_class: pair.tie_class.expect("generated pairs are labeled"),
            role: Role::Unassigned,
        });
    }
    let manifest = DatasetManifest {
        pairs: entries,
        seed: cfg.seed,
        description: format!(
            "synthetic dataset: {} pairs, tie mix {}/{}/{}, wavelet {} Hz, band {}",
            cfg.n_pairs,
            cfg.tie_mix.good,
            cfg.tie_mix.fair,
            cfg.tie_mix.poor,
            cfg.wavelet_peak_hz,
            cfg.seismic_band
        ),
    };
    manifest.save(&out_dir.join("manifest.json"))?;
    Ok(manifest)
}
