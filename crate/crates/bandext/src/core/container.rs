//! The BXT1 binary trace container.
//!
//! Little-endian layout:
//!
//! ```text
//! offset  size  field
//! 0       4     magic "BXT1"
//! 4       4     format version, u32 = 1
//! 8       4     n_samples, u32
//! 12      4     dt_ms, f32
//! 16      4     t0_ms, f32
//! 20      1     kind, u8 (0 = Seismic, 1 = Log, 2 = Broadband)
//! 21      3     reserved, zero
//! 24      4*n   samples, f32
//! ```
//!
//! Samples are stored as 32-bit floats and widened to 64-bit in memory.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use super::{CoreError, Trace, TraceKind};

pub const BXT_MAGIC: &[u8; 4] = b"BXT1";
pub const BXT_VERSION: u32 = 1;
/// Full fixed-size header, including the kind byte and reserved padding.
pub const BXT_HEADER_LEN: usize = 24;

/// Serializes a trace into the container bytes.
pub fn encode_trace(trace: &Trace) -> Vec<u8> {
    let mut buf = Vec::with_capacity(BXT_HEADER_LEN + 4 * trace.len());
    buf.extend_from_slice(BXT_MAGIC);
    buf.extend_from_slice(&BXT_VERSION.to_le_bytes());
    buf.extend_from_slice(&(trace.len() as u32).to_le_bytes());
    buf.extend_from_slice(&(trace.dt_ms as f32).to_le_bytes());
    buf.extend_from_slice(&(trace.t0_ms as f32).to_le_bytes());
    buf.push(trace.kind.to_byte());
    buf.extend_from_slice(&[0, 0, 0]);
    for s in &trace.samples {
        buf.extend_from_slice(&(*s as f32).to_le_bytes());
    }
    buf
}

/// Writes `trace` to `path` in the BXT1 container, bit-exactly.
///
/// The trace id is not stored; it is carried by the file name and restored
/// from it on read.
pub fn write_trace(trace: &Trace, path: &Path) -> Result<(), CoreError> {
    let bytes = encode_trace(trace);
    let mut f = fs::File::create(path).map_err(|e| CoreError::Write {
        path: path.display().to_string(),
        source: e,
    })?;
    f.write_all(&bytes).map_err(|e| CoreError::Write {
        path: path.display().to_string(),
        source: e,
    })?;
    Ok(())
}

fn read_u32(bytes: &[u8], at: usize) -> u32 {
    u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap())
}

fn read_f32(bytes: &[u8], at: usize) -> f32 {
    f32::from_le_bytes(bytes[at..at + 4].try_into().unwrap())
}

/// Parses container bytes; `origin` only labels errors and the trace id.
pub fn decode_trace(bytes: &[u8], origin: &str) -> Result<Trace, CoreError> {
    let fmt = |reason: String| CoreError::Format {
        path: origin.to_string(),
        reason,
    };
    if bytes.len() < BXT_HEADER_LEN {
        return Err(fmt(format!(
            "file too short for header: {} bytes",
            bytes.len()
        )));
    }
    if &bytes[0..4] != BXT_MAGIC {
        return Err(fmt(format!("bad magic {:?}", &bytes[0..4])));
    }
    let version = read_u32(bytes, 4);
    if version != BXT_VERSION {
        return Err(fmt(format!("unsupported version {version}")));
    }
    let n = read_u32(bytes, 8) as usize;
    let dt_ms = read_f32(bytes, 12) as f64;
    let t0_ms = read_f32(bytes, 16) as f64;
    let kind = TraceKind::from_byte(bytes[20])
        .ok_or_else(|| fmt(format!("unknown trace kind {}", bytes[20])))?;
    let expected = BXT_HEADER_LEN + 4 * n;
    if bytes.len() != expected {
        return Err(fmt(format!(
            "payload length mismatch: header declares {n} samples ({expected} bytes), file has {}",
            bytes.len()
        )));
    }
    let mut samples = Vec::with_capacity(n);
    for i in 0..n {
        let v = read_f32(bytes, BXT_HEADER_LEN + 4 * i) as f64;
        if !v.is_finite() {
            return Err(CoreError::Data {
                path: origin.to_string(),
                reason: format!("non-finite sample at index {i}"),
            });
        }
        samples.push(v);
    }
    Trace::new(origin, kind, dt_ms, t0_ms, samples)
}

/// Reads a BXT1 container from disk. The trace id becomes the file stem.
pub fn read_trace(path: &Path) -> Result<Trace, CoreError> {
    let bytes = fs::read(path).map_err(|e| CoreError::Format {
        path: path.display().to_string(),
        reason: format!("unreadable: {e}"),
    })?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    decode_trace(&bytes, &id)
}
