use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("size mismatch: {left} != {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("level {level} has negative mandated size {size}")]
    NegativeLevel { level: usize, size: i64 },
    #[error("invalid matrix: condition ({condition}) fails at {detail}")]
    InvalidMatrix { condition: u8, detail: String },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("no admissible configuration exists; K is zero")]
    ZeroKostka,
    #[error("rational fit failed: {0}")]
    FitFailure(String),
    #[error("enumeration cap of {cap} objects exceeded")]
    EnumerationCapExceeded { cap: u64 },
    #[error("argument out of range: {0}")]
    RangeError(String),
    #[error("content is not a partition")]
    ContentNotPartition,
    #[error("inner shape is not contained in the outer shape")]
    ShapeNotContained,
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("N = {n} is too small; need N > {min}")]
    TooSmallN { n: usize, min: usize },
    #[error("non-integral result: {0}")]
    NonIntegral(String),
    #[error("no stabilization up to N = {0}")]
    NoStabilization(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub const DEFAULT_CAP: u64 = 10_000_000;

static CAP_OVERRIDE: AtomicU64 = AtomicU64::new(0);

/// Global enumeration cap: an explicit override, then `RK_CAP`, then the default.
pub fn enumeration_cap() -> u64 {
    let explicit = CAP_OVERRIDE.load(Ordering::Relaxed);
    if explicit > 0 {
        return explicit;
    }
    std::env::var("RK_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_CAP)
}

/// Override the enumeration cap for the whole process. Zero restores the default lookup.
pub fn set_enumeration_cap(cap: u64) {
    CAP_OVERRIDE.store(cap, Ordering::Relaxed);
}

/// Counts produced objects against the cap.
#[derive(Debug)]
pub(crate) struct CapCounter {
    cap: u64,
    seen: u64,
}

impl CapCounter {
    pub(crate) fn new() -> Self {
        CapCounter {
            cap: enumeration_cap(),
            seen: 0,
        }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.seen += 1;
        if self.seen > self.cap {
            Err(Error::EnumerationCapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }
}
