use thiserror::Error;

/// Errors raised while building domain objects or evaluating phases.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be non-negative, got {value}")]
    Negative { name: &'static str, value: f64 },

    #[error("particle wave needs a mass or a wavelength")]
    Underdetermined,

    #[error(
        "wavelength {given} m disagrees with h/(m v) = {expected} m (relative error {relative:e})"
    )]
    InconsistentWavelength {
        given: f64,
        expected: f64,
        relative: f64,
    },

    #[error("segment has zero length")]
    ZeroLengthSegment,

    #[error("beam path needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("beam path repeats vertex {0} consecutively")]
    RepeatedVertex(usize),

    #[error("path is not closed")]
    OpenPath,

    #[error("invalid interferometer geometry: {0}")]
    InvalidConfig(String),

    #[error("closed-loop interferometer has no opening")]
    NoOpening,

    #[error("opening vector has zero length")]
    ZeroOpening,

    #[error("|cos theta| = {0} exceeds 1")]
    CosineOutOfRange(f64),

    #[error("boost factor 1 + V cos(theta)/v = {0} is not positive; slow-motion regime exceeded")]
    BoostDomain(f64),

    #[error("segment index {index} out of range for path with {len} segments")]
    SegmentIndex { index: usize, len: usize },

    #[error("split parameter {0} must lie strictly inside (0, 1)")]
    SplitParameter(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
