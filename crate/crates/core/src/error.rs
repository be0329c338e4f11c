//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("surface projection failed for {failed} of {total} samples (limit 1%)")]
    ProjectionFailed { failed: usize, total: usize },

    #[error("shape escaped the unit cube after {0} resampling attempts")]
    ShapeOutOfBounds(usize),

    #[error("coordinate {coord} out of range for depth {depth}")]
    CoordOutOfRange { coord: u32, depth: u8 },

    #[error("token count mismatch: expected {expected}, got {got} at depth {depth}")]
    LengthIdentity { depth: u8, expected: usize, got: usize },

    #[error("code count mismatch: {got} codes for {expected} leaf nodes")]
    CodeCountMismatch { expected: usize, got: usize },

    #[error("degenerate zero vector cannot be quantized")]
    ZeroLatent,

    #[error("non-finite activation in layer {layer}")]
    NonFiniteActivation { layer: usize },

    #[error("non-finite gradient in parameter {0}")]
    NonFiniteGradient(String),

    #[error("missing corner value for voxel key {0}")]
    MissingCorner(u64),

    #[error("empty mesh")]
    EmptyMesh,

    #[error("checkpoint corrupt: {0}")]
    CorruptCheckpoint(String),

    #[error("checkpoint config mismatch: {0}")]
    ConfigMismatch(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
