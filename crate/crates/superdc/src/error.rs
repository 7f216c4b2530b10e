//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported bandwidth: half bandwidth {half_bandwidth} does not fit leaf size {leaf_size}")]
    UnsupportedBandwidth {
        half_bandwidth: usize,
        leaf_size: usize,
    },

    #[error("outlier ({i}, {j}) is not representable in the banded generators")]
    OutlierNotRepresentable { i: usize, j: usize },

    #[error("kernel pole: source point {source} coincides with target point {target}")]
    KernelPole { source: usize, target: usize },

    #[error("interlacing violated at index {0}")]
    InterlacingViolated(usize),

    #[error("eigensolver failed to converge")]
    NoConvergence,

    #[error("densification cap exceeded: n = {n}, cap = {cap}")]
    DensifyCapExceeded { n: usize, cap: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
