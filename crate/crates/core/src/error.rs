use thiserror::Error;

/// Errors reported by the optimizer, the benchmark harness and the coverage model.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    #[error("objective returned non-finite value {value} at iteration {iteration}")]
    NonFiniteObjective { iteration: usize, value: f64 },

    #[error("non-finite fitness in ant bridge input")]
    NonFiniteFitness,

    #[error("attack target requested with no scatter positions")]
    EmptyAttack,

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("unknown benchmark function `{0}`")]
    UnknownBenchmark(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid sensor: {0}")]
    InvalidSensor(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
