//! Army ant search optimization with a directional-sensor coverage simulator.

pub mod benchmark;
pub mod coverage;
pub mod enhance;
pub mod error;
pub mod optimizer;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result};
pub use rng::RandomSource;
pub use scalar::Scalar;

pub type Ant64 = optimizer::Ant<f64>;
pub type Ant32 = optimizer::Ant<f32>;
pub type SearchSpace64 = optimizer::SearchSpace<f64>;
pub type SearchSpace32 = optimizer::SearchSpace<f32>;
pub type RunOutcome64 = optimizer::RunOutcome<f64>;
pub type RunOutcome32 = optimizer::RunOutcome<f32>;
pub type BenchmarkFunction64 = benchmark::BenchmarkFunction<f64>;
pub type BenchmarkFunction32 = benchmark::BenchmarkFunction<f32>;
pub type Sensor64 = coverage::Sensor<f64>;
pub type Sensor32 = coverage::Sensor<f32>;
pub type CoverageField64 = coverage::CoverageField<f64>;
pub type CoverageField32 = coverage::CoverageField<f32>;
pub type DeploymentScheme64 = coverage::DeploymentScheme<f64>;
pub type EnhancementRun64 = enhance::EnhancementRun<f64>;
pub type EnhancementRun32 = enhance::EnhancementRun<f32>;
