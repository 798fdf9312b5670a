//! Directional-sensor area coverage on a discretized rectangle.
//!
//! A grid counts as covered when its centroid lies in at least one sensor's
//! sector. Each sensor's candidate grids (centroids within its radius) are
//! computed once, since positions never change and the candidate set is a
//! superset of the sensed set for every deviation angle.

mod analytic;
mod deployment;
mod evaluate;
mod field;
mod sensor;

pub use analytic::{expected_initial_coverage, required_nodes};
pub use deployment::{random_deployment, DeploymentScheme};
pub use evaluate::{
    cepw_fitness, count_from_fitness, coverage, coverage_naive, fitness_from_count, CoverageCounter, CoverageEvaluator,
    CoverageResult,
};
pub use field::CoverageField;
pub use sensor::{canonical_angle, is_sensed, Sensor};
