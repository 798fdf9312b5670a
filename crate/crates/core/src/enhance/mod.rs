//! Coverage enhancement: choose sensor deviation angles that maximize the
//! coverage rate, with positions held fixed.

mod search;
mod vfa;

use std::time::Duration;

pub use search::{angle_space, enhance_aaso, enhance_aaso_observed, enhance_pso};
pub use vfa::{enhance_vfa, rotation_direction, VfaParams, ATTRACTION_WEIGHT, REPULSION_WEIGHT};

use crate::coverage::DeploymentScheme;

/// Outcome of one enhancement run.
#[derive(Debug, Clone, PartialEq)]
pub struct EnhancementRun<T> {
    /// Coverage of the as-deployed angles.
    pub initial_rate: f64,
    pub final_rate: f64,
    pub best_angles: DeploymentScheme<T>,
    /// Best-so-far coverage: index 0 after initialization, then one entry per iteration.
    pub curve: Vec<f64>,
    /// Coverage evaluations spent by the search itself.
    pub evaluations: usize,
    pub elapsed: Duration,
}

impl<T> EnhancementRun<T> {
    /// Iterations performed.
    pub fn iterations(&self) -> usize {
        self.curve.len().saturating_sub(1)
    }
}
