//! Army ant search optimizer: a population minimizer over a box-bounded space.
//!
//! Each iteration the active prey (best-so-far solutions) recruit a
//! Poisson-distributed number of ants. A recruited ant scatters around each of
//! its prey with Gaussian noise and attacks the mean scatter point; an ant
//! nobody recruited follows two random companions with Cauchy noise. When the
//! best position stalls, the worse half builds a fitness-weighted bridge and
//! tries a greedy single-coordinate jump across it.

mod archive;
mod colony;
mod config;
pub mod operators;
pub mod recruit;
mod space;

pub use archive::{prey_count, raw_prey_count, Ant, PreyArchive, MAX_PREY};
pub use colony::{minimize, run, run_with, Colony, IterationReport, IterationState, RunOutcome};
pub use config::OptimizerConfig;
pub use recruit::{avg_recruits, sample_recruit_count, truncated_poisson_pmf};
pub use space::{BoundaryPolicy, SearchSpace};
