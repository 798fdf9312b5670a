//! Test functions, baseline optimizers and a paired-seed comparison harness.

mod compare;
mod functions;
mod pso;
mod random_search;

pub use compare::{compare, summarize, Algorithm, AlgorithmSpec, RunStatistics};
pub use functions::{
    ackley, eval_benchmark, griewank, rastrigin, rosenbrock, schwefel, sphere, BenchmarkFunction, FunctionKind,
    SCHWEFEL_OFFSET, SCHWEFEL_OPTIMUM,
};
pub use pso::{pso_run, pso_run_with, PsoParams};
pub use random_search::random_search_run;
