//! `bench run`: repeated seeded runs on the classic function suite.

use aaso::benchmark::{compare, AlgorithmSpec, BenchmarkFunction, RunStatistics};
use anyhow::Result;

use crate::config::{AlgorithmName, ExperimentSpec};
use crate::cover::ensure_writable;
use crate::report::{bench_stats_csv, trace_csv, write_text};

fn algorithm_spec(spec: &ExperimentSpec, name: AlgorithmName, function: &BenchmarkFunction<f64>) -> AlgorithmSpec {
    let config = spec.optimizer_config();
    match name {
        AlgorithmName::Aaso => AlgorithmSpec::aaso(config),
        AlgorithmName::Pso => {
            let (lo, hi) = function.kind.bounds();
            AlgorithmSpec::pso_matching(&config, spec.pso_v_max.unwrap_or(0.2 * (hi - lo)))
        }
        AlgorithmName::Random => AlgorithmSpec::random_matching(&config),
        AlgorithmName::Vfa => unreachable!("rejected by config validation"),
    }
}

/// Writes `bench_stats.csv` (one row per function × algorithm) and
/// `trace_<algorithm>_<function>_<seed>.csv` for every run.
pub fn run_bench(spec: &ExperimentSpec) -> Result<Vec<RunStatistics<f64>>> {
    let out = spec.output_dir.as_path();
    ensure_writable(out)?;
    let mut all = Vec::new();
    for &kind in &spec.functions {
        let function = BenchmarkFunction::new(kind, spec.dimension)?;
        let algorithms: Vec<AlgorithmSpec> = spec
            .algorithms
            .iter()
            .map(|&a| algorithm_spec(spec, a, &function))
            .collect();
        let stats = compare(&algorithms, std::slice::from_ref(&function), spec.runs, spec.base_seed)?;
        for s in &stats {
            for (seed, history) in s.seeds.iter().zip(&s.histories) {
                let name = format!("trace_{}_{}_{seed}.csv", s.algorithm, s.function);
                write_text(&out.join(name), &trace_csv(history))?;
            }
        }
        all.extend(stats);
    }
    write_text(&out.join("bench_stats.csv"), &bench_stats_csv(&all, spec.dimension))?;
    Ok(all)
}
