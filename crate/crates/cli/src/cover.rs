//! `cover run`: deploy, enhance with each algorithm, write artifacts.

use std::path::Path;

use aaso::benchmark::PsoParams;
use aaso::coverage::{random_deployment, CoverageField, Sensor};
use aaso::enhance::{enhance_aaso, enhance_pso, enhance_vfa, EnhancementRun, VfaParams};
use aaso::RandomSource;
use anyhow::{Context, Result};
use rayon::prelude::*;

use crate::config::{AlgorithmName, ExperimentSpec};
use crate::deployment_io::{read_deployment, write_deployment};
use crate::report::{curve_csv, summarize_runs, summary_csv, write_results, write_text, ResultsDocument, RunRecord};
use crate::svg::render_layout;

#[derive(Debug, Clone, PartialEq)]
pub struct RunFailure {
    pub seed: u64,
    pub algorithm: AlgorithmName,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct CoverReport {
    pub records: Vec<RunRecord>,
    pub failures: Vec<RunFailure>,
}

impl CoverReport {
    pub fn failing_seeds(&self) -> Vec<u64> {
        let mut seeds: Vec<u64> = self.failures.iter().map(|f| f.seed).collect();
        seeds.sort_unstable();
        seeds.dedup();
        seeds
    }
}

/// Creates `dir` and proves it accepts files.
pub fn ensure_writable(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create output directory {}", dir.display()))?;
    let probe = dir.join(".write_probe");
    std::fs::write(&probe, b"").with_context(|| format!("output directory {} is not writable", dir.display()))?;
    std::fs::remove_file(&probe).ok();
    Ok(())
}

fn enhance(
    spec: &ExperimentSpec,
    algorithm: AlgorithmName,
    sensors: &[Sensor<f64>],
    field: &CoverageField<f64>,
    rng: &mut RandomSource,
) -> aaso::Result<EnhancementRun<f64>> {
    match algorithm {
        AlgorithmName::Aaso => enhance_aaso(sensors, field, &spec.optimizer_config(), rng),
        AlgorithmName::Pso => {
            let params = PsoParams::new(spec.population, spec.iterations, spec.pso_v_max_deg.to_radians());
            enhance_pso(sensors, field, &params, rng)
        }
        AlgorithmName::Vfa => {
            let params = VfaParams {
                rotation_step: spec.vfa_step_deg.to_radians(),
                max_iters: spec.iterations,
            };
            enhance_vfa(sensors, field, &params, rng)
        }
        AlgorithmName::Random => Err(aaso::Error::InvalidConfig(
            "random search is a benchmark baseline only".into(),
        )),
    }
}

struct Deployed {
    seed: u64,
    sensors: Vec<Sensor<f64>>,
    /// Generator state after the deployment draws; every algorithm starts from a copy.
    rng: RandomSource,
}

/// Runs every seed × algorithm and writes into `spec.output_dir`. Individual
/// run failures are collected, not raised; setup problems abort early.
pub fn run_cover(spec: &ExperimentSpec) -> Result<CoverReport> {
    let out = spec.output_dir.as_path();
    ensure_writable(out)?;
    let field = spec.field()?;
    let imported = match &spec.deployment_path {
        Some(p) => Some(read_deployment(p)?),
        None => None,
    };

    let mut failures = Vec::new();
    let mut deployed = Vec::new();
    for &seed in &spec.seeds {
        let mut rng = RandomSource::new(seed);
        let sensors = match &imported {
            Some(s) => Ok(s.clone()),
            None => random_deployment(&field, spec.node_count, spec.radius_m, spec.view_angle_rad(), &mut rng),
        };
        let setup = sensors.map_err(anyhow::Error::from).and_then(|sensors| {
            let title = format!("initial deployment, seed {seed}");
            write_text(
                &out.join(format!("layout_initial_{seed}.svg")),
                &render_layout(&field, &sensors, &title),
            )?;
            write_deployment(&out.join(format!("deployment_{seed}.csv")), &sensors)?;
            Ok(sensors)
        });
        match setup {
            Ok(sensors) => deployed.push(Deployed { seed, sensors, rng }),
            Err(e) => failures.extend(spec.algorithms.iter().map(|&algorithm| RunFailure {
                seed,
                algorithm,
                message: format!("{e:#}"),
            })),
        }
    }

    let jobs: Vec<(&Deployed, AlgorithmName)> = deployed
        .iter()
        .flat_map(|d| spec.algorithms.iter().map(move |&a| (d, a)))
        .collect();
    type Outcome = (u64, AlgorithmName, Result<(RunRecord, f64)>);
    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&(d, algorithm)| {
            let result = (|| {
                let run = enhance(spec, algorithm, &d.sensors, &field, &mut d.rng.clone())?;
                let seed = d.seed;
                write_text(
                    &out.join(format!("curve_{algorithm}_{seed}.csv")),
                    &curve_csv(&run.curve),
                )?;
                let finals = run.best_angles.apply(&d.sensors)?;
                let title = format!("{algorithm} final deployment, seed {seed}, COVR {:.4}", run.final_rate);
                write_text(
                    &out.join(format!("layout_final_{algorithm}_{seed}.svg")),
                    &render_layout(&field, &finals, &title),
                )?;
                let record = RunRecord {
                    algorithm: algorithm.to_string(),
                    seed,
                    initial_rate: run.initial_rate,
                    final_rate: run.final_rate,
                    angles_deg: run.best_angles.angles().iter().map(|a| a.to_degrees()).collect(),
                    evaluations: run.evaluations,
                    iterations: run.iterations(),
                };
                Ok((record, run.elapsed.as_secs_f64()))
            })();
            (d.seed, algorithm, result)
        })
        .collect();

    let mut records = Vec::new();
    let mut timings = String::from("# wall-clock seconds per run; not part of the reproducible outputs\n");
    for (seed, algorithm, result) in outcomes {
        match result {
            Ok((record, secs)) => {
                timings.push_str(&format!("{algorithm} seed {seed}: {secs:.3}\n"));
                records.push(record);
            }
            Err(e) => failures.push(RunFailure {
                seed,
                algorithm,
                message: format!("{e:#}"),
            }),
        }
    }

    write_results(&out.join("results.json"), &ResultsDocument { runs: records.clone() })?;
    write_text(&out.join("summary.csv"), &summary_csv(&summarize_runs(&records)))?;
    write_text(&out.join("timings.txt"), &timings)?;
    Ok(CoverReport { records, failures })
}
