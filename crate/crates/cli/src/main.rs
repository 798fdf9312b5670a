use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aaso_cli::analyze::{analyze, parse_area, AnalyzeRequest};
use aaso_cli::bench::run_bench;
use aaso_cli::config::{parse_config, parse_seeds, ExperimentSpec, Kind};
use aaso_cli::cover::run_cover;
use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "aaso",
    version,
    about = "Coverage enhancement and optimizer benchmarks for directional sensor networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enhance sensor orientations and write curves, layouts and results.
    Cover {
        #[command(subcommand)]
        action: CoverAction,
    },
    /// Compare optimizers on the benchmark functions.
    Bench {
        #[command(subcommand)]
        action: BenchAction,
    },
    /// Expected coverage and node requirements for random deployments.
    Analyze(AnalyzeArgs),
}

#[derive(Subcommand)]
enum CoverAction {
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Inclusive range `a..b` or a comma list; replaces the config's seeds.
        #[arg(long)]
        seeds: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BenchAction {
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Read geometry from an experiment file; flags given alongside override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Monitoring area as LxW in meters.
    #[arg(long, value_parser = parse_area, required_unless_present = "config")]
    area: Option<(f64, f64)>,
    #[arg(long, required_unless_present = "config")]
    nodes: Option<usize>,
    /// Sensing radius in meters.
    #[arg(long, required_unless_present = "config")]
    radius: Option<f64>,
    /// View angle in degrees.
    #[arg(long, required_unless_present = "config")]
    fov: Option<f64>,
    /// Target coverage in (0, 1).
    #[arg(long)]
    target: Option<f64>,
}

fn load(path: &Path, kind: Kind) -> Result<ExperimentSpec> {
    let spec = parse_config(path).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    if spec.kind != kind {
        bail!(
            "{}: kind is {:?}, this command needs {:?}",
            path.display(),
            spec.kind,
            kind
        );
    }
    Ok(spec)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Cover {
            action: CoverAction::Run { config, seeds, out },
        } => {
            let mut spec = load(&config, Kind::Cover)?;
            if let Some(s) = seeds {
                spec.seeds = parse_seeds(&s).map_err(|e| anyhow::anyhow!("--seeds: {e}"))?;
            }
            if let Some(o) = out {
                spec.output_dir = o;
            }
            let report = run_cover(&spec)?;
            for row in aaso_cli::report::summarize_runs(&report.records) {
                println!(
                    "{}: {} runs, mean final COVR {:.4} (std {:.4}), mean initial {:.4}",
                    row.algorithm, row.runs, row.mean_final_rate, row.std_final_rate, row.mean_initial_rate
                );
            }
            println!("outputs in {}", spec.output_dir.display());
            if report.failures.is_empty() {
                return Ok(ExitCode::SUCCESS);
            }
            for f in &report.failures {
                eprintln!("seed {} {}: {}", f.seed, f.algorithm, f.message);
            }
            eprintln!("failing seeds: {:?}", report.failing_seeds());
            Ok(ExitCode::FAILURE)
        }
        Command::Bench {
            action: BenchAction::Run { config, out },
        } => {
            let mut spec = load(&config, Kind::Bench)?;
            if let Some(o) = out {
                spec.output_dir = o;
            }
            for s in run_bench(&spec)? {
                println!(
                    "{} {}: best {:e} mean {:e} std {:e}",
                    s.algorithm, s.function, s.best, s.mean, s.std
                );
            }
            println!("outputs in {}", spec.output_dir.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze(args) => {
            let mut req = match &args.config {
                Some(path) => AnalyzeRequest::from_spec(&load(path, Kind::Analyze)?),
                None => AnalyzeRequest {
                    length_m: 0.0,
                    width_m: 0.0,
                    nodes: 0,
                    radius_m: 0.0,
                    fov_deg: 0.0,
                    target: None,
                },
            };
            if let Some((l, w)) = args.area {
                (req.length_m, req.width_m) = (l, w);
            }
            if let Some(n) = args.nodes {
                req.nodes = n;
            }
            if let Some(r) = args.radius {
                req.radius_m = r;
            }
            if let Some(f) = args.fov {
                req.fov_deg = f;
            }
            if args.target.is_some() {
                req.target = args.target;
            }
            print!("{}", analyze(&req)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
