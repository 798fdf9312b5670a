//! Result documents, curve files and summaries.
//!
//! Floats are written in shortest round-trip form so every aggregate can be
//! recomputed exactly from the per-run files.

use std::fmt::Write as _;
use std::path::Path;

use aaso::benchmark::{summarize, RunStatistics};
use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

/// One enhancement run. Shared by every algorithm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: String,
    pub seed: u64,
    pub initial_rate: f64,
    pub final_rate: f64,
    pub angles_deg: Vec<f64>,
    pub evaluations: usize,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultsDocument {
    pub runs: Vec<RunRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub algorithm: String,
    pub runs: usize,
    pub mean_final_rate: f64,
    pub std_final_rate: f64,
    pub min_final_rate: f64,
    pub max_final_rate: f64,
    pub mean_initial_rate: f64,
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

pub fn write_results(path: &Path, doc: &ResultsDocument) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    write_text(path, &text)
}

/// `iter,covr`, row 0 being the best of the initial population.
pub fn curve_csv(curve: &[f64]) -> String {
    let mut out = String::from("iter,covr\n");
    for (i, c) in curve.iter().enumerate() {
        let _ = writeln!(out, "{i},{c}");
    }
    out
}

/// Rows in order of first appearance of each algorithm. Standard deviation
/// uses the `n - 1` denominator.
pub fn summarize_runs(records: &[RunRecord]) -> Vec<SummaryRow> {
    let mut order: Vec<&str> = Vec::new();
    for r in records {
        if !order.contains(&r.algorithm.as_str()) {
            order.push(&r.algorithm);
        }
    }
    order
        .into_iter()
        .map(|alg| {
            let finals: Vec<f64> = records
                .iter()
                .filter(|r| r.algorithm == alg)
                .map(|r| r.final_rate)
                .collect();
            let initials: Vec<f64> = records
                .iter()
                .filter(|r| r.algorithm == alg)
                .map(|r| r.initial_rate)
                .collect();
            let (min, mean, std) = summarize(&finals);
            SummaryRow {
                algorithm: alg.to_string(),
                runs: finals.len(),
                mean_final_rate: mean,
                std_final_rate: std,
                min_final_rate: min,
                max_final_rate: finals.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                mean_initial_rate: initials.iter().sum::<f64>() / initials.len() as f64,
            }
        })
        .collect()
}

pub fn summary_csv(rows: &[SummaryRow]) -> String {
    let mut out =
        String::from("algorithm,runs,mean_final_rate,std_final_rate,min_final_rate,max_final_rate,mean_initial_rate\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.algorithm,
            r.runs,
            r.mean_final_rate,
            r.std_final_rate,
            r.min_final_rate,
            r.max_final_rate,
            r.mean_initial_rate
        );
    }
    out
}

pub fn bench_stats_csv(stats: &[RunStatistics<f64>], dimension: usize) -> String {
    let mut out = String::from("algorithm,function,dimension,runs,best,mean,std\n");
    for s in stats {
        let _ = writeln!(
            out,
            "{},{},{dimension},{},{},{},{}",
            s.algorithm, s.function, s.runs, s.best, s.mean, s.std
        );
    }
    out
}

/// `iter,best` for one benchmark run; iteration 1 is the first entry.
pub fn trace_csv(history: &[f64]) -> String {
    let mut out = String::from("iter,best\n");
    for (i, v) in history.iter().enumerate() {
        let _ = writeln!(out, "{},{v}", i + 1);
    }
    out
}
