//! Closed-form coverage expectations for random deployments.

use std::fmt;

use aaso::coverage::{expected_initial_coverage, required_nodes};

use crate::config::ExperimentSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct AnalyzeRequest {
    pub length_m: f64,
    pub width_m: f64,
    pub nodes: usize,
    pub radius_m: f64,
    pub fov_deg: f64,
    pub target: Option<f64>,
}

impl AnalyzeRequest {
    pub fn from_spec(spec: &ExperimentSpec) -> Self {
        Self {
            length_m: spec.area_length_m,
            width_m: spec.area_width_m,
            nodes: spec.node_count,
            radius_m: spec.radius_m,
            fov_deg: spec.view_angle_deg,
            target: spec.target,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalyzeReport {
    pub nodes: usize,
    pub expected_coverage: f64,
    pub target: Option<f64>,
    pub required_nodes: Option<usize>,
}

impl AnalyzeReport {
    /// Nodes saved by reaching the target with the deployed count instead of
    /// deploying `required_nodes`; negative when the target is below the
    /// expectation.
    pub fn saving(&self) -> Option<i128> {
        self.required_nodes.map(|r| r as i128 - self.nodes as i128)
    }
}

impl fmt::Display for AnalyzeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "expected initial coverage for {} nodes: {:.4} ({})",
            self.nodes, self.expected_coverage, self.expected_coverage
        )?;
        if let (Some(t), Some(r), Some(s)) = (self.target, self.required_nodes, self.saving()) {
            writeln!(f, "nodes required for coverage {t}: {r}")?;
            writeln!(f, "saving versus {} deployed: {s}", self.nodes)?;
        }
        Ok(())
    }
}

pub fn analyze(req: &AnalyzeRequest) -> aaso::Result<AnalyzeReport> {
    let area = req.length_m * req.width_m;
    let alpha = req.fov_deg.to_radians();
    let expected_coverage = expected_initial_coverage(req.nodes, req.radius_m, alpha, area)?;
    let required = req
        .target
        .map(|t| required_nodes(t, req.radius_m, alpha, area))
        .transpose()?;
    Ok(AnalyzeReport {
        nodes: req.nodes,
        expected_coverage,
        target: req.target,
        required_nodes: required,
    })
}

/// `500x500` (also `X` or `×`) into length and width.
pub fn parse_area(raw: &str) -> Result<(f64, f64), String> {
    let (l, w) = raw
        .split_once(['x', 'X', '×'])
        .ok_or_else(|| format!("expected LxW, got `{raw}`"))?;
    let l: f64 = l.trim().parse().map_err(|e| format!("bad length `{l}`: {e}"))?;
    let w: f64 = w.trim().parse().map_err(|e| format!("bad width `{w}`: {e}"))?;
    if !(l > 0.0 && w > 0.0 && l.is_finite() && w.is_finite()) {
        return Err(format!("area sides must be positive, got {l} x {w}"));
    }
    Ok((l, w))
}
