//! Line-oriented `key = value` experiment files.
//!
//! `#` starts a comment. Lists are comma separated. Seeds accept either a
//! list or an inclusive range `a..b`. Angles are given in degrees.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use aaso::benchmark::FunctionKind;
use aaso::coverage::CoverageField;
use aaso::optimizer::OptimizerConfig;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {n}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

fn err(line: Option<usize>, message: impl Into<String>) -> ConfigError {
    ConfigError {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Cover,
    Bench,
    Analyze,
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cover" => Ok(Kind::Cover),
            "bench" => Ok(Kind::Bench),
            "analyze" => Ok(Kind::Analyze),
            _ => Err(format!("unknown kind `{s}` (expected cover, bench or analyze)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmName {
    Aaso,
    Vfa,
    Pso,
    Random,
}

impl AlgorithmName {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgorithmName::Aaso => "aaso",
            AlgorithmName::Vfa => "vfa",
            AlgorithmName::Pso => "pso",
            AlgorithmName::Random => "random",
        }
    }
}

impl fmt::Display for AlgorithmName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgorithmName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "aaso" => Ok(AlgorithmName::Aaso),
            "vfa" => Ok(AlgorithmName::Vfa),
            "pso" => Ok(AlgorithmName::Pso),
            "random" => Ok(AlgorithmName::Random),
            _ => Err(format!("unknown algorithm `{s}`")),
        }
    }
}

/// A validated experiment description. Angles are stored in degrees as
/// written; [`ExperimentSpec::view_angle_rad`] is the single conversion.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub kind: Kind,
    pub area_length_m: f64,
    pub area_width_m: f64,
    pub grid_interval_m: f64,
    pub node_count: usize,
    /// Sensor list to use instead of a random deployment.
    pub deployment_path: Option<PathBuf>,
    pub radius_m: f64,
    pub view_angle_deg: f64,
    pub algorithms: Vec<AlgorithmName>,
    pub population: usize,
    pub iterations: usize,
    pub recruit_init: Option<f64>,
    pub attack_coeff: f64,
    pub stagnation: usize,
    pub seeds: Vec<u64>,
    pub output_dir: PathBuf,
    pub pso_v_max_deg: f64,
    pub vfa_step_deg: f64,
    pub target: Option<f64>,
    pub functions: Vec<FunctionKind>,
    pub dimension: usize,
    pub runs: usize,
    pub base_seed: u64,
    /// Velocity clamp for benchmark PSO; defaults to a fifth of each box width.
    pub pso_v_max: Option<f64>,
}

const KEYS: &[&str] = &[
    "kind",
    "area_length_m",
    "area_width_m",
    "grid_interval_m",
    "node_count",
    "deployment_path",
    "radius_m",
    "view_angle_deg",
    "algorithms",
    "population",
    "iterations",
    "recruit_init",
    "attack_coeff",
    "stagnation",
    "seeds",
    "output_dir",
    "pso_v_max_deg",
    "vfa_step_deg",
    "target",
    "functions",
    "dimension",
    "runs",
    "base_seed",
    "pso_v_max",
];

impl ExperimentSpec {
    /// Defaults for `kind`: 500 m × 500 m, 110 nodes, R = 60 m, 90°, 5 m grid,
    /// N = 50, T = 100, a = 2.
    pub fn defaults(kind: Kind) -> Self {
        let algorithms = match kind {
            Kind::Bench => vec![AlgorithmName::Aaso, AlgorithmName::Pso, AlgorithmName::Random],
            _ => vec![AlgorithmName::Aaso, AlgorithmName::Vfa, AlgorithmName::Pso],
        };
        Self {
            kind,
            area_length_m: 500.0,
            area_width_m: 500.0,
            grid_interval_m: 5.0,
            node_count: 110,
            deployment_path: None,
            radius_m: 60.0,
            view_angle_deg: 90.0,
            algorithms,
            population: 50,
            iterations: 100,
            recruit_init: None,
            attack_coeff: 2.0,
            stagnation: 5,
            seeds: (1..=10).collect(),
            output_dir: PathBuf::from("results"),
            pso_v_max_deg: 360.0,
            vfa_step_deg: 2.0,
            target: None,
            functions: FunctionKind::ALL.to_vec(),
            dimension: 30,
            runs: 50,
            base_seed: 0,
            pso_v_max: None,
        }
    }

    pub fn view_angle_rad(&self) -> f64 {
        self.view_angle_deg.to_radians()
    }

    pub fn field(&self) -> aaso::Result<CoverageField<f64>> {
        CoverageField::new(self.area_length_m, self.area_width_m, self.grid_interval_m)
    }

    pub fn optimizer_config(&self) -> OptimizerConfig {
        let mut c = OptimizerConfig::new(self.population, self.iterations)
            .with_attack_coeff(self.attack_coeff)
            .with_stagnation_threshold(self.stagnation);
        if let Some(r) = self.recruit_init {
            c = c.with_recruit_init(r);
        }
        c
    }
}

pub fn parse_config(path: &Path) -> Result<ExperimentSpec, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| err(None, format!("cannot read {}: {e}", path.display())))?;
    let mut spec = parse_str(&text)?;
    if let Some(p) = &spec.deployment_path {
        if p.is_relative() {
            if let Some(dir) = path.parent() {
                spec.deployment_path = Some(dir.join(p));
            }
        }
    }
    Ok(spec)
}

fn value<T: FromStr>(line: usize, key: &str, raw: &str) -> Result<T, ConfigError>
where
    T::Err: fmt::Display,
{
    raw.parse()
        .map_err(|e| err(Some(line), format!("invalid value `{raw}` for {key}: {e}")))
}

fn list<T: FromStr>(line: usize, key: &str, raw: &str) -> Result<Vec<T>, ConfigError>
where
    T::Err: fmt::Display,
{
    let items: Vec<T> = raw
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| value(line, key, s))
        .collect::<Result<_, _>>()?;
    if items.is_empty() {
        return Err(err(Some(line), format!("{key} needs at least one entry")));
    }
    Ok(items)
}

/// `3..7` (inclusive) or `1, 4, 9`.
pub fn parse_seeds(raw: &str) -> Result<Vec<u64>, String> {
    if let Some((a, b)) = raw.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|e| format!("bad range start `{a}`: {e}"))?;
        let b: u64 = b.trim().parse().map_err(|e| format!("bad range end `{b}`: {e}"))?;
        if b < a {
            return Err(format!("empty seed range {a}..{b}"));
        }
        return Ok((a..=b).collect());
    }
    let seeds: Vec<u64> = raw
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|e| format!("bad seed `{s}`: {e}")))
        .collect::<Result<_, String>>()?;
    if seeds.is_empty() {
        return Err("no seeds given".into());
    }
    Ok(seeds)
}

pub fn parse_str(text: &str) -> Result<ExperimentSpec, ConfigError> {
    let mut entries: Vec<(usize, &str, &str)> = Vec::new();
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, val) = content
            .split_once('=')
            .ok_or_else(|| err(Some(line), format!("expected `key = value`, found `{content}`")))?;
        let (key, val) = (key.trim(), val.trim());
        if !KEYS.contains(&key) {
            return Err(err(Some(line), format!("unknown key `{key}`")));
        }
        if let Some(prev) = seen.insert(key, line) {
            return Err(err(Some(line), format!("{key} already set on line {prev}")));
        }
        if val.is_empty() {
            return Err(err(Some(line), format!("{key} has no value")));
        }
        entries.push((line, key, val));
    }

    let (kind_line, _, kind_raw) = entries
        .iter()
        .find(|e| e.1 == "kind")
        .copied()
        .ok_or_else(|| err(None, "missing key `kind`"))?;
    let kind: Kind = value(kind_line, "kind", kind_raw)?;
    let mut s = ExperimentSpec::defaults(kind);

    for &(line, key, raw) in &entries {
        match key {
            "kind" => {}
            "area_length_m" => s.area_length_m = value(line, key, raw)?,
            "area_width_m" => s.area_width_m = value(line, key, raw)?,
            "grid_interval_m" => s.grid_interval_m = value(line, key, raw)?,
            "node_count" => s.node_count = value(line, key, raw)?,
            "deployment_path" => s.deployment_path = Some(PathBuf::from(raw)),
            "radius_m" => s.radius_m = value(line, key, raw)?,
            "view_angle_deg" => s.view_angle_deg = value(line, key, raw)?,
            "algorithms" => s.algorithms = list(line, key, raw)?,
            "population" => s.population = value(line, key, raw)?,
            "iterations" => s.iterations = value(line, key, raw)?,
            "recruit_init" => s.recruit_init = Some(value(line, key, raw)?),
            "attack_coeff" => s.attack_coeff = value(line, key, raw)?,
            "stagnation" => s.stagnation = value(line, key, raw)?,
            "seeds" => s.seeds = parse_seeds(raw).map_err(|m| err(Some(line), m))?,
            "output_dir" => s.output_dir = PathBuf::from(raw),
            "pso_v_max_deg" => s.pso_v_max_deg = value(line, key, raw)?,
            "vfa_step_deg" => s.vfa_step_deg = value(line, key, raw)?,
            "target" => s.target = Some(value(line, key, raw)?),
            "functions" => s.functions = list(line, key, raw)?,
            "dimension" => s.dimension = value(line, key, raw)?,
            "runs" => s.runs = value(line, key, raw)?,
            "base_seed" => s.base_seed = value(line, key, raw)?,
            "pso_v_max" => s.pso_v_max = Some(value(line, key, raw)?),
            _ => unreachable!("key list and match arms disagree on `{key}`"),
        }
    }

    let at = |key: &str| seen.get(key).copied();
    validate(&s, &at)?;
    Ok(s)
}

fn validate(s: &ExperimentSpec, at: &dyn Fn(&str) -> Option<usize>) -> Result<(), ConfigError> {
    let positive = |key: &str, v: f64| {
        if v.is_finite() && v > 0.0 {
            Ok(())
        } else {
            Err(err(at(key), format!("{key} must be positive, got {v}")))
        }
    };
    positive("area_length_m", s.area_length_m)?;
    positive("area_width_m", s.area_width_m)?;
    positive("grid_interval_m", s.grid_interval_m)?;
    positive("radius_m", s.radius_m)?;
    positive("attack_coeff", s.attack_coeff)?;
    positive("pso_v_max_deg", s.pso_v_max_deg)?;
    positive("vfa_step_deg", s.vfa_step_deg)?;
    if let Some(v) = s.pso_v_max {
        positive("pso_v_max", v)?;
    }
    if s.grid_interval_m > s.area_length_m.min(s.area_width_m) {
        return Err(err(
            at("grid_interval_m"),
            format!(
                "grid interval {} m exceeds the {} m × {} m area",
                s.grid_interval_m, s.area_length_m, s.area_width_m
            ),
        ));
    }
    if !(s.view_angle_deg > 0.0 && s.view_angle_deg <= 360.0) {
        return Err(err(
            at("view_angle_deg"),
            format!("view_angle_deg must lie in (0, 360], got {}", s.view_angle_deg),
        ));
    }
    if s.node_count == 0 && s.deployment_path.is_none() {
        return Err(err(at("node_count"), "node_count must be at least 1"));
    }
    if let Some(t) = s.target {
        if !(t > 0.0 && t < 1.0) {
            return Err(err(at("target"), format!("target must lie in (0, 1), got {t}")));
        }
    }
    if s.dimension == 0 {
        return Err(err(at("dimension"), "dimension must be at least 1"));
    }
    if s.kind == Kind::Bench && s.runs < 2 {
        return Err(err(at("runs"), format!("runs must be at least 2, got {}", s.runs)));
    }
    for alg in &s.algorithms {
        let allowed = match s.kind {
            Kind::Bench => *alg != AlgorithmName::Vfa,
            _ => *alg != AlgorithmName::Random,
        };
        if !allowed {
            return Err(err(
                at("algorithms"),
                format!("algorithm {alg} is not available for this kind of experiment"),
            ));
        }
    }
    s.optimizer_config().validate().map_err(|e| {
        let key = ["population", "iterations", "recruit_init", "stagnation"]
            .into_iter()
            .find(|k| at(k).is_some());
        err(key.and_then(at), e.to_string())
    })?;
    Ok(())
}
