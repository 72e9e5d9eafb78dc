//! Flat `key = value` experiment configuration.
//!
//! Unknown keys are rejected so typos fail loudly instead of silently
//! falling back to defaults. Command-line flags may override `out`, `seed`,
//! and `target_patch` after loading.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::trajectory::synth::{Polygon, Regime, SynthConfig};
use crate::trajectory::SubsampleStrategy;

/// Effective settings for one command run.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub input: Option<PathBuf>,
    pub maintenance: Option<PathBuf>,
    pub out: PathBuf,
    pub subsample_target: usize,
    pub subsample_strategy: SubsampleStrategy,
    pub image_resolution: usize,
    pub delta: f64,
    pub inverse_regularization: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub train_fraction: f64,
    pub seed: u64,
    pub target_patch: Option<u32>,
    pub day: Option<i64>,
    pub patch: Option<u32>,
    pub maintenance_date: Option<i64>,
    pub shuffle_labels: bool,
    pub days_per_regime: usize,
    pub steps_per_day: usize,
    pub step_length_means: Vec<f64>,
    pub turning_concentrations: Vec<f64>,
    pub patches: Vec<Polygon>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            input: None,
            maintenance: None,
            out: PathBuf::from("out"),
            subsample_target: 400,
            subsample_strategy: SubsampleStrategy::Maxmin,
            image_resolution: 20,
            delta: 1e-3,
            inverse_regularization: 1.0,
            tol: 1e-6,
            max_iter: 5000,
            train_fraction: 0.65,
            seed: 0,
            target_patch: None,
            day: None,
            patch: None,
            maintenance_date: None,
            shuffle_labels: false,
            days_per_regime: 25,
            steps_per_day: 200,
            step_length_means: vec![1.0, 2.5],
            turning_concentrations: vec![4.0, 4.0],
            patches: vec![Polygon::rectangle(0.0, 0.0, 30.0, 30.0)
                .expect("default rectangle is valid")],
        }
    }
}

impl ExperimentConfig {
    /// The generator settings encoded in this config.
    pub fn synth_config(&self) -> Result<SynthConfig> {
        if self.step_length_means.len() != self.turning_concentrations.len() {
            return Err(Error::validation(
                "step_length_means and turning_concentrations must have equal length",
            ));
        }
        let regimes = self
            .step_length_means
            .iter()
            .zip(&self.turning_concentrations)
            .map(|(&step_length_mean, &turning_angle_concentration)| Regime {
                step_length_mean,
                turning_angle_concentration,
            })
            .collect();
        Ok(SynthConfig {
            patch_polygons: self.patches.clone(),
            days_per_regime: self.days_per_regime,
            steps_per_day: self.steps_per_day,
            regimes,
            seed: self.seed,
        })
    }

    /// Flat echo of every effective setting, for reports.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            map.insert(k.to_string(), v);
        };
        let opt = |v: &Option<PathBuf>| {
            v.as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_default()
        };
        put("input", opt(&self.input));
        put("maintenance", opt(&self.maintenance));
        put("out", self.out.display().to_string());
        put("subsample_target", self.subsample_target.to_string());
        put(
            "subsample_strategy",
            match self.subsample_strategy {
                SubsampleStrategy::Stride => "stride".into(),
                SubsampleStrategy::Maxmin => "maxmin".into(),
            },
        );
        put("image_resolution", self.image_resolution.to_string());
        put("delta", self.delta.to_string());
        put(
            "inverse_regularization",
            self.inverse_regularization.to_string(),
        );
        put("tol", self.tol.to_string());
        put("max_iter", self.max_iter.to_string());
        put("train_fraction", self.train_fraction.to_string());
        put("seed", self.seed.to_string());
        if let Some(v) = self.target_patch {
            put("target_patch", v.to_string());
        }
        if let Some(v) = self.day {
            put("day", v.to_string());
        }
        if let Some(v) = self.patch {
            put("patch", v.to_string());
        }
        if let Some(v) = self.maintenance_date {
            put("maintenance_date", v.to_string());
        }
        put("shuffle_labels", self.shuffle_labels.to_string());
        put("days_per_regime", self.days_per_regime.to_string());
        put("steps_per_day", self.steps_per_day.to_string());
        put(
            "step_length_means",
            self.step_length_means
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        put(
            "turning_concentrations",
            self.turning_concentrations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        for (i, p) in self.patches.iter().enumerate() {
            let verts = p
                .vertices()
                .iter()
                .map(|(x, y)| format!("{x},{y}"))
                .collect::<Vec<_>>()
                .join(" ");
            map.insert(format!("patch{}", i + 1), verts);
        }
        map
    }
}

fn parse_num<T: std::str::FromStr>(line: usize, key: &str, raw: &str) -> Result<T> {
    raw.parse()
        .map_err(|_| Error::parse(line, format!("bad value for {key}: `{raw}`")))
}

fn parse_f64_list(line: usize, key: &str, raw: &str) -> Result<Vec<f64>> {
    let values: Vec<f64> = raw
        .split_whitespace()
        .map(|t| parse_num(line, key, t))
        .collect::<Result<_>>()?;
    if values.is_empty() {
        return Err(Error::parse(line, format!("{key} must list values")));
    }
    Ok(values)
}

fn parse_polygon(line: usize, key: &str, raw: &str) -> Result<Polygon> {
    let mut vertices = Vec::new();
    for token in raw.split_whitespace() {
        let (x, y) = token
            .split_once(',')
            .ok_or_else(|| Error::parse(line, format!("{key}: expected x,y pairs")))?;
        vertices.push((parse_num(line, key, x)?, parse_num(line, key, y)?));
    }
    Polygon::new(vertices)
}

/// Parses config text. Lines are `key = value`; `#` starts a comment; blank
/// lines are skipped; keys may appear once.
pub fn parse_config(text: &str) -> Result<ExperimentConfig> {
    let mut cfg = ExperimentConfig::default();
    let mut seen = std::collections::BTreeSet::new();
    let mut patch_keys: BTreeMap<usize, Polygon> = BTreeMap::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| Error::parse(line, "expected `key = value`".to_string()))?;
        let key = key.trim();
        let value = value.trim();
        if !seen.insert(key.to_string()) {
            return Err(Error::parse(line, format!("duplicate key `{key}`")));
        }
        match key {
            "input" => cfg.input = Some(PathBuf::from(value)),
            "maintenance" => cfg.maintenance = Some(PathBuf::from(value)),
            "out" => cfg.out = PathBuf::from(value),
            "subsample_target" => cfg.subsample_target = parse_num(line, key, value)?,
            "subsample_strategy" => {
                cfg.subsample_strategy = value
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad strategy `{value}`")))?
            }
            "image_resolution" => cfg.image_resolution = parse_num(line, key, value)?,
            "delta" => cfg.delta = parse_num(line, key, value)?,
            "inverse_regularization" => {
                cfg.inverse_regularization = parse_num(line, key, value)?
            }
            "tol" => cfg.tol = parse_num(line, key, value)?,
            "max_iter" => cfg.max_iter = parse_num(line, key, value)?,
            "train_fraction" => cfg.train_fraction = parse_num(line, key, value)?,
            "seed" => cfg.seed = parse_num(line, key, value)?,
            "target_patch" => cfg.target_patch = Some(parse_num(line, key, value)?),
            "day" => cfg.day = Some(parse_num(line, key, value)?),
            "patch" => cfg.patch = Some(parse_num(line, key, value)?),
            "maintenance_date" => cfg.maintenance_date = Some(parse_num(line, key, value)?),
            "days_per_regime" => cfg.days_per_regime = parse_num(line, key, value)?,
            "steps_per_day" => cfg.steps_per_day = parse_num(line, key, value)?,
            "step_length_means" => cfg.step_length_means = parse_f64_list(line, key, value)?,
            "turning_concentrations" => {
                cfg.turning_concentrations = parse_f64_list(line, key, value)?
            }
            _ => {
                if let Some(num) = key.strip_prefix("patch").and_then(|s| s.parse::<usize>().ok())
                {
                    if num == 0 {
                        return Err(Error::parse(line, "patch numbering starts at 1"));
                    }
                    patch_keys.insert(num, parse_polygon(line, key, value)?);
                } else {
                    return Err(Error::parse(line, format!("unknown key `{key}`")));
                }
            }
        }
    }
    if !patch_keys.is_empty() {
        let expected: Vec<usize> = (1..=patch_keys.len()).collect();
        let got: Vec<usize> = patch_keys.keys().copied().collect();
        if got != expected {
            return Err(Error::validation(format!(
                "patch keys must be contiguous from patch1; got {got:?}"
            )));
        }
        cfg.patches = patch_keys.into_values().collect();
    }
    Ok(cfg)
}

/// Loads and parses a config file.
pub fn load_config(path: &std::path::Path) -> Result<ExperimentConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    parse_config(&text)
}
