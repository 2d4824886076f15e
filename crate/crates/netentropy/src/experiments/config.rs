use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    ErVsNw,
    ConvexitySurface,
    RealNetwork,
    AplVsEntropy,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::ErVsNw => "er_vs_nw",
            ExperimentKind::ConvexitySurface => "convexity_surface",
            ExperimentKind::RealNetwork => "real_network",
            ExperimentKind::AplVsEntropy => "apl_vs_entropy",
        }
    }
}

fn default_rewire_p() -> f64 {
    0.1
}

fn default_p_values() -> Vec<f64> {
    vec![0.1, 0.2, 0.3]
}

fn default_alpha() -> f64 {
    0.5
}

fn default_expected_sizes() -> Vec<usize> {
    vec![309, 162, 89, 142]
}

fn default_group_count() -> usize {
    4
}

fn default_proximity_tolerance() -> f64 {
    0.15
}

fn default_correlation_threshold() -> f64 {
    0.8
}

/// Declarative description of one experiment run, read from TOML.
///
/// Replicate `r` of every cell uses seed `base_seed + r` (wrapping).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub n_range: Vec<usize>,
    pub mean_degree: f64,
    pub seeds: usize,
    #[serde(default)]
    pub base_seed: u64,
    /// Rewiring probability of the small-world ensembles.
    #[serde(default = "default_rewire_p")]
    pub rewire_p: f64,
    /// Rewiring probabilities mixed into the APL-vs-entropy ensemble.
    #[serde(default = "default_p_values")]
    pub p_values: Vec<f64>,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    /// Whole-network edge list, split with `membership_path`.
    #[serde(default)]
    pub dataset_path: Option<PathBuf>,
    #[serde(default)]
    pub membership_path: Option<PathBuf>,
    /// Groups to extract; empty selects the `group_count` largest.
    #[serde(default)]
    pub group_ids: Vec<String>,
    #[serde(default = "default_group_count")]
    pub group_count: usize,
    /// One edge list per group, as an alternative to dataset + membership.
    #[serde(default)]
    pub group_paths: Vec<PathBuf>,
    /// Reference group sizes. Listed groups are compared in order; groups
    /// picked by size are compared against these sorted largest first.
    #[serde(default = "default_expected_sizes")]
    pub expected_sizes: Vec<usize>,
    /// Allowed relative gap between observed and simulated entropy.
    #[serde(default = "default_proximity_tolerance")]
    pub proximity_tolerance: f64,
    #[serde(default = "default_correlation_threshold")]
    pub correlation_threshold: f64,
}

impl ExperimentConfig {
    pub fn new(experiment: ExperimentKind, n_range: Vec<usize>, mean_degree: f64, seeds: usize) -> Self {
        Self {
            experiment,
            n_range,
            mean_degree,
            seeds,
            base_seed: 0,
            rewire_p: default_rewire_p(),
            p_values: default_p_values(),
            alpha: default_alpha(),
            dataset_path: None,
            membership_path: None,
            group_ids: Vec::new(),
            group_count: default_group_count(),
            group_paths: Vec::new(),
            expected_sizes: default_expected_sizes(),
            proximity_tolerance: default_proximity_tolerance(),
            correlation_threshold: default_correlation_threshold(),
        }
    }

    /// Parses TOML; relative dataset paths resolve against `base_dir`.
    pub fn from_toml(text: &str, base_dir: &Path) -> Result<Self, Error> {
        let mut cfg: ExperimentConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let resolve = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base_dir.join(&*p);
            }
        };
        cfg.dataset_path.as_mut().map(resolve);
        cfg.membership_path.as_mut().map(resolve);
        cfg.group_paths.iter_mut().for_each(resolve);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io_at(path, e))?;
        Self::from_toml(&text, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn validate(&self) -> Result<(), Error> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.seeds == 0 {
            return fail("seeds must be at least 1".into());
        }
        let Some(&min_n) = self.n_range.iter().min() else {
            return fail("n_range must not be empty".into());
        };
        if !(self.mean_degree > 0.0) || self.mean_degree >= min_n as f64 {
            return fail(format!(
                "mean_degree {} must be positive and below the smallest n ({min_n})",
                self.mean_degree
            ));
        }
        if !(0.0..=1.0).contains(&self.rewire_p) {
            return fail(format!("rewire_p {} outside [0, 1]", self.rewire_p));
        }
        if let Some(p) = self.p_values.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return fail(format!("p_values entry {p} outside [0, 1]"));
        }
        if !(self.alpha > 0.0) || self.alpha == 1.0 || !self.alpha.is_finite() {
            return fail(format!("alpha {} must be positive and not 1", self.alpha));
        }
        match self.experiment {
            ExperimentKind::AplVsEntropy if self.p_values.is_empty() => {
                fail("p_values must not be empty".into())
            }
            ExperimentKind::RealNetwork
                if self.group_paths.is_empty()
                    && (self.dataset_path.is_none() || self.membership_path.is_none()) =>
            {
                fail("real_network needs group_paths or dataset_path + membership_path".into())
            }
            _ => Ok(()),
        }
    }

    /// Even lattice degree closest to `mean_degree` (at least 2).
    pub fn lattice_degree(&self) -> usize {
        let half = (self.mean_degree / 2.0).round().max(1.0) as usize;
        2 * half
    }

    pub fn replicate_seed(&self, replicate: usize) -> u64 {
        self.base_seed.wrapping_add(replicate as u64)
    }
}
