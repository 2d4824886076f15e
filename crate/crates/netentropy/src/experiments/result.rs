use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sample {
    pub replicate: usize,
    pub value: f64,
}

/// All samples of one series at one x-value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub series: String,
    pub x: f64,
    /// Group name for observed real-network points.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip)]
    pub samples: Vec<Sample>,
    pub count: usize,
    pub dropped: usize,
    pub mean: f64,
    pub std_dev: f64,
}

impl Row {
    pub fn new(series: impl Into<String>, x: f64, samples: Vec<Sample>, dropped: usize) -> Self {
        let values: Vec<f64> = samples.iter().map(|s| s.value).collect();
        Self {
            series: series.into(),
            x,
            label: None,
            count: samples.len(),
            dropped,
            mean: mean(&values).unwrap_or(f64::NAN),
            std_dev: std_dev(&values),
            samples,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub statistic: Option<f64>,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentResult {
    pub experiment: String,
    pub rows: Vec<Row>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl ExperimentResult {
    pub fn series(&self, name: &str) -> impl Iterator<Item = &Row> {
        let name = name.to_owned();
        self.rows.iter().filter(move |r| r.series == name)
    }

    pub fn series_names(&self) -> Vec<&str> {
        let mut names: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !names.contains(&r.series.as_str()) {
                names.push(&r.series);
            }
        }
        names
    }

    /// Writes `<series>.csv` for every series (header `x,replicate,value`)
    /// and `verdict.json` with the verdict, notes and per-row aggregates.
    pub fn write_to_dir(&self, dir: &Path) -> Result<(), Error> {
        std::fs::create_dir_all(dir).map_err(|e| Error::io_at(dir, e))?;
        let mut by_series: BTreeMap<&str, Vec<&Row>> = BTreeMap::new();
        for row in &self.rows {
            by_series.entry(&row.series).or_default().push(row);
        }
        for (series, rows) in by_series {
            let path = dir.join(format!("{series}.csv"));
            let mut w = csv::Writer::from_path(&path)?;
            w.write_record(["x", "replicate", "value"])?;
            for row in rows {
                for s in &row.samples {
                    w.write_record([
                        row.x.to_string(),
                        s.replicate.to_string(),
                        s.value.to_string(),
                    ])?;
                }
            }
            w.flush().map_err(|e| Error::io_at(&path, e))?;
        }
        let path = dir.join("verdict.json");
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(&path, text).map_err(|e| Error::io_at(&path, e))?;
        Ok(())
    }
}

pub fn mean(values: &[f64]) -> Option<f64> {
    (!values.is_empty()).then(|| values.iter().sum::<f64>() / values.len() as f64)
}

/// Sample standard deviation; zero for fewer than two values.
pub fn std_dev(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let m = mean(values).unwrap();
    let ss: f64 = values.iter().map(|v| (v - m) * (v - m)).sum();
    (ss / (values.len() - 1) as f64).sqrt()
}

/// Pearson correlation; `None` when either side has zero variance.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let mx = mean(xs)?;
    let my = mean(ys)?;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    let scale = (sxx * syy).sqrt();
    (scale > 0.0 && scale.is_finite()).then(|| sxy / scale)
}
