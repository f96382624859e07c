//! CSV tables and JSON sidecars with a frozen layout.
//!
//! Floats are written with 17 significant digits in scientific notation so
//! that a table read back reproduces every value bit for bit.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::{
    ConvergenceReport, ExperimentConfig, GodsilReport, KnReport, LowerBoundReport, VarianceReport, TRIAL_MOMENTS,
};
use crate::error::{Error, Result};

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn table(header: &[String], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Resource(format!("csv: {e}"));
    w.write_record(header).map_err(csv_err)?;
    for r in rows {
        w.write_record(&r).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Resource(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn owned(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn trial_header(include_timing: bool) -> Vec<String> {
    let mut h = owned(&["n", "p", "trial", "edges", "me", "me_ratio"]);
    h.extend(TRIAL_MOMENTS.iter().map(|k| format!("m{k}")));
    h.extend(owned(&["ks", "error"]));
    if include_timing {
        h.push("elapsed".into());
    }
    h
}

pub fn trials_csv(report: &ConvergenceReport) -> Result<String> {
    trial_rows_csv(&report.config, &report.rows)
}

fn trial_rows_csv(config: &ExperimentConfig, rows: &[super::TrialResult]) -> Result<String> {
    let timing = config.include_timing;
    table(
        &trial_header(timing),
        rows.iter().map(|r| {
            let mut v = vec![
                r.n.to_string(),
                fmt_f64(r.p),
                r.trial_index.to_string(),
                r.edges.to_string(),
                fmt_f64(r.me),
                fmt_f64(r.me_ratio),
            ];
            v.extend(TRIAL_MOMENTS.iter().map(|k| fmt_f64(r.moments.get(k).copied().unwrap_or(f64::NAN))));
            v.push(fmt_f64(r.ks));
            v.push(r.error.clone().unwrap_or_default());
            if timing {
                v.push(fmt_f64(r.elapsed));
            }
            v
        }),
    )
}

pub fn lower_bound_csv(report: &LowerBoundReport) -> Result<String> {
    table(
        &owned(&["n", "p", "trial", "me", "bound", "margin", "error"]),
        report.rows.iter().map(|r| {
            vec![
                r.n.to_string(),
                fmt_f64(r.p),
                r.trial_index.to_string(),
                fmt_f64(r.me),
                fmt_f64(r.bound),
                fmt_f64(r.margin),
                r.error.clone().unwrap_or_default(),
            ]
        }),
    )
}

pub fn variance_csv(report: &VarianceReport) -> Result<String> {
    trial_rows_csv(&report.config, &report.rows)
}

pub fn kn_csv(report: &KnReport) -> Result<String> {
    table(
        &owned(&["n", "me", "remainder", "residual"]),
        report.rows.iter().map(|r| vec![r.n.to_string(), fmt_f64(r.me), fmt_f64(r.remainder), fmt_f64(r.residual)]),
    )
}

pub fn godsil_csv(report: &GodsilReport) -> Result<String> {
    table(
        &owned(&["graph", "n", "edges", "k", "enumerated", "power_sum", "equal"]),
        report.rows.iter().map(|r| {
            vec![
                r.graph.to_string(),
                r.n.to_string(),
                r.edges.to_string(),
                r.k.to_string(),
                r.enumerated.clone(),
                r.power_sum.clone(),
                r.equal.to_string(),
            ]
        }),
    )
}

#[derive(Serialize)]
struct ConvergenceSummary<'a> {
    config: &'a ExperimentConfig,
    aggregates: &'a [super::Aggregate],
}

pub fn convergence_json(report: &ConvergenceReport) -> Result<String> {
    json(&ConvergenceSummary { config: &report.config, aggregates: &report.aggregates })
}

#[derive(Serialize)]
struct LowerBoundSummary<'a> {
    config: &'a ExperimentConfig,
    groups: &'a [super::LowerBoundGroup],
}

pub fn lower_bound_json(report: &LowerBoundReport) -> Result<String> {
    json(&LowerBoundSummary { config: &report.config, groups: &report.groups })
}

#[derive(Serialize)]
struct VarianceSummary<'a> {
    config: &'a ExperimentConfig,
    groups: &'a [super::VarianceGroup],
}

pub fn variance_json(report: &VarianceReport) -> Result<String> {
    json(&VarianceSummary { config: &report.config, groups: &report.groups })
}

#[derive(Serialize)]
struct KnSummary {
    n_min: usize,
    n_max: usize,
    step: usize,
    a: f64,
    b: f64,
    remainder_min: f64,
    remainder_max: f64,
}

pub fn kn_json(r: &KnReport) -> Result<String> {
    json(&KnSummary {
        n_min: r.n_min,
        n_max: r.n_max,
        step: r.step,
        a: r.a,
        b: r.b,
        remainder_min: r.remainder_min,
        remainder_max: r.remainder_max,
    })
}

pub fn godsil_json(r: &GodsilReport) -> Result<String> {
    json(r)
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// The JSON sidecar sits next to the CSV with a `.json` extension.
pub fn sidecar_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("json")
}

/// Write `csv` to `path` and `json` to its sidecar; returns the sidecar path.
pub fn write_pair(path: &Path, csv: &str, json: &str) -> Result<PathBuf> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let side = sidecar_path(path);
    fs::write(path, csv)?;
    fs::write(&side, json)?;
    Ok(side)
}
