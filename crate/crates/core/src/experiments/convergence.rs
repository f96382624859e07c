//! Monte Carlo trials on `G(n, p)`: ME ratio, EMD moments and KS distance.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::Instant;

use serde::Serialize;

use super::stats::{mean, ols, std_dev, variance};
use super::{ExperimentConfig, RunOptions, TRIAL_MOMENTS};
use crate::emd::EmpiricalDistribution;
use crate::error::Result;
use crate::graph::gen_gnp;
use crate::par;
use crate::poly::{matching_polynomial, Engine};
use crate::roots::{matching_energy, matching_roots, normalize, spectrum_of_graph, DEFAULT_TOL};
use crate::seed::{label_of, SeedSpec};

/// One sampled graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialResult {
    pub n: usize,
    pub p: f64,
    pub trial_index: usize,
    pub edges: usize,
    pub me: f64,
    /// `me / (n^{3/2} sqrt(p))`.
    pub me_ratio: f64,
    pub moments: BTreeMap<u32, f64>,
    pub ks: f64,
    pub elapsed: f64,
    pub error: Option<String>,
}

/// Seed of a trial from the positions of its `n` and `p` in the config.
pub fn trial_seed(config: &ExperimentConfig, n_index: usize, p_index: usize, trial: usize) -> SeedSpec {
    SeedSpec::new(config.master_seed)
        .with(label_of(&config.name))
        .with(n_index as u64)
        .with(p_index as u64)
        .with(trial as u64)
}

pub fn run_trial(n: usize, p: f64, trial_index: usize, seed: &SeedSpec, engine: Engine) -> TrialResult {
    let start = Instant::now();
    let mut row = TrialResult {
        n,
        p,
        trial_index,
        edges: 0,
        me: f64::NAN,
        me_ratio: f64::NAN,
        moments: BTreeMap::new(),
        ks: f64::NAN,
        elapsed: 0.0,
        error: None,
    };
    let outcome = (|| -> Result<()> {
        let g = gen_gnp(n, p, seed)?;
        row.edges = g.size();
        let spectrum = match engine {
            Engine::Auto => spectrum_of_graph(&g, DEFAULT_TOL)?,
            e => matching_roots(&matching_polynomial(&g, e)?, DEFAULT_TOL)?,
        };
        let emd = EmpiricalDistribution::from_spectrum(&normalize(&spectrum, n, p)?);
        row.me = matching_energy(&spectrum);
        row.me_ratio = row.me / ((n as f64).powf(1.5) * p.sqrt());
        for k in TRIAL_MOMENTS {
            row.moments.insert(k, emd.moment(k));
        }
        row.ks = emd.ks_distance();
        Ok(())
    })();
    if let Err(e) = outcome {
        row.error = Some(e.to_string());
    }
    row.elapsed = start.elapsed().as_secs_f64();
    row
}

fn run_rows(config: &ExperimentConfig, opts: RunOptions) -> Result<Vec<TrialResult>> {
    config.validate()?;
    let mut jobs = Vec::new();
    for (ni, &n) in config.n_list.iter().enumerate() {
        for (pi, &p) in config.p_list.iter().enumerate() {
            for t in 0..config.trials {
                jobs.push((ni, n, pi, p, t));
            }
        }
    }
    let mut rows = par::map(&jobs, opts.parallelism, |&(ni, n, pi, p, t)| {
        run_trial(n, p, t, &trial_seed(config, ni, pi, t), config.engine)
    });
    rows.sort_by(|a, b| a.n.cmp(&b.n).then(a.p.total_cmp(&b.p)).then(a.trial_index.cmp(&b.trial_index)));
    Ok(rows)
}

/// Rows grouped by `(n, p)` in sorted order.
fn groups(rows: &[TrialResult]) -> Vec<&[TrialResult]> {
    rows.chunk_by(|a, b| a.n == b.n && a.p == b.p).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
}

impl Summary {
    fn of(xs: &[f64]) -> Self {
        Summary {
            mean: mean(xs),
            std: std_dev(xs),
            min: xs.iter().copied().fold(f64::INFINITY, f64::min),
            max: xs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub errors: usize,
    pub me: Summary,
    pub me_ratio: Summary,
    pub ks: Summary,
    /// Mean EMD moment per order.
    pub moments: BTreeMap<u32, f64>,
    /// Sample variance of the second EMD moment across trials.
    pub moment2_variance: f64,
}

impl Aggregate {
    fn of(rows: &[TrialResult]) -> Self {
        let ok: Vec<&TrialResult> = rows.iter().filter(|r| r.error.is_none()).collect();
        let col = |f: &dyn Fn(&TrialResult) -> f64| ok.iter().map(|r| f(r)).collect::<Vec<f64>>();
        let moments = TRIAL_MOMENTS.iter().map(|&k| (k, mean(&col(&|r| r.moments[&k])))).collect();
        Aggregate {
            n: rows[0].n,
            p: rows[0].p,
            trials: ok.len(),
            errors: rows.len() - ok.len(),
            me: Summary::of(&col(&|r| r.me)),
            me_ratio: Summary::of(&col(&|r| r.me_ratio)),
            ks: Summary::of(&col(&|r| r.ks)),
            moments,
            moment2_variance: variance(&col(&|r| r.moments[&2])),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub config: ExperimentConfig,
    pub rows: Vec<TrialResult>,
    pub aggregates: Vec<Aggregate>,
}

impl ConvergenceReport {
    pub fn aggregate(&self, n: usize, p: f64) -> Option<&Aggregate> {
        self.aggregates.iter().find(|a| a.n == n && a.p == p)
    }
}

/// Sample `G(n, p)` for every `(n, p, trial)` and summarize per `(n, p)`.
pub fn run_convergence(config: &ExperimentConfig, opts: RunOptions) -> Result<ConvergenceReport> {
    let rows = run_rows(config, opts)?;
    let aggregates = groups(&rows).into_iter().map(Aggregate::of).collect();
    Ok(ConvergenceReport { config: config.clone(), rows, aggregates })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBoundRow {
    pub n: usize,
    pub p: f64,
    pub trial_index: usize,
    pub me: f64,
    /// `sqrt(p) n^{3/2} / pi`.
    pub bound: f64,
    pub margin: f64,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBoundGroup {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub positive: usize,
    pub fraction_positive: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBoundReport {
    pub config: ExperimentConfig,
    pub rows: Vec<LowerBoundRow>,
    pub groups: Vec<LowerBoundGroup>,
}

/// Margin of `ME` over `sqrt(p) n^{3/2} / pi` per trial.
pub fn run_lower_bound(config: &ExperimentConfig, opts: RunOptions) -> Result<LowerBoundReport> {
    let trials = run_rows(config, opts)?;
    let rows: Vec<LowerBoundRow> = trials
        .iter()
        .map(|t| {
            let bound = t.p.sqrt() * (t.n as f64).powf(1.5) / PI;
            LowerBoundRow {
                n: t.n,
                p: t.p,
                trial_index: t.trial_index,
                me: t.me,
                bound,
                margin: t.me - bound,
                error: t.error.clone(),
            }
        })
        .collect();
    let groups = rows
        .chunk_by(|a, b| a.n == b.n && a.p == b.p)
        .map(|g| {
            let positive = g.iter().filter(|r| r.margin > 0.0).count();
            LowerBoundGroup {
                n: g[0].n,
                p: g[0].p,
                trials: g.len(),
                positive,
                fraction_positive: positive as f64 / g.len() as f64,
            }
        })
        .collect();
    Ok(LowerBoundReport { config: config.clone(), rows, groups })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VarianceGroup {
    pub p: f64,
    pub n: Vec<usize>,
    /// Sample variance of the second EMD moment at each `n`.
    pub variance: Vec<f64>,
    /// OLS slope of `ln variance` on `ln n`; absent when a variance is zero.
    pub slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VarianceReport {
    pub config: ExperimentConfig,
    pub rows: Vec<TrialResult>,
    pub groups: Vec<VarianceGroup>,
}

/// Decay of `Var[(1/n) Σ λ_i^2]` with `n`, one slope per `p`.
pub fn run_variance_decay(config: &ExperimentConfig, opts: RunOptions) -> Result<VarianceReport> {
    let report = run_convergence(config, opts)?;
    let mut ps: Vec<f64> = config.p_list.clone();
    ps.sort_by(f64::total_cmp);
    ps.dedup();
    let groups = ps
        .into_iter()
        .map(|p| {
            let aggs: Vec<&Aggregate> = report.aggregates.iter().filter(|a| a.p == p).collect();
            let n: Vec<usize> = aggs.iter().map(|a| a.n).collect();
            let variance: Vec<f64> = aggs.iter().map(|a| a.moment2_variance).collect();
            let slope = (n.len() >= 2 && variance.iter().all(|&v| v > 0.0)).then(|| {
                let lx: Vec<f64> = n.iter().map(|&x| (x as f64).ln()).collect();
                let ly: Vec<f64> = variance.iter().map(|v| v.ln()).collect();
                ols(&lx, &ly).0
            });
            VarianceGroup { p, n, variance, slope }
        })
        .collect();
    Ok(VarianceReport { config: config.clone(), rows: report.rows, groups })
}
