//! Exact `ME(K_n)` over a range of `n` and its `a n^{3/2} + b n` fit.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::RunOptions;
use crate::error::{domain, Error, Result};
use crate::par;
use crate::roots::{complete_spectrum_fast, matching_energy};

/// Largest `n` accepted; the tridiagonal solve is `O(n^2)` per order.
pub const KN_MAX: usize = 5000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KnRow {
    pub n: usize,
    pub me: f64,
    /// `(ME - (8/3pi) n^{3/2}) / n`.
    pub remainder: f64,
    /// `ME - (a n^{3/2} + b n)` under the fitted coefficients.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KnReport {
    pub n_min: usize,
    pub n_max: usize,
    pub step: usize,
    pub a: f64,
    pub b: f64,
    pub remainder_min: f64,
    pub remainder_max: f64,
    pub rows: Vec<KnRow>,
}

/// Least squares `y ≈ a x^{3/2} + b x`.
fn fit(ns: &[usize], me: &[f64]) -> Result<(f64, f64)> {
    let a = DMatrix::from_fn(ns.len(), 2, |i, j| {
        let n = ns[i] as f64;
        if j == 0 {
            n.powf(1.5)
        } else {
            n
        }
    });
    let y = DVector::from_column_slice(me);
    let sol = a.svd(true, true).solve(&y, 1e-14).map_err(|e| Error::Resource(format!("least squares failed: {e}")))?;
    Ok((sol[0], sol[1]))
}

pub fn run_kn_asymptotics(n_min: usize, n_max: usize, step: usize, opts: RunOptions) -> Result<KnReport> {
    if step == 0 || n_min == 0 || n_min > n_max {
        return Err(domain(format!("bad range {n_min}..={n_max} step {step}")));
    }
    if n_max > KN_MAX {
        return Err(domain(format!("n_max = {n_max} exceeds {KN_MAX}")));
    }
    let ns: Vec<usize> = (n_min..=n_max).step_by(step).collect();
    if ns.len() < 2 {
        return Err(domain("the fit needs at least two orders"));
    }
    let me = par::map(&ns, opts.parallelism, |&n| complete_spectrum_fast(n).map(|s| matching_energy(&s)))
        .into_iter()
        .collect::<Result<Vec<f64>>>()?;
    let (a, b) = fit(&ns, &me)?;
    let c = 8.0 / (3.0 * PI);
    let rows: Vec<KnRow> = ns
        .iter()
        .zip(&me)
        .map(|(&n, &me)| {
            let x = n as f64;
            KnRow { n, me, remainder: (me - c * x.powf(1.5)) / x, residual: me - (a * x.powf(1.5) + b * x) }
        })
        .collect();
    let remainder_min = rows.iter().map(|r| r.remainder).fold(f64::INFINITY, f64::min);
    let remainder_max = rows.iter().map(|r| r.remainder).fold(f64::NEG_INFINITY, f64::max);
    Ok(KnReport { n_min, n_max, step, a, b, remainder_min, remainder_max, rows })
}
