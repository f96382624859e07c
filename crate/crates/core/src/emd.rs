//! Empirical matching distribution: the step CDF of the normalized roots
//! `λ_i = x_i / sqrt(n p)`, and its comparison with the semicircle law.

use crate::roots::NormalizedSpectrum;
use crate::semicircle;

#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalDistribution {
    sample: Vec<f64>,
}

impl EmpiricalDistribution {
    pub fn from_spectrum(ns: &NormalizedSpectrum) -> Self {
        Self::from_sample(ns.lambdas.clone())
    }

    pub fn from_sample(mut sample: Vec<f64>) -> Self {
        sample.sort_by(f64::total_cmp);
        EmpiricalDistribution { sample }
    }

    pub fn sample(&self) -> &[f64] {
        &self.sample
    }

    pub fn len(&self) -> usize {
        self.sample.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sample.is_empty()
    }

    /// `F_n(x)`: fraction of the sample `<= x`.
    pub fn eval(&self, x: f64) -> f64 {
        if self.sample.is_empty() {
            return 0.0;
        }
        self.sample.partition_point(|&s| s <= x) as f64 / self.len() as f64
    }

    /// `F_n(x-)`: fraction of the sample `< x`.
    pub fn eval_left(&self, x: f64) -> f64 {
        if self.sample.is_empty() {
            return 0.0;
        }
        self.sample.partition_point(|&s| s < x) as f64 / self.len() as f64
    }

    /// `(1/n) Σ λ_i^k`.
    pub fn moment(&self, k: u32) -> f64 {
        if self.sample.is_empty() {
            return 0.0;
        }
        self.sample.iter().map(|x| x.powi(k as i32)).sum::<f64>() / self.len() as f64
    }

    /// `(1/n) Σ |λ_i|`, which equals `ME / (n^{3/2} p^{1/2})`.
    pub fn mean_abs(&self) -> f64 {
        if self.sample.is_empty() {
            return 0.0;
        }
        self.sample.iter().map(|x| x.abs()).sum::<f64>() / self.len() as f64
    }

    /// One-sample Kolmogorov–Smirnov distance to the semicircle CDF. The
    /// supremum is attained at a jump, so only sample points are checked,
    /// on both sides of each (tied values form a single jump).
    pub fn ks_distance(&self) -> f64 {
        let n = self.len() as f64;
        let mut d: f64 = 0.0;
        let mut i = 0;
        while i < self.sample.len() {
            let x = self.sample[i];
            let mut j = i;
            while j < self.sample.len() && self.sample[j] == x {
                j += 1;
            }
            let f = semicircle::cdf(x);
            d = d.max((j as f64 / n - f).abs()).max((i as f64 / n - f).abs());
            i = j;
        }
        d
    }
}
