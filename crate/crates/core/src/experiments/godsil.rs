//! Enumerated tree-like walk counts against matching-root power sums.

use num_bigint::BigInt;
use serde::Serialize;

use super::RunOptions;
use crate::error::{Error, Result};
use crate::graph::{gen_gnp, Graph};
use crate::par::{self, Parallelism};
use crate::poly::{matching_polynomial, Engine};
use crate::seed::{label_of, SeedSpec};
use crate::treewalk::{count_tree_like_with, power_sums, DEFAULT_WALK_BUDGET};

pub const GODSIL_MAX_N: usize = 7;
pub const GODSIL_MAX_K: usize = 8;
/// Orders up to this size are covered by every labelled graph.
const EXHAUSTIVE_N: usize = 5;
const RANDOM_P: [f64; 3] = [0.3, 0.5, 0.7];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GodsilRow {
    pub graph: usize,
    pub n: usize,
    pub edges: usize,
    pub k: usize,
    pub enumerated: String,
    pub power_sum: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GodsilReport {
    pub graphs: usize,
    pub mismatches: usize,
    pub all_equal: bool,
    #[serde(skip)]
    pub rows: Vec<GodsilRow>,
}

/// Every labelled graph on `1..=min(n_max, 5)` vertices, then `corpus_size`
/// seeded `G(n, p)` graphs with `n` cycling through `6..=n_max`.
pub fn godsil_corpus(n_max: usize, corpus_size: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max.min(EXHAUSTIVE_N) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            out.push(Graph::from_edges(n, edges)?);
        }
    }
    if n_max > EXHAUSTIVE_N {
        let span = n_max - EXHAUSTIVE_N;
        for i in 0..corpus_size {
            let n = EXHAUSTIVE_N + 1 + i % span;
            let p = RANDOM_P[i % RANDOM_P.len()];
            let spec = SeedSpec::new(seed).with(label_of("godsil")).with(i as u64);
            out.push(gen_gnp(n, p, &spec)?);
        }
    }
    Ok(out)
}

fn check(index: usize, g: &Graph, k_max: usize) -> Result<Vec<GodsilRow>> {
    let sums = power_sums(&matching_polynomial(g, Engine::Auto)?, k_max);
    (1..=k_max)
        .map(|k| {
            let walks = BigInt::from(count_tree_like_with(g, k, DEFAULT_WALK_BUDGET, Parallelism::Sequential)?);
            let ps = &sums[k - 1];
            Ok(GodsilRow {
                graph: index,
                n: g.order(),
                edges: g.size(),
                k,
                enumerated: walks.to_string(),
                power_sum: ps.to_string(),
                equal: &walks == ps,
            })
        })
        .collect()
}

/// Compare both routes for every corpus graph and every `k` in `1..=k_max`.
pub fn run_godsil_verification(
    n_max: usize,
    k_max: usize,
    corpus_size: usize,
    seed: u64,
    opts: RunOptions,
) -> Result<GodsilReport> {
    if n_max > GODSIL_MAX_N || k_max > GODSIL_MAX_K {
        return Err(Error::Resource(format!(
            "walk enumeration is limited to n <= {GODSIL_MAX_N}, k <= {GODSIL_MAX_K}"
        )));
    }
    let corpus = godsil_corpus(n_max, corpus_size, seed)?;
    let indexed: Vec<(usize, &Graph)> = corpus.iter().enumerate().collect();
    let rows: Vec<GodsilRow> = par::map(&indexed, opts.parallelism, |&(i, g)| check(i, g, k_max))
        .into_iter()
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mismatches = rows.iter().filter(|r| !r.equal).count();
    Ok(GodsilReport { graphs: corpus.len(), mismatches, all_equal: mismatches == 0, rows })
}
