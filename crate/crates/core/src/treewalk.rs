//! Closed walks, their decomposition into minimal closed walks ("factors"),
//! and tree-like walks: those whose factors all have length two. The number
//! of tree-like closed walks of length `k` equals the `k`-th power sum of
//! the matching roots, which [`power_sums`] computes exactly from the counts.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::par::{self, Parallelism};
use crate::poly::MatchingPolynomial;

/// Default cap on the estimated number of walks `n * Δ^k` enumerated.
pub const DEFAULT_WALK_BUDGET: f64 = 2e9;

/// A closed walk `w_0, w_1, .., w_k` with `w_k = w_0`; its length is `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    vertices: Vec<usize>,
}

impl ClosedWalk {
    /// Checks closure and that no step stays in place.
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        match (vertices.first(), vertices.last()) {
            (Some(a), Some(b)) if a == b => {}
            _ => return Err(domain("a closed walk must start and end at the same vertex")),
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(domain("a walk step must move along an edge"));
        }
        Ok(ClosedWalk { vertices })
    }

    /// Like [`ClosedWalk::new`], and every step must be an edge of `g`.
    pub fn in_graph(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let w = Self::new(vertices)?;
        if let Some(s) = w.vertices.windows(2).find(|s| !g.has_edge(s[0], s[1])) {
            return Err(domain(format!("({}, {}) is not an edge", s[0], s[1])));
        }
        Ok(w)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_minimal(&self) -> bool {
        let inner = &self.vertices[..self.len()];
        inner.iter().enumerate().all(|(i, v)| !inner[..i].contains(v))
    }
}

/// Repeatedly cut out the first minimal closed walk: the segment
/// `w_i .. w_j` for the smallest `j` whose vertex already occurred at some
/// `i < j`. The walk shrinks to `w_0 .. w_i w_{j+1} ..` until it has length 0.
pub fn decompose_factors(walk: &ClosedWalk) -> Vec<ClosedWalk> {
    let mut w = walk.vertices.clone();
    let mut out = Vec::new();
    let mut first_seen: HashMap<usize, usize> = HashMap::new();
    while w.len() > 1 {
        first_seen.clear();
        let (i, j) = w
            .iter()
            .enumerate()
            .find_map(|(j, &v)| first_seen.insert(v, j).map(|i| (i, j)))
            .expect("a closed walk repeats its first vertex");
        out.push(ClosedWalk { vertices: w[i..=j].to_vec() });
        w.drain(i + 1..=j);
    }
    out
}

pub fn is_tree_like(walk: &ClosedWalk) -> bool {
    decompose_factors(walk).iter().all(|f| f.len() == 2)
}

/// Count tree-like closed walks of length `k` by enumerating every closed
/// walk of length `k` and classifying it.
pub fn count_tree_like(g: &Graph, k: usize) -> Result<u128> {
    count_tree_like_with(g, k, DEFAULT_WALK_BUDGET, Parallelism::Auto)
}

pub fn count_tree_like_with(g: &Graph, k: usize, budget: f64, mode: Parallelism) -> Result<u128> {
    let n = g.order();
    let estimate = n as f64 * (g.max_degree() as f64).powi(k as i32);
    if estimate > budget {
        return Err(Error::Resource(format!(
            "walk enumeration needs about {estimate:.3e} steps, budget is {budget:.3e}"
        )));
    }
    if k == 0 {
        return Ok(n as u128);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let per_start = par::map_range(n, mode, |s| count_from(&adj, &bfs_distances(&adj, s), s, k));
    Ok(per_start.into_iter().sum())
}

/// Depth-first over walks of length `k` from `start`, with an explicit stack
/// of neighbour cursors; only the current walk is kept. Branches that cannot
/// get back to `start` in the remaining steps are cut.
fn count_from(adj: &[Vec<usize>], dist_to_start: &[usize], start: usize, k: usize) -> u128 {
    let mut walk = Vec::with_capacity(k + 1);
    let mut cursor = Vec::with_capacity(k + 1);
    let mut scratch = Scratch::new(adj.len(), k);
    walk.push(start);
    cursor.push(0usize);
    let mut count = 0u128;
    while let Some(top) = cursor.last_mut() {
        let v = *walk.last().unwrap();
        if walk.len() == k + 1 {
            if v == start && scratch.tree_like(&walk) {
                count += 1;
            }
            walk.pop();
            cursor.pop();
            continue;
        }
        let remaining = k + 1 - walk.len();
        match adj[v].get(*top) {
            Some(&next) => {
                *top += 1;
                if dist_to_start[next] < remaining {
                    walk.push(next);
                    cursor.push(0);
                }
            }
            None => {
                walk.pop();
                cursor.pop();
            }
        }
    }
    count
}

/// Allocation-free form of `is_tree_like` for the enumerator: same
/// first-repeat rule, failing as soon as a factor is longer than two.
struct Scratch {
    first_seen: Vec<usize>,
    work: Vec<usize>,
}

impl Scratch {
    fn new(n: usize, k: usize) -> Self {
        Scratch { first_seen: vec![usize::MAX; n], work: Vec::with_capacity(k + 1) }
    }

    fn tree_like(&mut self, walk: &[usize]) -> bool {
        self.work.clear();
        self.work.extend_from_slice(walk);
        while self.work.len() > 1 {
            let mut cut = None;
            for (j, &v) in self.work.iter().enumerate() {
                if self.first_seen[v] != usize::MAX {
                    cut = Some((self.first_seen[v], j));
                    break;
                }
                self.first_seen[v] = j;
            }
            for &v in &self.work {
                self.first_seen[v] = usize::MAX;
            }
            let (i, j) = cut.expect("closed walk");
            if j - i != 2 {
                return false;
            }
            self.work.drain(i + 1..=j);
        }
        true
    }
}

fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut queue = std::collections::VecDeque::from([source]);
    dist[source] = 0;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Power sums `p_1 .. p_K` of the matching roots via Newton's identities.
/// The root polynomial `Σ (-1)^i e_i x^(n-i)` has `e_{2j} = (-1)^j m_j` and
/// vanishing odd `e_i`, so
/// `p_k = Σ_{i<k} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k`.
pub fn power_sums(poly: &MatchingPolynomial, max_k: usize) -> Vec<BigInt> {
    let e = |i: usize| -> BigInt {
        if i % 2 == 1 || i > poly.order() {
            return BigInt::zero();
        }
        let j = i / 2;
        let m = BigInt::from(poly.coeff(j));
        if j.is_multiple_of(2) {
            m
        } else {
            -m
        }
    };
    let signed = |i: usize, x: BigInt| if i % 2 == 1 { x } else { -x };
    let mut p: Vec<BigInt> = vec![BigInt::zero(); max_k + 1];
    for k in 1..=max_k {
        let mut acc = signed(k, e(k) * BigInt::from(k));
        for i in 1..k {
            let ei = e(i);
            if !ei.is_zero() {
                acc += signed(i, ei * &p[k - i]);
            }
        }
        p[k] = acc;
    }
    p.remove(0);
    p
}
