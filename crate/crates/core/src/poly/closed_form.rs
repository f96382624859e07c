//! Closed-form matching numbers for paths, cycles and complete graphs.

use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::MatchingPolynomial;
use crate::error::{domain, Result};
use crate::graph::{self, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Complete,
}

impl Family {
    pub fn graph(self, n: usize) -> Result<Graph> {
        match self {
            Family::Path => Ok(graph::path(n)),
            Family::Cycle => graph::cycle(n),
            Family::Complete => Ok(graph::complete(n)),
        }
    }
}

impl FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            _ => Err(domain(format!("unknown family {s:?}"))),
        }
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `m_k(P_n) = C(n-k, k)`, `m_k(C_n) = n/(n-k) C(n-k, k)`,
/// `m_k(K_n) = n! / (k! 2^k (n-2k)!)`.
pub fn closed_form(family: Family, n: usize) -> Result<MatchingPolynomial> {
    let top = n / 2;
    let coeffs: Vec<BigUint> = match family {
        Family::Path => (0..=top).map(|k| binomial(n - k, k)).collect(),
        Family::Cycle => {
            if n < 3 {
                return Err(domain(format!("cycle needs at least 3 vertices, got {n}")));
            }
            (0..=top).map(|k| binomial(n - k, k) * n / (n - k)).collect()
        }
        Family::Complete => {
            let mut out = vec![BigUint::one()];
            // m_{k+1} = m_k (n-2k)(n-2k-1) / (2(k+1))
            for k in 0..top {
                let next = out[k].clone() * ((n - 2 * k) * (n - 2 * k - 1)) / (2 * (k + 1));
                out.push(next);
            }
            out
        }
    };
    MatchingPolynomial::new(n, coeffs)
}

/// `m(K_n, x) = x m(K_{n-1}, x) - (n-1) m(K_{n-2}, x)`, read on counts as
/// `m_k(K_n) = m_k(K_{n-1}) + (n-1) m_{k-1}(K_{n-2})`.
pub fn complete_by_recurrence(n: usize) -> MatchingPolynomial {
    let mut prev2: Vec<BigUint> = vec![BigUint::one()];
    let mut prev1: Vec<BigUint> = vec![BigUint::one()];
    if n <= 1 {
        return MatchingPolynomial::from_counts(n, prev1);
    }
    for order in 2..=n {
        let mut cur = prev1.clone();
        cur.resize(order / 2 + 1, BigUint::default());
        for (k, c) in prev2.iter().enumerate() {
            cur[k + 1] += c * (order - 1);
        }
        prev2 = std::mem::replace(&mut prev1, cur);
    }
    MatchingPolynomial::from_counts(n, prev1)
}
