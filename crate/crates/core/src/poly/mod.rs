//! Matching numbers `m_k(G)` and the matching polynomial
//! `m(G, x) = Σ_k (-1)^k m_k x^(n - 2k)`.
//!
//! The canonical object is the nonnegative count sequence `m_0, m_1, ..`;
//! signs only appear when the polynomial is evaluated or differentiated.

mod closed_form;
pub(crate) mod coeff;
mod edge_recursion;
mod forest;
mod subset_dp;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::graph::Graph;

pub use closed_form::{closed_form, complete_by_recurrence, Family};
pub use coeff::{big_log2, big_to_f64};
pub use edge_recursion::{counts_edge_recursion, counts_edge_recursion_with_budget, DEFAULT_MEMO_BUDGET};
pub use forest::counts_forest;
pub use subset_dp::{counts_subset_dp, counts_subset_dp_with_cap, DEFAULT_DP_CAP};

/// Exact matching numbers of a graph of order `n`.
///
/// `coeffs` holds `m_0 = 1, m_1 = |E|, ..` up to the matching number; higher
/// counts are zero and not stored, so equal graphs give equal values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatchingPolynomial {
    n: usize,
    coeffs: Vec<BigUint>,
}

impl MatchingPolynomial {
    /// Validate and normalize a count sequence. Trailing zeros are dropped.
    pub fn new(n: usize, mut coeffs: Vec<BigUint>) -> Result<Self> {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.first() != Some(&BigUint::one()) {
            return Err(domain("m_0 must equal 1"));
        }
        if coeffs.len() > n / 2 + 1 {
            return Err(domain(format!(
                "{} counts given but a graph of order {n} has at most {}",
                coeffs.len(),
                n / 2 + 1
            )));
        }
        if coeffs.iter().any(Zero::is_zero) {
            return Err(domain("interior zero count: m_k = 0 forces m_j = 0 for j > k"));
        }
        Ok(MatchingPolynomial { n, coeffs })
    }

    pub(crate) fn from_counts(n: usize, coeffs: Vec<BigUint>) -> Self {
        Self::new(n, coeffs).expect("engine produced an invalid count sequence")
    }

    /// Polynomial of the edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        MatchingPolynomial { n, coeffs: vec![BigUint::one()] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `m_k`, zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Size of a maximum matching.
    pub fn matching_number(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Total number of matchings (the Hosoya index).
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Polynomial of the disjoint union: orders add, counts convolve.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let counts = coeff::convolve(&self.coeffs, &other.coeffs).unwrap();
        MatchingPolynomial::from_counts(self.n + other.n, counts)
    }

    /// Signed coefficients of `m(G, x)` by ascending power of `x`.
    pub fn dense(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.n + 1];
        for (k, m) in self.coeffs.iter().enumerate() {
            let c = BigInt::from(m.clone());
            out[self.n - 2 * k] = if k % 2 == 0 { c } else { -c };
        }
        out
    }

    /// Signed coefficients of `m'(G, x)` by ascending power of `x`.
    pub fn derivative(&self) -> Vec<BigInt> {
        self.dense().into_iter().enumerate().skip(1).map(|(power, c)| c * BigInt::from(power)).collect()
    }

    /// `m(G, x)` in floating point: Horner in `x^2`, then the odd factor.
    pub fn evaluate(&self, x: f64) -> f64 {
        let y = x * x;
        let d = self.n / 2;
        let mut acc = 0.0;
        for k in 0..=d {
            let m = self.coeffs.get(k).map(big_to_f64).unwrap_or(0.0);
            acc = acc * y + if k % 2 == 0 { m } else { -m };
        }
        if self.n % 2 == 1 {
            acc * x
        } else {
            acc
        }
    }
}

impl fmt::Debug for MatchingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatchingPolynomial(n={}, m=[", self.n)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "])")
    }
}

/// Wire form: `{ "n": 4, "m": ["1", "3", "1"] }`. Counts are decimal strings
/// so arbitrary-precision values survive JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub m: Vec<String>,
}

impl From<&MatchingPolynomial> for PolyJson {
    fn from(p: &MatchingPolynomial) -> Self {
        PolyJson { n: p.n, m: p.coeffs.iter().map(|c| c.to_string()).collect() }
    }
}

impl TryFrom<PolyJson> for MatchingPolynomial {
    type Error = crate::Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        let coeffs =
            j.m.iter()
                .map(|s| BigUint::from_str(s.trim()).map_err(|e| domain(format!("bad count {s:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
        MatchingPolynomial::new(j.n, coeffs)
    }
}

/// Counting engine selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Forest engine on forests, subset DP up to the cap, edge recursion beyond.
    #[default]
    Auto,
    #[serde(rename = "dp")]
    SubsetDp,
    #[serde(rename = "recursion")]
    EdgeRecursion,
    Forest,
}

impl FromStr for Engine {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Engine::Auto),
            "dp" => Ok(Engine::SubsetDp),
            "recursion" => Ok(Engine::EdgeRecursion),
            "forest" => Ok(Engine::Forest),
            _ => Err(domain(format!("unknown engine {s:?}"))),
        }
    }
}

/// Matching polynomial of `g` with the chosen engine.
pub fn matching_polynomial(g: &Graph, engine: Engine) -> Result<MatchingPolynomial> {
    match engine {
        Engine::SubsetDp => counts_subset_dp(g),
        Engine::EdgeRecursion => counts_edge_recursion(g),
        Engine::Forest => counts_forest(g),
        Engine::Auto => {
            if g.is_forest() {
                counts_forest(g)
            } else if g.order() <= DEFAULT_DP_CAP {
                counts_subset_dp(g)
            } else {
                counts_edge_recursion(g)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    fn poly(n: usize, m: &[u64]) -> MatchingPolynomial {
        MatchingPolynomial::new(n, m.iter().map(|&x| BigUint::from(x)).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(MatchingPolynomial::new(4, vec![]).is_err());
        assert!(MatchingPolynomial::new(4, vec![BigUint::from(2u8)]).is_err());
        assert!(MatchingPolynomial::new(3, [1u8, 2, 1].map(BigUint::from).to_vec()).is_err());
        assert!(MatchingPolynomial::new(6, [1u8, 0, 1].map(BigUint::from).to_vec()).is_err());
        assert_eq!(poly(6, &[1, 3, 0, 0]).coeffs().len(), 2);
    }

    #[test]
    fn evaluation() {
        assert_eq!(poly(2, &[1, 1]).evaluate(1.0), 0.0);
        assert_eq!(poly(2, &[1, 1]).evaluate(-1.0), 0.0);
        assert_eq!(MatchingPolynomial::edgeless(3).evaluate(2.0), 8.0);
        // P_4: x^4 - 3x^2 + 1.
        assert_eq!(poly(4, &[1, 3, 1]).evaluate(2.0), 5.0);
        assert_eq!(poly(3, &[1, 2]).evaluate(3.0), 21.0);
    }

    #[test]
    fn derivative_of_p4() {
        let d = poly(4, &[1, 3, 1]).derivative();
        let want: Vec<BigInt> = [0, -6, 0, 4].map(BigInt::from).to_vec();
        assert_eq!(d, want);
        assert!(MatchingPolynomial::edgeless(0).derivative().is_empty());
    }

    #[test]
    fn json_round_trip() {
        let p = counts_subset_dp(&complete(8)).unwrap();
        let j = PolyJson::from(&p);
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"n":8,"m":["1","28","210","420","105"]}"#);
        assert_eq!(MatchingPolynomial::try_from(j).unwrap(), p);
    }

    #[test]
    fn auto_engine_ladder() {
        for g in [path(30), complete(6)] {
            let a = matching_polynomial(&g, Engine::Auto).unwrap();
            assert_eq!(a, matching_polynomial(&g, Engine::EdgeRecursion).unwrap());
        }
        assert_eq!("dp".parse::<Engine>().unwrap(), Engine::SubsetDp);
        assert!("nope".parse::<Engine>().is_err());
    }
}
