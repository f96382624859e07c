//! Two-state tree accumulation. For each vertex `v` of a rooted tree keep
//! `free[v]` (matchings of the subtree leaving `v` unmatched) and `all[v]`.
//! Folding in a child `c`:
//!
//! ```text
//! matched' = matched * all[c] + x * free * free[c]
//! free'    = free * all[c]
//! ```

use num_bigint::BigUint;

use super::coeff::{add_shifted, convolve, with_promotion, Coeff, Overflow};
use super::MatchingPolynomial;
use crate::error::{domain, Result};
use crate::graph::Graph;

pub fn counts_forest(g: &Graph) -> Result<MatchingPolynomial> {
    if !g.is_forest() {
        return Err(domain("forest engine needs an acyclic graph"));
    }
    let counts =
        with_promotion::<std::convert::Infallible>(|| Ok(forest_counts::<u128>(g)), || Ok(forest_counts::<BigUint>(g)))
            .unwrap();
    Ok(MatchingPolynomial::from_counts(g.order(), counts))
}

fn forest_counts<C: Coeff>(g: &Graph) -> std::result::Result<Vec<C>, Overflow> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for w in g.neighbors(v).iter() {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
    }

    let mut free: Vec<Vec<C>> = vec![vec![C::one()]; n];
    let mut matched: Vec<Vec<C>> = vec![Vec::new(); n];
    let mut total = vec![C::one()];
    // Children precede parents in reverse DFS order.
    for &v in order.iter().rev() {
        let free_v = std::mem::take(&mut free[v]);
        let mut all_v = free_v.clone();
        add_shifted(&mut all_v, &std::mem::take(&mut matched[v]), 0)?;
        let p = parent[v];
        if p == usize::MAX {
            total = convolve(&total, &all_v)?;
            continue;
        }
        let mut new_matched = convolve(&matched[p], &all_v)?;
        add_shifted(&mut new_matched, &convolve(&free[p], &free_v)?, 1)?;
        matched[p] = new_matched;
        free[p] = convolve(&free[p], &all_v)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, random_tree, star, Graph};
    use crate::seed::SeedSpec;

    fn counts(g: &Graph) -> Vec<u64> {
        counts_forest(g).unwrap().coeffs().iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_forests() {
        assert_eq!(counts(&path(4)), vec![1, 3, 1]);
        assert_eq!(counts(&star(5)), vec![1, 4]);
        assert_eq!(counts(&Graph::empty(3)), vec![1]);
        assert_eq!(counts(&path(3).disjoint_union(&path(2))), vec![1, 3, 2]);
    }

    #[test]
    fn rejects_cycles() {
        assert!(counts_forest(&cycle(5).unwrap()).is_err());
    }

    #[test]
    fn large_random_tree() {
        let t = random_tree(100, &SeedSpec::new(11)).unwrap();
        let p = counts_forest(&t).unwrap();
        assert_eq!(p.coeff(1), 99u32.into());
        // Promotion path: a 3000-vertex path has counts far beyond u128.
        let big = counts_forest(&path(3000)).unwrap();
        assert_eq!(big.coeff(1), 2999u32.into());
        assert_eq!(big.coeff(1500), 1u32.into());
        assert!(big.coeffs().iter().any(|c| c.bits() > 128));
    }
}
