//! Vertex-subset recursion: with `u` the lowest vertex of `S`,
//! `m_k(S) = m_k(S - u) + Σ_{v ∈ S, v ~ u} m_{k-1}(S - u - v)`.
//!
//! Memoized top-down on the subset mask, so only reachable subsets are
//! stored rather than a full `2^n` table.

use rustc_hash::FxHashMap;

use super::coeff::{add_shifted, with_promotion, Coeff, Overflow};
use super::MatchingPolynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_DP_CAP: usize = 26;

/// Masks are single `u64` words, which bounds any configured cap.
const MASK_BITS: usize = 64;

pub fn counts_subset_dp(g: &Graph) -> Result<MatchingPolynomial> {
    counts_subset_dp_with_cap(g, DEFAULT_DP_CAP)
}

pub fn counts_subset_dp_with_cap(g: &Graph, cap: usize) -> Result<MatchingPolynomial> {
    let cap = cap.min(MASK_BITS);
    let n = g.order();
    if n > cap {
        return Err(Error::Capacity { n, cap });
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w)).collect();
    let full = if n == MASK_BITS { u64::MAX } else { (1u64 << n) - 1 };
    if let Ok(counts) = Flat::new(&adj, n / 2 + 1).run(full) {
        return Ok(MatchingPolynomial::from_counts(n, counts.into_iter().map(num_bigint::BigUint::from).collect()));
    }
    let counts = with_promotion::<std::convert::Infallible>(
        || Ok(Dp::<u128>::new(&adj).solve(full)),
        || Ok(Dp::<num_bigint::BigUint>::new(&adj).solve(full)),
    )
    .unwrap();
    Ok(MatchingPolynomial::from_counts(n, counts))
}

/// The same recursion with `u64` counts stored in one flat arena, `width`
/// slots per subset, so a memo entry costs no allocation. The total number
/// of matchings of `K_26` is below `2^51`, so overflow only occurs past the
/// default cap; callers then fall back to the generic engine.
struct Flat<'a> {
    adj: &'a [u64],
    width: usize,
    memo: FxHashMap<u64, u32>,
    arena: Vec<u64>,
}

impl<'a> Flat<'a> {
    fn new(adj: &'a [u64], width: usize) -> Self {
        let mut arena = vec![0; width];
        arena[0] = 1;
        Flat { adj, width, memo: FxHashMap::default(), arena }
    }

    fn run(mut self, full: u64) -> std::result::Result<Vec<u64>, Overflow> {
        let at = self.solve(full)? as usize * self.width;
        Ok(self.arena[at..at + self.width].to_vec())
    }

    /// Slot index of the counts of `s`; slot 0 is the empty set.
    fn solve(&mut self, mut s: u64) -> std::result::Result<u32, Overflow> {
        let (u, rest) = loop {
            if s == 0 {
                return Ok(0);
            }
            let u = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            if self.adj[u] & rest != 0 {
                break (u, rest);
            }
            s = rest;
        };
        if let Some(&hit) = self.memo.get(&s) {
            return Ok(hit);
        }
        let w = self.width;
        let base = self.solve(rest)? as usize;
        let slot = self.arena.len() / w;
        self.arena.extend_from_within(base * w..base * w + w);
        let mut nbrs = self.adj[u] & rest;
        while nbrs != 0 {
            let v = nbrs.trailing_zeros();
            nbrs &= nbrs - 1;
            let sub = self.solve(rest & !(1u64 << v))? as usize;
            for k in 0..w - 1 {
                let add = self.arena[sub * w + k];
                let t = &mut self.arena[slot * w + k + 1];
                *t = t.checked_add(add).ok_or(Overflow)?;
            }
        }
        let slot = u32::try_from(slot).map_err(|_| Overflow)?;
        self.memo.insert(s, slot);
        Ok(slot)
    }
}

struct Dp<'a, C> {
    adj: &'a [u64],
    memo: FxHashMap<u64, Vec<C>>,
}

impl<'a, C: Coeff> Dp<'a, C> {
    fn new(adj: &'a [u64]) -> Self {
        Dp { adj, memo: FxHashMap::default() }
    }

    fn solve(&mut self, mut s: u64) -> std::result::Result<Vec<C>, Overflow> {
        // Vertices with no neighbour left in S never get matched; drop them.
        let (u, rest) = loop {
            if s == 0 {
                return Ok(vec![C::one()]);
            }
            let u = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            if self.adj[u] & rest != 0 {
                break (u, rest);
            }
            s = rest;
        };
        if let Some(hit) = self.memo.get(&s) {
            return Ok(hit.clone());
        }
        let mut out = self.solve(rest)?;
        let mut nbrs = self.adj[u] & rest;
        while nbrs != 0 {
            let v = nbrs.trailing_zeros();
            nbrs &= nbrs - 1;
            let sub = self.solve(rest & !(1u64 << v))?;
            add_shifted(&mut out, &sub, 1)?;
        }
        self.memo.insert(s, out.clone());
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, Graph};
    use num_bigint::BigUint;

    fn counts(g: &Graph) -> Vec<u64> {
        counts_subset_dp(g).unwrap().coeffs().iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_families() {
        assert_eq!(counts(&path(4)), vec![1, 3, 1]);
        assert_eq!(counts(&complete(4)), vec![1, 6, 3]);
        assert_eq!(counts(&cycle(4).unwrap()), vec![1, 4, 2]);
        assert_eq!(counts(&Graph::empty(5)), vec![1]);
        assert_eq!(counts(&Graph::empty(0)), vec![1]);
    }

    #[test]
    fn capacity_error_names_cap() {
        match counts_subset_dp(&path(27)) {
            Err(Error::Capacity { n, cap }) => assert_eq!((n, cap), (27, 26)),
            other => panic!("{other:?}"),
        }
        assert!(counts_subset_dp_with_cap(&path(27), 30).is_ok());
        assert!(matches!(counts_subset_dp_with_cap(&path(65), 100), Err(Error::Capacity { cap: 64, .. })));
    }

    #[test]
    fn flat_and_generic_agree() {
        use crate::graph::gen_gnp;
        use crate::seed::SeedSpec;
        for i in 0..20u64 {
            let g = gen_gnp(14, 0.2 + 0.03 * i as f64, &SeedSpec::new(i)).unwrap();
            let adj: Vec<u64> = (0..14).map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w)).collect();
            let flat = Flat::new(&adj, 8).run((1 << 14) - 1).unwrap();
            let generic = Dp::<u128>::new(&adj).solve((1 << 14) - 1).unwrap();
            let flat: Vec<u128> = flat.into_iter().map(u128::from).collect();
            assert_eq!(flat[..generic.len()], generic[..]);
            assert!(flat[generic.len()..].iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn wide_cap_falls_back_past_u64() {
        // Eight disjoint copies of K_8: about 1.2e23 matchings in total.
        let k8 = complete(8);
        let g = (1..8).fold(k8.clone(), |g, _| g.disjoint_union(&k8));
        let p = counts_subset_dp_with_cap(&g, 64).unwrap();
        let one = crate::poly::closed_form(crate::poly::Family::Complete, 8).unwrap();
        let want = (1..8).fold(one.clone(), |acc, _| acc.disjoint_union(&one));
        assert_eq!(p, want);
        assert!(p.coeff(16) > BigUint::from(u64::MAX));
    }

    #[test]
    fn k26_perfect_matchings() {
        // 25!! perfect matchings of K_26.
        let p = counts_subset_dp(&complete(26)).unwrap();
        let double_factorial: BigUint = (1..26u32).step_by(2).map(BigUint::from).product();
        assert_eq!(p.coeff(13), double_factorial);
    }
}
