//! Edge deletion–contraction: `m_k(G) = m_k(G - e) + m_{k-1}(G - u - v)` for
//! `e = uv`, with multiplicative splitting over connected components.
//!
//! A subproblem is identified by its remaining edge set inside the ambient
//! graph; isolated vertices do not affect any count, so the vertex subset is
//! implied by the edges. The memo is bounded by a configurable budget.

use rustc_hash::FxHashMap;

use super::coeff::{add_shifted, convolve, with_promotion, Coeff, Overflow};
use super::MatchingPolynomial;
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on memoized subproblems.
pub const DEFAULT_MEMO_BUDGET: usize = 4_000_000;

pub fn counts_edge_recursion(g: &Graph) -> Result<MatchingPolynomial> {
    counts_edge_recursion_with_budget(g, DEFAULT_MEMO_BUDGET)
}

pub fn counts_edge_recursion_with_budget(g: &Graph, budget: usize) -> Result<MatchingPolynomial> {
    let ctx = Ctx::new(g);
    let all = BitSet::full(g.size(), g.size());
    let counts = with_promotion(
        || Rec::<u128>::new(&ctx, budget).solve(&all),
        || Rec::<num_bigint::BigUint>::new(&ctx, budget).solve(&all),
    )?;
    Ok(MatchingPolynomial::from_counts(g.order(), counts))
}

struct Ctx {
    n: usize,
    ends: Vec<(usize, usize)>,
    /// Edge indices incident to each vertex.
    incident: Vec<BitSet>,
}

impl Ctx {
    fn new(g: &Graph) -> Self {
        let m = g.size();
        let mut incident = vec![BitSet::new(m); g.order()];
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            incident[a].insert(i);
            incident[b].insert(i);
        }
        Ctx { n: g.order(), ends: g.edges().to_vec(), incident }
    }

    /// Split an edge set into connected pieces.
    fn components(&self, edges: &BitSet) -> Vec<BitSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for e in edges.iter() {
            let start = self.ends[e].0;
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut piece = BitSet::new(self.ends.len());
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let here = self.incident[v].intersection(edges);
                for f in here.iter() {
                    piece.insert(f);
                    let (a, b) = self.ends[f];
                    let w = if a == v { b } else { a };
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(piece);
        }
        out
    }

    fn degree(&self, v: usize, edges: &BitSet) -> usize {
        self.incident[v].intersection(edges).len()
    }
}

struct Rec<'a, C> {
    ctx: &'a Ctx,
    budget: usize,
    memo: FxHashMap<BitSet, Vec<C>>,
}

impl<'a, C: Coeff> Rec<'a, C> {
    fn new(ctx: &'a Ctx, budget: usize) -> Self {
        Rec { ctx, budget, memo: FxHashMap::default() }
    }

    fn solve(&mut self, edges: &BitSet) -> Result<std::result::Result<Vec<C>, Overflow>> {
        match edges.len() {
            0 => return Ok(Ok(vec![C::one()])),
            1 => return Ok(Ok(vec![C::one(), C::one()])),
            _ => {}
        }
        if let Some(hit) = self.memo.get(edges) {
            return Ok(Ok(hit.clone()));
        }
        let pieces = self.ctx.components(edges);
        let out = if pieces.len() > 1 {
            let mut acc = vec![C::one()];
            for piece in &pieces {
                let sub = match self.solve(piece)? {
                    Ok(s) => s,
                    Err(o) => return Ok(Err(o)),
                };
                acc = match convolve(&acc, &sub) {
                    Ok(a) => a,
                    Err(o) => return Ok(Err(o)),
                };
            }
            acc
        } else {
            match self.split_on_edge(edges)? {
                Ok(v) => v,
                Err(o) => return Ok(Err(o)),
            }
        };
        if self.memo.len() >= self.budget {
            return Err(Error::Resource(format!("edge recursion memo exceeded {} entries", self.budget)));
        }
        self.memo.insert(edges.clone(), out.clone());
        Ok(Ok(out))
    }

    /// Branch on the edge whose endpoints have the largest total degree.
    fn split_on_edge(&mut self, edges: &BitSet) -> Result<std::result::Result<Vec<C>, Overflow>> {
        let ctx = self.ctx;
        let e = edges
            .iter()
            .max_by_key(|&e| {
                let (a, b) = ctx.ends[e];
                (ctx.degree(a, edges) + ctx.degree(b, edges), std::cmp::Reverse(e))
            })
            .unwrap();
        let (u, v) = ctx.ends[e];

        let mut without = edges.clone();
        without.remove(e);
        let mut touching = ctx.incident[u].clone();
        touching.union_with(&ctx.incident[v]);
        let contracted = edges.difference(&touching);

        let mut out = match self.solve(&without)? {
            Ok(s) => s,
            Err(o) => return Ok(Err(o)),
        };
        let sub = match self.solve(&contracted)? {
            Ok(s) => s,
            Err(o) => return Ok(Err(o)),
        };
        Ok(add_shifted(&mut out, &sub, 1).map(|_| out))
    }
}
