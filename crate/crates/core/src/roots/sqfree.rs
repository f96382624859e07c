//! Exact square-free factorization over `Z[y]` (Yun's algorithm with
//! primitive pseudo-remainder gcds). Polynomials are ascending coefficient
//! vectors with no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
#[cfg(test)]
use num_traits::One;
use num_traits::{Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

fn trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

fn is_constant(p: &[BigInt]) -> bool {
    p.len() <= 1
}

/// Divide out the content and make the leading coefficient positive.
fn primitive(p: ZPoly) -> ZPoly {
    let p = trim(p);
    let Some(lead) = p.last() else { return p };
    let content = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let content = if lead.is_negative() { -content } else { content };
    p.into_iter().map(|c| c / &content).collect()
}

fn derivative(p: &[BigInt]) -> ZPoly {
    p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut r = a.to_vec();
    let db = degree(b);
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && degree(&r) >= db {
        let lr = r.last().unwrap().clone();
        let shift = degree(&r) - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (mut a, mut b) = (primitive(a.to_vec()), primitive(b.to_vec()));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(pseudo_remainder(&a, &b));
        a = b;
        b = r;
    }
    primitive(a)
}

/// Exact quotient; `b` must divide `a` in `Q[y]` with `b` primitive.
fn exact_div(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut r = a.to_vec();
    let db = degree(b);
    let lb = b.last().unwrap();
    if r.len() < b.len() {
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for shift in (0..q.len()).rev() {
        let top = &r[shift + db];
        let (c, rem) = top.div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "nonzero remainder");
    trim(q)
}

/// Factors `f = c * Π_i a_i^i` with each `a_i` square-free and pairwise
/// coprime. Returns `(a_i, i)` for the nonconstant factors.
pub(crate) fn square_free_factors(f: &[BigInt]) -> Vec<(ZPoly, usize)> {
    let f = primitive(f.to_vec());
    if is_constant(&f) {
        return Vec::new();
    }
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = exact_div(&f, &a0);
    let c = exact_div(&df, &a0);
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while !is_constant(&b) {
        let a = gcd(&b, &d);
        let b_next = exact_div(&b, &a);
        let c_next = if d.is_empty() { Vec::new() } else { exact_div(&d, &a) };
        if !is_constant(&a) {
            out.push((a, i));
        }
        d = sub(&c_next, &derivative(&b_next));
        b = b_next;
        i += 1;
    }
    out
}

#[cfg(test)]
pub(crate) fn from_i64(c: &[i64]) -> ZPoly {
    c.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
pub(crate) fn one() -> ZPoly {
    vec![BigInt::one()]
}
