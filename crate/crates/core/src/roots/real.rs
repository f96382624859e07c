//! Roots of an integer polynomial known to have only simple, real, positive
//! roots: eigenvalues of the balanced companion matrix, Newton polish, then
//! refinement inside sign-change brackets using exact integer evaluation.

use nalgebra::DMatrix;
use num_bigint::{BigInt, Sign};
use num_traits::ToPrimitive;

/// `x * 2^k` without intermediate overflow for moderate `k`.
fn ldexp(x: f64, k: i64) -> f64 {
    let mut x = x;
    let mut k = k;
    while k > 1000 {
        x *= 2f64.powi(1000);
        k -= 1000;
    }
    while k < -1000 {
        x *= 2f64.powi(-1000);
        k += 1000;
    }
    x * 2f64.powi(k as i32)
}

/// `c` as `mantissa * 2^exp` with the mantissa a finite `f64`.
fn split(c: &BigInt) -> (f64, i64) {
    let bits = c.bits();
    if bits <= 1000 {
        return (c.to_f64().unwrap(), 0);
    }
    let shift = bits - 64;
    let top = (c.magnitude() >> shift).to_u64().unwrap() as f64;
    let m = if c.sign() == Sign::Minus { -top } else { top };
    (m, shift as i64)
}

fn log2_abs(c: &BigInt) -> f64 {
    let (m, e) = split(c);
    m.abs().log2() + e as f64
}

/// `(p(z), p'(z))` for ascending coefficients.
fn horner(c: &[f64], z: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Parlett–Reinsch diagonal similarity scaling, radix 2.
fn balance(a: &mut DMatrix<f64>) {
    let n = a.nrows();
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            while c < r / 2.0 {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while c >= r * 2.0 {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                for j in 0..n {
                    a[(i, j)] /= f;
                    a[(j, i)] *= f;
                }
            }
        }
    }
}

/// Roots in ascending order. `p` is ascending, nonconstant, with positive
/// leading coefficient and only simple positive real roots.
pub(crate) fn positive_simple_roots(p: &[BigInt]) -> Vec<f64> {
    let deg = p.len() - 1;
    let lead = log2_abs(&p[deg]);
    // Power-of-two scale near the root bound max |a_j / a_deg|^(1/(deg - j)),
    // so substituting y = 2^e z introduces no rounding.
    let bound = (0..deg)
        .filter(|&j| p[j].sign() != Sign::NoSign)
        .map(|j| (log2_abs(&p[j]) - lead) / (deg - j) as f64)
        .fold(f64::NEG_INFINITY, f64::max);
    let e = if bound.is_finite() { bound.round() as i64 } else { 0 };

    let (lm, le) = split(&p[deg]);
    let scaled: Vec<f64> = p
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let (m, ce) = split(c);
            ldexp(m / lm, ce - le + (j as i64 - deg as i64) * e)
        })
        .collect();

    let mut zs: Vec<f64> = if deg == 1 {
        vec![-scaled[0]]
    } else {
        let mut comp = DMatrix::<f64>::zeros(deg, deg);
        for j in 0..deg {
            comp[(0, j)] = -scaled[deg - 1 - j];
        }
        for i in 1..deg {
            comp[(i, i - 1)] = 1.0;
        }
        balance(&mut comp);
        comp.complex_eigenvalues().iter().map(|z| z.re).collect()
    };

    for z in zs.iter_mut() {
        *z = polish(&scaled, z.max(0.0));
    }
    zs.sort_by(f64::total_cmp);
    let mut ys: Vec<f64> = zs.into_iter().map(|z| ldexp(z, e)).collect();
    let upper = ldexp(1.0, bound.ceil() as i64 + 2);
    if !refine_exact(p, &mut ys, upper) {
        if let Some(r) = interlacing_roots(p, upper) {
            ys = r;
        }
    }
    ys
}

/// `y = mant * 2^exp` exactly, for finite positive `y`.
fn decode(y: f64) -> (u64, i64) {
    let bits = y.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    if raw_exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), raw_exp - 1075)
    }
}

/// Exact `p(y)` as `(sign, nearest f64)` at a nonnegative finite `y`.
fn eval_exact(p: &[BigInt], y: f64) -> (Sign, f64) {
    if y == 0.0 {
        return (p[0].sign(), split_to_f64(&p[0], 0));
    }
    let (mant, exp) = decode(y);
    let d = p.len() - 1;
    // Σ a_j m^j t^(d - j) with t = 2^-exp when exp < 0, then scale back.
    let (m, down, base) = if exp >= 0 {
        (BigInt::from(mant) << exp as usize, 0usize, 0i64)
    } else {
        (BigInt::from(mant), (-exp) as usize, exp * d as i64)
    };
    let mut acc = p[d].clone();
    for j in (0..d).rev() {
        acc = acc * &m + (&p[j] << (down * (d - j)));
    }
    (acc.sign(), split_to_f64(&acc, base))
}

fn split_to_f64(c: &BigInt, scale: i64) -> f64 {
    if c.sign() == Sign::NoSign {
        return 0.0;
    }
    let (m, e) = split(c);
    ldexp(m, e + scale)
}

/// Tighten each approximate root inside its own sign-change bracket. The
/// brackets are midpoints between neighbours plus `0` and `upper`; when they
/// do not separate all roots the approximations are left as they are and
/// `false` is returned.
fn refine_exact(p: &[BigInt], ys: &mut [f64], upper: f64) -> bool {
    let d = ys.len();
    if d == 0 || d != p.len() - 1 || ys.iter().any(|y| !y.is_finite()) {
        return false;
    }
    let mut cuts = Vec::with_capacity(d + 1);
    cuts.push(0.0);
    for w in ys.windows(2) {
        cuts.push(0.5 * (w[0] + w[1]));
    }
    cuts.push(upper.max(2.0 * ys[d - 1]));
    let signs: Vec<Sign> = cuts.iter().map(|&c| eval_exact(p, c).0).collect();
    if !alternating(&signs) {
        return false;
    }
    let dp = derivative(p);
    for i in 0..d {
        ys[i] = bracketed_newton(p, &dp, cuts[i], cuts[i + 1], signs[i], ys[i]);
    }
    true
}

fn alternating(signs: &[Sign]) -> bool {
    signs.iter().all(|&s| s != Sign::NoSign) && signs.windows(2).all(|w| w[0] != w[1])
}

fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter().enumerate().skip(1).map(|(j, a)| a * BigInt::from(j)).collect()
}

/// Slow path for clustered roots. The roots of a real-rooted polynomial with
/// simple roots strictly interlace those of its derivative, so working down
/// from the linear `p^(d-1)` every root of `p^(k)` gets its own bracket
/// between consecutive roots of `p^(k+1)`. All roots are positive and no
/// derivative vanishes at `0`, so `[0, upper]` closes the outer brackets.
fn interlacing_roots(p: &[BigInt], upper: f64) -> Option<Vec<f64>> {
    let d = p.len() - 1;
    let mut derivs = vec![p.to_vec()];
    for _ in 1..d {
        let next = derivative(derivs.last().unwrap());
        derivs.push(next);
    }
    let mut roots: Vec<f64> = Vec::new();
    for k in (0..d).rev() {
        let f = &derivs[k];
        let df = derivative(f);
        let mut cuts = Vec::with_capacity(roots.len() + 2);
        cuts.push(0.0);
        cuts.extend_from_slice(&roots);
        cuts.push(upper);
        let signs: Vec<Sign> = cuts.iter().map(|&c| eval_exact(f, c).0).collect();
        if !alternating(&signs) {
            return None;
        }
        roots = (0..cuts.len() - 1)
            .map(|i| bracketed_newton(f, &df, cuts[i], cuts[i + 1], signs[i], 0.5 * (cuts[i] + cuts[i + 1])))
            .collect();
    }
    Some(roots)
}

/// Newton inside `[lo, hi]`, falling back to bisection whenever a step
/// would leave the bracket or fails to halve the step before last. Signs
/// come from exact evaluation, so the bracket always holds the root.
fn bracketed_newton(p: &[BigInt], dp: &[BigInt], mut lo: f64, mut hi: f64, s_lo: Sign, start: f64) -> f64 {
    let mut x = if start > lo && start < hi { start } else { 0.5 * (lo + hi) };
    let mut dx = hi - lo;
    let mut dx_old = dx;
    for _ in 0..400 {
        let (s, v) = eval_exact(p, x);
        if s == Sign::NoSign {
            return x;
        }
        if s == s_lo {
            lo = x;
        } else {
            hi = x;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (_, dv) = eval_exact(dp, x);
        let newton = x - v / dv;
        let next = if newton > lo && newton < hi && (newton - x).abs() <= 0.5 * dx_old { newton } else { mid };
        if next == x {
            break;
        }
        dx_old = dx;
        dx = (next - x).abs();
        x = next;
    }
    x
}

fn polish(c: &[f64], mut z: f64) -> f64 {
    let (mut pz, _) = horner(c, z);
    for _ in 0..100 {
        let (_, dp) = horner(c, z);
        if pz == 0.0 || dp == 0.0 {
            break;
        }
        let next = z - pz / dp;
        let (pn, _) = horner(c, next);
        if pn.abs() >= pz.abs() {
            break;
        }
        let step = (next - z).abs();
        z = next;
        pz = pn;
        if step <= 4.0 * f64::EPSILON * z.abs() {
            break;
        }
    }
    z
}
