//! The standard semicircle law on `[-2, 2]`: density `sqrt(4 - x^2) / (2 pi)`.

use std::f64::consts::PI;

use num_bigint::BigUint;
use num_traits::One;

pub fn density(x: f64) -> f64 {
    if x.abs() >= 2.0 {
        0.0
    } else {
        (4.0 - x * x).sqrt() / (2.0 * PI)
    }
}

/// `1/2 + x sqrt(4 - x^2) / (4 pi) + asin(x / 2) / pi` on `[-2, 2]`.
pub fn cdf(x: f64) -> f64 {
    if x <= -2.0 {
        0.0
    } else if x >= 2.0 {
        1.0
    } else {
        (0.5 + x * (4.0 - x * x).sqrt() / (4.0 * PI) + (x / 2.0).asin() / PI).clamp(0.0, 1.0)
    }
}

/// Inverse of [`cdf`] on `(0, 1)`, by bisection to full precision.
pub fn quantile(u: f64) -> f64 {
    if u <= 0.0 {
        return -2.0;
    }
    if u >= 1.0 {
        return 2.0;
    }
    let (mut lo, mut hi) = (-2.0f64, 2.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if cdf(mid) < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `∫ x^k dF_sc`: zero for odd `k`, the Catalan number `C(2m, m) / (m + 1)`
/// for `k = 2m`.
pub fn moment_exact(k: u32) -> BigUint {
    if k % 2 == 1 {
        return BigUint::default();
    }
    let m = k / 2;
    // C_{j+1} = C_j * 2(2j + 1) / (j + 2)
    (0..m).fold(BigUint::one(), |c, j| c * (2 * (2 * j + 1)) / (j + 2))
}

pub fn moment(k: u32) -> f64 {
    crate::poly::big_to_f64(&moment_exact(k))
}

/// `∫ |x| dF_sc = 8 / (3 pi)`.
pub fn abs_moment() -> f64 {
    8.0 / (3.0 * PI)
}
