//! Eigenvalues of a real symmetric tridiagonal matrix by implicit QL with
//! Wilkinson-style shifts (the classic `tql1` scheme, eigenvalues only).

/// Eigenvalues of the matrix with diagonal `diag` and off-diagonal `off`
/// (`off[i]` couples `i` and `i + 1`), sorted in descending order.
///
/// Panics if `off.len() + 1 != diag.len()` for nonempty input, or if an
/// eigenvalue fails to converge in 200 sweeps.
pub fn symmetric_tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let n = diag.len();
    if n == 0 {
        return Vec::new();
    }
    assert_eq!(off.len() + 1, n, "off-diagonal must have n - 1 entries");
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let norm = (0..n).map(|i| d[i].abs() + e[i].abs() + if i > 0 { e[i - 1].abs() } else { 0.0 }).fold(0.0, f64::max);
    let eps = f64::EPSILON;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * (dd + eps * norm) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            assert!(sweeps <= 200, "tridiagonal QL failed to converge");

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0f64, 1.0f64, 0.0f64);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| b.total_cmp(a));
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let ev = symmetric_tridiagonal_eigenvalues(&[0.0, 0.0], &[1.0]);
        assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn path_adjacency_closed_form() {
        // Eigenvalues of the path P_n adjacency: 2 cos(pi j / (n + 1)).
        let n = 40;
        let ev = symmetric_tridiagonal_eigenvalues(&vec![0.0; n], &vec![1.0; n - 1]);
        for (j, x) in ev.iter().enumerate() {
            let want = 2.0 * (std::f64::consts::PI * (j + 1) as f64 / (n + 1) as f64).cos();
            assert!((x - want).abs() < 1e-12, "{x} vs {want}");
        }
    }

    #[test]
    fn general_diagonal_against_trace_and_determinant() {
        let d = [2.0, -1.0, 0.5];
        let e = [0.3, 1.2];
        let ev = symmetric_tridiagonal_eigenvalues(&d, &e);
        let trace: f64 = d.iter().sum();
        assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-13);
        let det = d[0] * (d[1] * d[2] - e[1] * e[1]) - e[0] * e[0] * d[2];
        assert!((ev.iter().product::<f64>() - det).abs() < 1e-12);
        assert!(ev.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn zero_eigenvalue_converges() {
        let n = 101;
        let off: Vec<f64> = (1..n).map(|k| (k as f64).sqrt()).collect();
        let ev = symmetric_tridiagonal_eigenvalues(&vec![0.0; n], &off);
        assert!(ev[n / 2].abs() < 1e-12);
    }
}
