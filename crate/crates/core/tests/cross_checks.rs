use std::f64::consts::PI;

use num_bigint::BigUint;

use matching_energy::emd::EmpiricalDistribution;
use matching_energy::graph::{complete, gen_gnp, path};
use matching_energy::poly::{closed_form, complete_by_recurrence, matching_polynomial, Engine, Family};
use matching_energy::roots::{
    complete_spectrum_fast, matching_energy, matching_roots, normalize, spectrum_of_graph, DEFAULT_TOL,
};
use matching_energy::seed::SeedSpec;
use matching_energy::semicircle;
use matching_energy::treewalk::{count_tree_like, power_sums};

/// Composite Simpson on `[a, b]` with `2m` panels.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, m: usize) -> f64 {
    let h = (b - a) / (2 * m) as f64;
    let mut s = f(a) + f(b);
    for i in 1..2 * m {
        s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

/// Integrals against the semicircle density after `x = 2 sin t`, which
/// removes the square-root endpoint singularity.
fn semicircle_integral(g: impl Fn(f64) -> f64) -> f64 {
    simpson(|t| g(2.0 * t.sin()) * semicircle::density(2.0 * t.sin()) * 2.0 * t.cos(), -PI / 2.0, PI / 2.0, 2000)
}

#[test]
fn density_integrates_to_one_and_moments_are_catalan() {
    assert!((semicircle_integral(|_| 1.0) - 1.0).abs() < 1e-12);
    for k in 0..=12u32 {
        let q = semicircle_integral(|x| x.powi(k as i32));
        assert!((q - semicircle::moment(k)).abs() < 1e-9 * semicircle::moment(k).max(1.0), "k = {k}");
    }
    assert!((semicircle_integral(f64::abs) - semicircle::abs_moment()).abs() < 1e-12);
}

#[test]
fn cdf_matches_quadrature_and_differentiates_to_density() {
    for x in [-1.9, -1.0, -0.3, 0.0, 0.7, 1.5, 1.99] {
        let q = simpson(semicircle::density, -2.0, x, 20000);
        assert!((semicircle::cdf(x) - q).abs() < 1e-6, "x = {x}");
        let h = 1e-6;
        let fd = (semicircle::cdf(x + h) - semicircle::cdf(x - h)) / (2.0 * h);
        assert!((fd - semicircle::density(x)).abs() < 1e-5, "x = {x}");
    }
}

#[test]
fn catalan_recurrence() {
    // C_{m+1} = Σ C_i C_{m-i}
    let c: Vec<BigUint> = (0..=30).map(|m| semicircle::moment_exact(2 * m)).collect();
    for m in 0..30 {
        let s: BigUint = (0..=m).map(|i| &c[i as usize] * &c[(m - i) as usize]).sum();
        assert_eq!(c[m as usize + 1], s);
    }
}

#[test]
fn mean_abs_is_the_energy_ratio() {
    for (i, p) in [0.2, 0.5, 0.9].into_iter().enumerate() {
        let g = gen_gnp(18, p, &SeedSpec::new(5).with(i as u64)).unwrap();
        let s = spectrum_of_graph(&g, DEFAULT_TOL).unwrap();
        let e = EmpiricalDistribution::from_spectrum(&normalize(&s, 18, p).unwrap());
        let ratio = matching_energy(&s) / (18f64.powf(1.5) * p.sqrt());
        assert!((e.mean_abs() - ratio).abs() < 1e-12);
        // Second moment of the normalized roots is 2 m_1 / (n^2 p).
        let m1 = g.size() as f64;
        assert!((e.moment(2) - 2.0 * m1 / (18.0 * 18.0 * p)).abs() < 1e-10);
    }
}

#[test]
fn ks_against_a_brute_force_grid() {
    let g = gen_gnp(16, 0.5, &SeedSpec::new(77)).unwrap();
    let s = spectrum_of_graph(&g, DEFAULT_TOL).unwrap();
    let e = EmpiricalDistribution::from_spectrum(&normalize(&s, 16, 0.5).unwrap());
    let mut grid: f64 = 0.0;
    for i in 0..=200_000 {
        let x = -3.0 + 6.0 * i as f64 / 200_000.0;
        grid = grid.max((e.eval(x) - semicircle::cdf(x)).abs());
    }
    for &x in e.sample() {
        grid = grid.max((e.eval_left(x) - semicircle::cdf(x)).abs());
    }
    assert!((e.ks_distance() - grid).abs() < 1e-12);
}

#[test]
fn complete_graph_routes_agree() {
    for n in [5, 12, 20, 26, 27, 40] {
        let fast = matching_energy(&complete_spectrum_fast(n).unwrap());
        let exact = matching_energy(&matching_roots(&complete_by_recurrence(n), DEFAULT_TOL).unwrap());
        assert!((fast - exact).abs() < 1e-9 * exact, "n = {n}");
        assert_eq!(complete_by_recurrence(n), closed_form(Family::Complete, n).unwrap());
    }
    assert_eq!(matching_polynomial(&complete(10), Engine::Auto).unwrap(), complete_by_recurrence(10));
}

#[test]
fn walk_counts_on_paths() {
    let g = path(4);
    assert_eq!(count_tree_like(&g, 4).unwrap(), 14);
    let ps = power_sums(&matching_polynomial(&g, Engine::Auto).unwrap(), 4);
    assert_eq!(ps[3], 14.into());
    assert_eq!(count_tree_like(&g, 3).unwrap(), 0);
}

#[test]
fn exact_route_on_long_paths_and_cycles() {
    use matching_energy::graph::cycle;
    use matching_energy::poly::counts_forest;
    for n in (10..=101).step_by(7) {
        let s = matching_roots(&counts_forest(&path(n)).unwrap(), DEFAULT_TOL).unwrap();
        for (j, r) in s.roots().iter().enumerate() {
            let want = 2.0 * ((j + 1) as f64 * PI / (n + 1) as f64).cos();
            assert!((r - want).abs() < 1e-10, "P_{n} root {j}: {r} vs {want}");
        }
        let c = closed_form(Family::Cycle, n).unwrap();
        let me = matching_energy(&matching_roots(&c, DEFAULT_TOL).unwrap());
        // m(C_n, x) = 2 T_n(x / 2), roots 2 cos((2j + 1) pi / (2n)).
        let want: f64 = (0..n).map(|j| (2.0 * ((2 * j + 1) as f64 * PI / (2 * n) as f64).cos()).abs()).sum();
        assert!((me - want).abs() < 1e-9 * want, "C_{n}");
        let _ = cycle(n).unwrap();
    }
    for n in [30, 60, 100] {
        let exact = matching_energy(&matching_roots(&complete_by_recurrence(n), DEFAULT_TOL).unwrap());
        let fast = matching_energy(&complete_spectrum_fast(n).unwrap());
        assert!((exact - fast).abs() < 1e-9 * fast, "K_{n}");
    }
}
