//! Matching-root spectra and matching energy.
//!
//! With `y = x^2` the matching polynomial becomes
//! `x^(n - 2d) q(y)`, `q(y) = Σ_k (-1)^k m_k y^(d - k)`, and every root of
//! `q` is real and nonnegative. Zero roots are read off exactly from the
//! matching number; the positive part is split into square-free factors
//! over the integers, and each factor's simple roots come from a balanced
//! companion matrix followed by Newton polish.

mod real;
mod sqfree;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::poly::{self, Engine, MatchingPolynomial};
use crate::tridiag::symmetric_tridiagonal_eigenvalues;

/// Relative tolerance used when none is given.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Forest components above this order go through the adjacency eigensolver.
const FOREST_FAST_PATH_MIN: usize = 48;

/// The `n` real matching roots, sorted descending, with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSpectrum {
    n: usize,
    roots: Vec<f64>,
    tol: f64,
}

impl RootSpectrum {
    fn from_positive_squares(n: usize, squares: &[f64], tol: f64) -> Self {
        let mut roots = Vec::with_capacity(n);
        for &y in squares {
            let x = y.max(0.0).sqrt();
            roots.push(x);
            roots.push(-x);
        }
        roots.resize(n, 0.0);
        roots.sort_by(|a, b| b.total_cmp(a));
        RootSpectrum { n, roots, tol }
    }

    /// Pair up `x_i` with `-x_{n+1-i}`; used on eigensolver output, which is
    /// symmetric only up to rounding.
    fn symmetrized(n: usize, mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let roots = (0..n).map(|i| 0.5 * (values[i] - values[n - 1 - i])).collect();
        RootSpectrum { n, roots, tol }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// `Σ x_i^k` in floating point.
    pub fn power_sum(&self, k: u32) -> f64 {
        self.roots.iter().map(|x| x.powi(k as i32)).sum()
    }

    /// Merge spectra of vertex-disjoint pieces.
    pub fn union(parts: impl IntoIterator<Item = RootSpectrum>) -> RootSpectrum {
        let mut n = 0;
        let mut tol: f64 = 0.0;
        let mut roots = Vec::new();
        for p in parts {
            n += p.n;
            tol = tol.max(p.tol);
            roots.extend(p.roots);
        }
        roots.sort_by(|a, b| b.total_cmp(a));
        RootSpectrum { n, roots, tol }
    }
}

/// The normalized roots `x_i / sqrt(n p)` of a graph of order `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedSpectrum {
    pub lambdas: Vec<f64>,
    pub n: usize,
    pub p: f64,
}

/// All matching roots of `poly`, validated by `|Σ x^2 - 2 m_1| <= tol max(1, 2 m_1)`.
pub fn matching_roots(poly: &MatchingPolynomial, tol: f64) -> Result<RootSpectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let n = poly.order();
    let nu = poly.matching_number();
    if nu == 0 {
        return Ok(RootSpectrum::from_positive_squares(n, &[], tol));
    }
    // Ascending coefficients of the zero-free part of q:
    // q~(y) = Σ_{k=0}^{ν} (-1)^k m_k y^(ν - k).
    let reduced: Vec<BigInt> = (0..=nu)
        .map(|j| {
            let k = nu - j;
            let c = BigInt::from(poly.coeff(k));
            if k.is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .collect();

    let mut squares = Vec::with_capacity(nu);
    for (factor, mult) in sqfree::square_free_factors(&reduced) {
        for y in real::positive_simple_roots(&factor) {
            squares.extend(std::iter::repeat_n(y, mult));
        }
    }
    if squares.len() != nu {
        return Err(Error::NumericFailure { residual: (squares.len() as f64 - nu as f64).abs(), tol });
    }
    let spectrum = RootSpectrum::from_positive_squares(n, &squares, tol);

    let m1 = poly.coeff(1).to_f64().unwrap_or(f64::INFINITY);
    let residual = (spectrum.power_sum(2) - 2.0 * m1).abs() / (2.0 * m1).max(1.0);
    if residual.is_nan() || residual > tol {
        return Err(Error::NumericFailure { residual, tol });
    }
    Ok(spectrum)
}

/// `Σ |x_i|`.
pub fn matching_energy(spectrum: &RootSpectrum) -> f64 {
    spectrum.roots.iter().map(|x| x.abs()).sum()
}

/// Roots of `m(K_n, x)` as eigenvalues of the symmetric tridiagonal matrix
/// with zero diagonal and off-diagonal `sqrt(1), .., sqrt(n - 1)`, which
/// realizes the three-term recurrence of the complete-graph polynomials.
pub fn complete_spectrum_fast(n: usize) -> Result<RootSpectrum> {
    if n == 0 {
        return Err(domain("complete spectrum needs n >= 1"));
    }
    let off: Vec<f64> = (1..n).map(|k| (k as f64).sqrt()).collect();
    let ev = symmetric_tridiagonal_eigenvalues(&vec![0.0; n], &off);
    Ok(RootSpectrum::symmetrized(n, ev, DEFAULT_TOL))
}

/// For a forest the matching polynomial is the characteristic polynomial, so
/// the matching roots are adjacency eigenvalues.
pub fn forest_spectrum_fast(g: &Graph) -> Result<RootSpectrum> {
    if !g.is_forest() {
        return Err(domain("forest spectrum needs an acyclic graph"));
    }
    let parts = g.components().into_iter().map(|c| tree_spectrum(&c.graph));
    Ok(RootSpectrum::union(parts))
}

fn tree_spectrum(t: &Graph) -> RootSpectrum {
    let n = t.order();
    if n <= 2 {
        let y = if n == 2 { vec![1.0] } else { vec![] };
        return RootSpectrum::from_positive_squares(n, &y, DEFAULT_TOL);
    }
    let a = DMatrix::from_row_slice(n, n, &t.adjacency_matrix());
    let ev = a.symmetric_eigenvalues();
    RootSpectrum::symmetrized(n, ev.iter().copied().collect(), DEFAULT_TOL)
}

/// `λ_i = x_i / sqrt(n p)`, order preserved.
pub fn normalize(spectrum: &RootSpectrum, n: usize, p: f64) -> Result<NormalizedSpectrum> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(domain(format!("p must lie in (0, 1], got {p}")));
    }
    if n == 0 {
        return Err(domain("normalization needs n >= 1"));
    }
    let scale = (n as f64 * p).sqrt();
    Ok(NormalizedSpectrum { lambdas: spectrum.roots.iter().map(|x| x / scale).collect(), n, p })
}

/// Spectrum of a whole graph, assembled per connected component with the
/// cheapest applicable route.
pub fn spectrum_of_graph(g: &Graph, tol: f64) -> Result<RootSpectrum> {
    let mut parts = Vec::new();
    for c in g.components() {
        let h = &c.graph;
        let part = if h.size() == 0 {
            RootSpectrum::from_positive_squares(h.order(), &[], tol)
        } else if h.is_complete() && h.order() > poly::DEFAULT_DP_CAP {
            complete_spectrum_fast(h.order())?
        } else if h.order() >= FOREST_FAST_PATH_MIN && h.is_forest() {
            forest_spectrum_fast(h)?
        } else {
            matching_roots(&poly::matching_polynomial(h, Engine::Auto)?, tol)?
        };
        parts.push(part);
    }
    Ok(RootSpectrum::union(parts))
}

/// Matching energy of `g`.
pub fn energy_of_graph(g: &Graph) -> Result<f64> {
    spectrum_of_graph(g, DEFAULT_TOL).map(|s| matching_energy(&s))
}
