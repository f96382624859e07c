//! Matching polynomials, matching-root spectra and matching energy of graphs,
//! plus the empirical matching distribution of Erdős–Rényi graphs measured
//! against the standard semicircle law.

pub mod bits;
pub mod emd;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod par;
pub mod poly;
pub mod roots;
pub mod seed;
pub mod semicircle;
pub mod treewalk;
pub mod tridiag;

pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::{Engine, MatchingPolynomial};
pub use roots::{NormalizedSpectrum, RootSpectrum};
pub use seed::SeedSpec;
