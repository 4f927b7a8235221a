//! Limiting spectral moments of large random Hankel, Markov and Toeplitz
//! matrices.
//!
//! The even moments of the limiting laws are sums over pair-partition words:
//! cube cross-section volumes for Toeplitz and Hankel, `2^height` for Markov.
//! The crate computes them exactly, converts between moments and free
//! cumulants, samples the matrix ensembles, and measures their empirical
//! spectra.

pub mod ensembles;
pub mod error;
pub mod experiments;
pub mod limits;
pub mod matrix;
pub mod polytope;
pub mod rng;
pub mod spectra;
pub mod volumes;
pub mod words;

pub use error::{Error, Result};

/// Exact rational arithmetic used throughout.
pub type Rational = num_rational::BigRational;
