//! Replicated simulations and spectral-norm scans.

use rayon::prelude::*;

use crate::ensembles::{sample_matrix, Ensemble, EntryDistribution};
use crate::error::{capacity, invalid, Result};
use crate::rng::derive_seed;
use crate::spectra::{eigvalsh, histogram, EmpiricalSpectrum, Histogram, Provenance, Scale};

/// Largest matrix size accepted by [`simulate`] and [`norm_scan`].
pub const MAX_MATRIX_SIZE: usize = 8192;
/// Largest `n * replicates` accepted by [`simulate`] and [`norm_scan`].
pub const MAX_EIGENVALUES: usize = 1 << 22;

#[derive(Debug, Clone)]
pub struct SimulationConfig {
    pub ensemble: Ensemble,
    pub n: usize,
    pub replicates: usize,
    pub dist: EntryDistribution,
    pub seed: u64,
    pub scale: Scale,
    pub bins: usize,
    pub range: Option<(f64, f64)>,
    /// Empirical moments of orders `1..=max_order` are reported.
    pub max_order: u32,
}

impl SimulationConfig {
    pub fn new(ensemble: Ensemble, n: usize, replicates: usize, dist: EntryDistribution, seed: u64) -> Self {
        Self { ensemble, n, replicates, dist, seed, scale: Scale::SqrtN, bins: 50, range: None, max_order: 8 }
    }
}

/// Replicate mean of one empirical moment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSummary {
    pub order: u32,
    pub mean: f64,
    /// Standard error of the mean; absent with a single replicate.
    pub stderr: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct SimulationResult {
    pub config: SimulationConfig,
    pub replicates: Vec<EmpiricalSpectrum>,
    pub pooled: EmpiricalSpectrum,
    pub moments: Vec<MomentSummary>,
    pub histogram: Histogram,
}

/// Mean and standard error of the mean.
pub fn mean_stderr(xs: &[f64]) -> (f64, Option<f64>) {
    let k = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / k;
    if xs.len() < 2 {
        return (mean, None);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (k - 1.0);
    (mean, Some((var / k).sqrt()))
}

fn check_budget(n: usize, replicates: usize) -> Result<()> {
    if n == 0 || replicates == 0 {
        return Err(invalid("n and replicates must be at least 1"));
    }
    if n > MAX_MATRIX_SIZE {
        return Err(capacity(format!("n = {n} exceeds the limit of {MAX_MATRIX_SIZE}")));
    }
    if n.saturating_mul(replicates) > MAX_EIGENVALUES {
        return Err(capacity(format!("n * replicates = {} exceeds the limit of {MAX_EIGENVALUES}", n * replicates)));
    }
    Ok(())
}

/// Seed of replicate `index` in a simulation with master seed `seed`.
pub fn replicate_seed(seed: u64, index: usize) -> u64 {
    derive_seed(seed, index as u64)
}

/// Samples `replicates` independent matrices, pools their scaled spectra
/// and summarizes empirical moments across replicates.
pub fn simulate(cfg: &SimulationConfig) -> Result<SimulationResult> {
    check_budget(cfg.n, cfg.replicates)?;
    let replicates: Vec<EmpiricalSpectrum> = (0..cfg.replicates)
        .into_par_iter()
        .map(|i| {
            let seed = replicate_seed(cfg.seed, i);
            let s = sample_matrix(cfg.ensemble, cfg.n, cfg.dist, seed)?;
            let prov = Provenance { ensemble: cfg.ensemble, n: cfg.n, dist: cfg.dist, seed };
            Ok(EmpiricalSpectrum::of_matrix(&s.matrix, cfg.scale)?.with_provenance(prov))
        })
        .collect::<Result<_>>()?;
    let moments = (1..=cfg.max_order)
        .map(|r| {
            let per: Vec<f64> = replicates.iter().map(|s| s.moment(r)).collect();
            let (mean, stderr) = mean_stderr(&per);
            MomentSummary { order: r, mean, stderr }
        })
        .collect();
    let pooled = EmpiricalSpectrum::pooled(&replicates);
    let histogram = histogram(&pooled, cfg.bins, cfg.range)?;
    Ok(SimulationResult { config: cfg.clone(), replicates, pooled, moments, histogram })
}

/// Markov spectral norms at one size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormRow {
    pub n: usize,
    pub replicates: usize,
    /// `||M_n|| / sqrt(2 n log n)`; undefined for `n = 1`.
    pub log_ratio: Option<f64>,
    pub log_ratio_stderr: Option<f64>,
    /// `||M_n|| / n`.
    pub linear_ratio: f64,
    pub linear_ratio_stderr: Option<f64>,
}

/// Seed of replicate `index` at size `n` in a norm scan.
pub fn norm_scan_seed(seed: u64, n: usize, index: usize) -> u64 {
    derive_seed(seed, ((n as u64) << 32) | index as u64)
}

/// Spectral norms of Markov matrices for each size in `ns`.
pub fn norm_scan(ns: &[usize], dist: EntryDistribution, replicates: usize, seed: u64) -> Result<Vec<NormRow>> {
    if ns.is_empty() {
        return Err(invalid("norm scan needs at least one size"));
    }
    for &n in ns {
        check_budget(n, replicates)?;
    }
    ns.iter()
        .map(|&n| {
            let norms: Vec<f64> = (0..replicates)
                .into_par_iter()
                .map(|i| {
                    let s = sample_matrix(Ensemble::Markov, n, dist, norm_scan_seed(seed, n, i))?;
                    let e = eigvalsh(&s.matrix)?;
                    Ok(e[0].abs().max(e[e.len() - 1].abs()))
                })
                .collect::<Result<_>>()?;
            let nf = n as f64;
            let (linear_ratio, linear_ratio_stderr) = mean_stderr(&norms.iter().map(|x| x / nf).collect::<Vec<_>>());
            let (log_ratio, log_ratio_stderr) = if n > 1 {
                let denom = (2.0 * nf * nf.ln()).sqrt();
                let (m, se) = mean_stderr(&norms.iter().map(|x| x / denom).collect::<Vec<_>>());
                (Some(m), se)
            } else {
                (None, None)
            };
            Ok(NormRow { n, replicates, log_ratio, log_ratio_stderr, linear_ratio, linear_ratio_stderr })
        })
        .collect()
}
