//! Seedable samplers for structured random matrices.
//!
//! * Hankel `H = [X_{i+j-1}]`, built from the stream `X_1, ..., X_{2n-1}`.
//! * Toeplitz `T = [X_{|i-j|}]`, built from `X_0, ..., X_{n-1}`.
//! * Markov `M = X - D`: symmetric off-diagonal `X_ij` (upper triangle,
//!   row-major) and diagonal equal to minus the off-diagonal row sum.
//! * Wigner: symmetric off-diagonal entries, zero diagonal.
//! * Wigner plus diagonal: `sqrt(n) Z + X + xi I` with standard normal `Z`
//!   (diagonal) and scalar `xi`.
//!
//! Every sample is a pure function of `(ensemble, n, distribution, seed)`.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::RngCore;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{invalid, Error, Result};
use crate::matrix::Matrix;
use crate::rng::{open_unit, stream_rng};

/// Law of the i.i.d. matrix entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntryDistribution {
    Rademacher,
    Gaussian,
    /// `sqrt(6) (U - U')` for independent uniforms: mean 0, variance 1.
    Triangular,
    /// `mean + N(0, 1)`.
    ShiftedGaussian { mean: f64 },
}

impl EntryDistribution {
    pub fn mean(&self) -> f64 {
        match self {
            EntryDistribution::ShiftedGaussian { mean } => *mean,
            _ => 0.0,
        }
    }

    pub fn variance(&self) -> f64 {
        1.0
    }

    pub fn tag(&self) -> &'static str {
        match self {
            EntryDistribution::Rademacher => "rademacher",
            EntryDistribution::Gaussian => "gaussian",
            EntryDistribution::Triangular => "triangular",
            EntryDistribution::ShiftedGaussian { .. } => "shifted_gaussian",
        }
    }

    /// Parses a tag; `shifted_gaussian` takes its mean from `mean`.
    pub fn parse(tag: &str, mean: f64) -> Result<Self> {
        match tag {
            "rademacher" => Ok(EntryDistribution::Rademacher),
            "gaussian" => Ok(EntryDistribution::Gaussian),
            "triangular" => Ok(EntryDistribution::Triangular),
            "shifted_gaussian" => {
                if !mean.is_finite() {
                    return Err(invalid("shifted_gaussian mean must be finite"));
                }
                Ok(EntryDistribution::ShiftedGaussian { mean })
            }
            _ => Err(invalid(format!("unknown distribution {tag:?}"))),
        }
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> f64 {
        match self {
            EntryDistribution::Rademacher => {
                if rng.next_u64() >> 63 == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
            EntryDistribution::Gaussian => standard_normal(rng),
            EntryDistribution::Triangular => {
                let u = open_unit(rng);
                let v = open_unit(rng);
                (u - v) * 6f64.sqrt()
            }
            EntryDistribution::ShiftedGaussian { mean } => mean + standard_normal(rng),
        }
    }

    pub fn sample_vec(&self, rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
        (0..len).map(|_| self.sample(rng)).collect()
    }
}

impl fmt::Display for EntryDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryDistribution::ShiftedGaussian { mean } => write!(f, "shifted_gaussian({mean})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// Inverse-CDF standard normal draw.
pub fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let n = Normal::new(0.0, 1.0).expect("valid parameters");
    n.inverse_cdf(open_unit(rng))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ensemble {
    Hankel,
    Toeplitz,
    Markov,
    Wigner,
    WignerPlusDiag,
}

impl Ensemble {
    pub fn as_str(self) -> &'static str {
        match self {
            Ensemble::Hankel => "hankel",
            Ensemble::Toeplitz => "toeplitz",
            Ensemble::Markov => "markov",
            Ensemble::Wigner => "wigner",
            Ensemble::WignerPlusDiag => "wigner_plus_diag",
        }
    }

    /// Length of the i.i.d. entry stream consumed by an `n x n` sample.
    pub fn stream_len(self, n: usize) -> usize {
        match self {
            Ensemble::Hankel => 2 * n - 1,
            Ensemble::Toeplitz => n,
            Ensemble::Markov | Ensemble::Wigner | Ensemble::WignerPlusDiag => n * (n - 1) / 2,
        }
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Ensemble {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hankel" => Ok(Ensemble::Hankel),
            "toeplitz" => Ok(Ensemble::Toeplitz),
            "markov" => Ok(Ensemble::Markov),
            "wigner" => Ok(Ensemble::Wigner),
            "wigner_plus_diag" => Ok(Ensemble::WignerPlusDiag),
            _ => Err(invalid(format!("unknown ensemble {s:?}"))),
        }
    }
}

/// `[X_{|i-j|}]` from `entries = (X_0, ..., X_{n-1})`.
pub fn toeplitz_from<T: Clone>(entries: &[T]) -> Matrix<T> {
    let n = entries.len();
    Matrix::from_fn(n, n, |i, j| entries[i.abs_diff(j)].clone())
}

/// `[X_{i+j-1}]` (1-based) from `entries = (X_1, ..., X_{2n-1})`.
pub fn hankel_from<T: Clone>(entries: &[T]) -> Result<Matrix<T>> {
    if entries.len() % 2 == 0 {
        return Err(invalid(format!("hankel stream needs odd length 2n - 1, got {}", entries.len())));
    }
    let n = (entries.len() + 1) / 2;
    Ok(Matrix::from_fn(n, n, |i, j| entries[i + j].clone()))
}

/// Nonsymmetric Toeplitz `[X_{n+i-j}]` (1-based) from the Hankel stream;
/// it equals the Hankel matrix with its columns reversed.
pub fn reversed_toeplitz_from<T: Clone>(entries: &[T]) -> Result<Matrix<T>> {
    if entries.len() % 2 == 0 {
        return Err(invalid(format!("stream needs odd length 2n - 1, got {}", entries.len())));
    }
    let n = (entries.len() + 1) / 2;
    Ok(Matrix::from_fn(n, n, |i, j| entries[n - 1 + i - j].clone()))
}

/// Index of `X_ij`, `i < j` (0-based), in the row-major upper triangle.
pub fn upper_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn symmetric_from_upper<T: Clone + Zero>(n: usize, upper: &[T]) -> Result<Matrix<T>> {
    if upper.len() != n * (n - 1) / 2 {
        return Err(invalid(format!("expected {} upper-triangle entries for n = {n}, got {}", n * (n - 1) / 2, upper.len())));
    }
    Ok(Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => upper[upper_index(n, i, j)].clone(),
        std::cmp::Ordering::Greater => upper[upper_index(n, j, i)].clone(),
        std::cmp::Ordering::Equal => T::zero(),
    }))
}

/// Markov matrix with off-diagonal entries from `upper` and zero row sums.
pub fn markov_from<T>(n: usize, upper: &[T]) -> Result<Matrix<T>>
where
    T: Clone + Zero + Neg<Output = T> + for<'a> Add<&'a T, Output = T>,
{
    let mut m = symmetric_from_upper(n, upper)?;
    for i in 0..n {
        let s = m.row(i).iter().fold(T::zero(), |acc, x| acc + x);
        m.set(i, i, -s);
    }
    Ok(m)
}

/// Symmetric matrix with zero diagonal and off-diagonal entries from `upper`.
pub fn wigner_from<T: Clone + Zero>(n: usize, upper: &[T]) -> Result<Matrix<T>> {
    symmetric_from_upper(n, upper)
}

#[derive(Debug, Clone)]
pub struct EnsembleSample {
    pub matrix: Matrix<f64>,
    pub ensemble: Ensemble,
    pub n: usize,
    pub dist: EntryDistribution,
    pub seed: u64,
}

/// Draws one `n x n` matrix. The stream is consumed in the layout order of
/// the builders above; the Wigner-plus-diagonal extras (`Z`, then `xi`) come
/// after the off-diagonal entries.
pub fn sample_matrix(ensemble: Ensemble, n: usize, dist: EntryDistribution, seed: u64) -> Result<EnsembleSample> {
    if n == 0 {
        return Err(invalid("matrix size n must be at least 1"));
    }
    let mut rng = stream_rng(seed);
    let stream = dist.sample_vec(&mut rng, ensemble.stream_len(n));
    let matrix = match ensemble {
        Ensemble::Hankel => hankel_from(&stream)?,
        Ensemble::Toeplitz => toeplitz_from(&stream),
        Ensemble::Markov => markov_from(n, &stream)?,
        Ensemble::Wigner => wigner_from(n, &stream)?,
        Ensemble::WignerPlusDiag => {
            let mut m = wigner_from(n, &stream)?;
            let z: Vec<f64> = (0..n).map(|_| standard_normal(&mut rng)).collect();
            let xi = standard_normal(&mut rng);
            let root_n = (n as f64).sqrt();
            for (i, zi) in z.iter().enumerate() {
                m.set(i, i, root_n * zi + xi);
            }
            m
        }
    };
    Ok(EnsembleSample { matrix, ensemble, n, dist, seed })
}

/// `(1/n^2) sum_i (sum_{j != i} (X_ij - mean))^2` over the off-diagonal array
/// of a Markov sample.
pub fn row_sum_statistic(sample: &EnsembleSample) -> Result<f64> {
    if sample.ensemble != Ensemble::Markov {
        return Err(invalid(format!("row-sum statistic needs a markov sample, got {}", sample.ensemble)));
    }
    let n = sample.n;
    let mean = sample.dist.mean();
    let total: f64 = (0..n)
        .map(|i| {
            let s: f64 = sample.matrix.row(i).iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x - mean).sum();
            s * s
        })
        .sum();
    Ok(total / (n * n) as f64)
}

/// Two-element subset `{lo, hi}` of `{1, ..., n}`, `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPair {
    lo: usize,
    hi: usize,
}

impl VertexPair {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a == b {
            return Err(invalid(format!("vertex pair needs two distinct 1-based vertices, got {{{a}, {b}}}")));
        }
        Ok(Self { lo: a.min(b), hi: a.max(b) })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.hi > n {
            return Err(invalid(format!("vertex pair {{{}, {}}} outside 1..={n}", self.lo, self.hi)));
        }
        Ok(())
    }
}

/// All vertex pairs of `{1, ..., n}` in the upper-triangle order of [`markov_from`].
pub fn vertex_pairs(n: usize) -> Vec<VertexPair> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| VertexPair { lo: i, hi: j })).collect()
}

/// Trace of `Q_{a,b}`: `-2` if `a = b`, `-1` if they share their smaller or
/// larger vertex, `1` if the smaller vertex of one is the larger of the
/// other, else `0`.
pub fn markov_t(a: VertexPair, b: VertexPair) -> i64 {
    if a == b {
        -2
    } else if a.lo == b.lo || a.hi == b.hi {
        -1
    } else if a.lo == b.hi || a.hi == b.lo {
        1
    } else {
        0
    }
}

/// `Q_{a,b}`, with `-1` at `(a_lo, b_lo)` and `(a_hi, b_hi)` and `1` at
/// `(a_lo, b_hi)` and `(a_hi, b_lo)`, together with its trace.
pub fn markov_q(a: VertexPair, b: VertexPair, n: usize) -> Result<(Matrix<i64>, i64)> {
    a.check(n)?;
    b.check(n)?;
    let mut q = Matrix::zeros(n, n);
    let mut add = |i: usize, j: usize, v: i64| {
        let cur = *q.get(i - 1, j - 1);
        q.set(i - 1, j - 1, cur + v);
    };
    add(a.lo, b.lo, -1);
    add(a.hi, b.hi, -1);
    add(a.lo, b.hi, 1);
    add(a.hi, b.lo, 1);
    Ok((q, markov_t(a, b)))
}

/// `sum_a X_a Q_{a,a}` with `X_a` listed in [`vertex_pairs`] order.
pub fn markov_from_q<T>(n: usize, upper: &[T]) -> Result<Matrix<T>>
where
    T: Clone + Zero + One + Neg<Output = T> + for<'a> Add<&'a T, Output = T>,
{
    let pairs = vertex_pairs(n);
    if upper.len() != pairs.len() {
        return Err(invalid(format!("expected {} entries for n = {n}, got {}", pairs.len(), upper.len())));
    }
    let mut m = Matrix::<T>::zeros(n, n);
    for (a, x) in pairs.iter().zip(upper) {
        let (q, _) = markov_q(*a, *a, n)?;
        for i in 0..n {
            for j in 0..n {
                let c = *q.get(i, j);
                if c != 0 {
                    let term = if c > 0 { x.clone() } else { -x.clone() };
                    let cur = m.get(i, j).clone();
                    m.set(i, j, cur + &term);
                }
            }
        }
    }
    Ok(m)
}
