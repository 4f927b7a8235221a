//! Symmetric eigenvalues and empirical-spectrum statistics.

use std::io::{self, Write};
use std::ops::{Add, Mul};

use num_traits::{FromPrimitive, One, Zero};

use crate::ensembles::{hankel_from, markov_from, markov_t, toeplitz_from, vertex_pairs, Ensemble, EntryDistribution};
use crate::error::{capacity, invalid, numerical, Result};
use crate::matrix::{format_f64, Matrix};

/// Off-diagonal deflation threshold of the QL iteration.
pub const QL_EPSILON: f64 = 1.0 / (1u64 << 46) as f64;
pub const QL_MAX_ITERATIONS: usize = 30;
/// Largest number of index tuples visited by [`trace_via_circuits`].
pub const DEFAULT_CIRCUIT_BUDGET: u64 = 10_000_000;

fn check_symmetric(a: &Matrix<f64>) -> Result<()> {
    if !a.is_square() {
        return Err(invalid(format!("matrix is {} x {}, expected square", a.rows(), a.cols())));
    }
    let n = a.rows();
    let scale = a.as_slice().iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if !scale.is_finite() {
        return Err(numerical("matrix has non-finite entries"));
    }
    for i in 0..n {
        for j in 0..i {
            if (a.get(i, j) - a.get(j, i)).abs() > 1e-12 * scale {
                return Err(invalid(format!("matrix is not symmetric at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// Householder reduction of a full symmetric matrix to tridiagonal form.
/// Returns the diagonal and the subdiagonal (`e[i]` couples `i` and `i+1`).
fn tridiagonalize(mut a: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];
    for k in 0..n.saturating_sub(1) {
        let lo = k + 1;
        let norm = (lo..n).map(|i| a[i * n + k] * a[i * n + k]).sum::<f64>().sqrt();
        d[k] = a[k * n + k];
        let x0 = a[lo * n + k];
        let alpha = if x0 > 0.0 { -norm } else { norm };
        e[k] = alpha;
        if norm == 0.0 {
            e[k] = 0.0;
            continue;
        }
        for i in lo..n {
            v[i] = a[i * n + k];
        }
        v[lo] -= alpha;
        let vnorm = (lo..n).map(|i| v[i] * v[i]).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for x in &mut v[lo..n] {
            *x /= vnorm;
        }
        // p = A22 v, q = p - (v.p) v, A22 -= 2 (v q^T + q v^T)
        for i in lo..n {
            let row = &a[i * n + lo..i * n + n];
            p[i] = row.iter().zip(&v[lo..n]).map(|(x, y)| x * y).sum();
        }
        let kappa: f64 = (lo..n).map(|i| v[i] * p[i]).sum();
        for i in lo..n {
            p[i] -= kappa * v[i];
        }
        for i in lo..n {
            let (vi, qi) = (2.0 * v[i], 2.0 * p[i]);
            let row = &mut a[i * n + lo..i * n + n];
            for ((x, vj), qj) in row.iter_mut().zip(&v[lo..n]).zip(&p[lo..n]) {
                *x -= vi * qj + qi * vj;
            }
        }
    }
    if n > 0 {
        d[n - 1] = a[(n - 1) * n + n - 1];
    }
    (d, e)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues land in `d`.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= QL_EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if iter == QL_MAX_ITERATIONS {
                return Err(numerical(format!("QL iteration did not converge for eigenvalue {l} in {QL_MAX_ITERATIONS} steps")));
            }
            iter += 1;
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
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
    Ok(())
}

/// Ascending eigenvalues of a symmetric matrix.
pub fn eigvalsh(a: &Matrix<f64>) -> Result<Vec<f64>> {
    check_symmetric(a)?;
    let n = a.rows();
    let sym: Vec<f64> = Matrix::from_fn(n, n, |i, j| 0.5 * (a.get(i, j) + a.get(j, i))).into_vec();
    let (mut d, mut e) = tridiagonalize(sym, n);
    tridiagonal_ql(&mut d, &mut e)?;
    if d.iter().any(|x| !x.is_finite()) {
        return Err(numerical("eigenvalues are not finite"));
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// How eigenvalues were rescaled before being stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Unit,
    SqrtN,
    N,
}

impl Scale {
    pub fn as_str(self) -> &'static str {
        match self {
            Scale::Unit => "1",
            Scale::SqrtN => "sqrt_n",
            Scale::N => "n",
        }
    }

    pub fn divisor(self, n: usize) -> f64 {
        match self {
            Scale::Unit => 1.0,
            Scale::SqrtN => (n as f64).sqrt(),
            Scale::N => n as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Provenance {
    pub ensemble: Ensemble,
    pub n: usize,
    pub dist: EntryDistribution,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalSpectrum {
    eigenvalues: Vec<f64>,
    pub scale: Scale,
    pub provenance: Option<Provenance>,
}

impl EmpiricalSpectrum {
    /// Sorts `eigenvalues` ascending.
    pub fn new(mut eigenvalues: Vec<f64>, scale: Scale) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Self { eigenvalues, scale, provenance: None }
    }

    /// Eigenvalues of `a` divided by `scale.divisor(n)`.
    pub fn of_matrix(a: &Matrix<f64>, scale: Scale) -> Result<Self> {
        let div = scale.divisor(a.rows());
        let eig = eigvalsh(a)?;
        Ok(Self::new(eig.into_iter().map(|x| x / div).collect(), scale))
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = Some(p);
        self
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `(1/n) sum lambda^r`.
    pub fn moment(&self, r: u32) -> f64 {
        if self.eigenvalues.is_empty() {
            return f64::NAN;
        }
        self.eigenvalues.iter().map(|x| x.powi(r as i32)).sum::<f64>() / self.eigenvalues.len() as f64
    }

    /// Merges several spectra into one sorted list.
    pub fn pooled(parts: &[EmpiricalSpectrum]) -> Self {
        let scale = parts.first().map_or(Scale::Unit, |p| p.scale);
        Self::new(parts.iter().flat_map(|p| p.eigenvalues.iter().copied()).collect(), scale)
    }
}

/// `n^-(r/2 + 1) tr(A^r)`, the `r`-th moment of the spectrum of `A / sqrt(n)`.
pub fn empirical_moment(a: &Matrix<f64>, r: u32) -> Result<f64> {
    Ok(EmpiricalSpectrum::of_matrix(a, Scale::SqrtN)?.moment(r))
}

/// Largest absolute eigenvalue.
pub fn spectral_norm(a: &Matrix<f64>) -> Result<f64> {
    let eig = eigvalsh(a)?;
    Ok(match (eig.first(), eig.last()) {
        (Some(lo), Some(hi)) => lo.abs().max(hi.abs()),
        _ => 0.0,
    })
}

fn visit_tuples(base: usize, len: usize, budget: u64, mut f: impl FnMut(&[usize])) -> Result<()> {
    let total = (base as u64).checked_pow(len as u32).filter(|&t| t <= budget);
    if total.is_none() {
        return Err(capacity(format!("{base}^{len} index tuples exceed the budget of {budget}")));
    }
    if base == 0 {
        return Ok(());
    }
    let mut idx = vec![0usize; len];
    loop {
        f(&idx);
        let mut pos = len;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < base {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// `tr(A^r)` as a sum over circuits, for an explicit entry assignment laid
/// out as in the ensemble builders (Toeplitz `X_0..X_{n-1}`, Hankel
/// `X_1..X_{2n-1}`, Markov upper triangle).
///
/// Toeplitz circuits contribute `prod X_{|p(i) - p(i-1)|}`, Hankel circuits
/// `prod X_{p(i) + p(i-1) - 1}`, and Markov circuits `a_1, ..., a_r` of
/// vertex pairs `prod t_{a_j, a_{j+1}} prod X_{a_j}`.
pub fn trace_via_circuits<T>(ensemble: Ensemble, entries: &[T], n: usize, r: usize, budget: u64) -> Result<T>
where
    T: Clone + Zero + One + FromPrimitive + for<'a> Add<&'a T, Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    if n == 0 || r == 0 {
        return Err(invalid("circuit traces need n >= 1 and r >= 1"));
    }
    let expected = ensemble.stream_len(n);
    if entries.len() != expected {
        return Err(invalid(format!("{ensemble} with n = {n} needs {expected} entries, got {}", entries.len())));
    }
    let mut total = T::zero();
    match ensemble {
        Ensemble::Toeplitz | Ensemble::Hankel => {
            visit_tuples(n, r, budget, |p| {
                let mut prod = T::one();
                for i in 0..r {
                    let (cur, prev) = (p[(i + 1) % r], p[i]);
                    let idx = if ensemble == Ensemble::Toeplitz { cur.abs_diff(prev) } else { cur + prev };
                    prod = &prod * &entries[idx];
                }
                total = std::mem::replace(&mut total, T::zero()) + &prod;
            })?;
        }
        Ensemble::Markov => {
            let pairs = vertex_pairs(n);
            visit_tuples(pairs.len(), r, budget, |a| {
                let mut weight = 1i64;
                for j in 0..r {
                    weight *= markov_t(pairs[a[j]], pairs[a[(j + 1) % r]]);
                    if weight == 0 {
                        return;
                    }
                }
                let mut prod = T::from_i64(weight).expect("small integer");
                for &j in a {
                    prod = &prod * &entries[j];
                }
                total = std::mem::replace(&mut total, T::zero()) + &prod;
            })?;
        }
        Ensemble::Wigner | Ensemble::WignerPlusDiag => {
            return Err(invalid(format!("no circuit expansion for {ensemble}")));
        }
    }
    Ok(total)
}

/// `tr(A^r)` by building the matrix and multiplying.
pub fn trace_via_powers<T>(ensemble: Ensemble, entries: &[T], n: usize, r: usize) -> Result<T>
where
    T: Clone + Zero + One + std::ops::Neg<Output = T> + for<'a> Add<&'a T, Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let m = match ensemble {
        Ensemble::Toeplitz => toeplitz_from(entries),
        Ensemble::Hankel => hankel_from(entries)?,
        Ensemble::Markov => markov_from(n, entries)?,
        _ => return Err(invalid(format!("no entry layout for {ensemble}"))),
    };
    if m.rows() != n {
        return Err(invalid(format!("entries describe a {} x {} matrix, expected n = {n}", m.rows(), m.rows())));
    }
    Ok(m.power_trace(r))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub left: f64,
    pub right: f64,
    pub count: u64,
    pub density: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub bins: Vec<HistogramBin>,
}

/// Equal-width histogram over `range` (default `[min, max]`); the last bin
/// is closed on the right and values outside the range are dropped.
/// Densities integrate to 1 over the counted values.
pub fn histogram(spec: &EmpiricalSpectrum, bins: usize, range: Option<(f64, f64)>) -> Result<Histogram> {
    if bins == 0 {
        return Err(invalid("histogram needs at least one bin"));
    }
    let eig = spec.eigenvalues();
    if eig.is_empty() {
        return Err(invalid("histogram of an empty spectrum"));
    }
    let (mut lo, mut hi) = range.unwrap_or((eig[0], eig[eig.len() - 1]));
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(invalid(format!("invalid histogram range [{lo}, {hi}]")));
    }
    if lo == hi {
        lo -= 0.5;
        hi += 0.5;
    }
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0u64; bins];
    for &x in eig {
        if x < lo || x > hi {
            continue;
        }
        let b = (((x - lo) / width) as usize).min(bins - 1);
        counts[b] += 1;
    }
    let total: u64 = counts.iter().sum();
    let bins = counts
        .iter()
        .enumerate()
        .map(|(b, &count)| {
            let left = lo + b as f64 * width;
            let right = if b + 1 == bins { hi } else { lo + (b + 1) as f64 * width };
            let density = if total == 0 { 0.0 } else { count as f64 / (total as f64 * width) };
            HistogramBin { left, right, count, density }
        })
        .collect();
    Ok(Histogram { bins })
}

impl Histogram {
    pub const CSV_HEADER: &'static str = "bin_left,bin_right,count,density";

    pub fn write_csv(&self, mut w: impl Write) -> io::Result<()> {
        writeln!(w, "{}", Self::CSV_HEADER)?;
        for b in &self.bins {
            writeln!(w, "{},{},{},{}", format_f64(b.left), format_f64(b.right), b.count, format_f64(b.density))?;
        }
        Ok(())
    }

    /// Densities convolved with a Gaussian kernel of bandwidth two bin widths,
    /// renormalized near the edges.
    pub fn smoothed_density(&self) -> Vec<f64> {
        let k = self.bins.len();
        (0..k)
            .map(|i| {
                let (mut num, mut den) = (0.0, 0.0);
                for (j, b) in self.bins.iter().enumerate() {
                    let u = (i as f64 - j as f64) / 2.0;
                    let w = (-0.5 * u * u).exp();
                    num += w * b.density;
                    den += w;
                }
                num / den
            })
            .collect()
    }

    /// Number of strict interior local maxima of [`Self::smoothed_density`].
    pub fn mode_count(&self) -> usize {
        let s = self.smoothed_density();
        (1..s.len().saturating_sub(1)).filter(|&i| s[i] > s[i - 1] && s[i] > s[i + 1]).count()
    }

    /// Density of the bin containing `x`, if any.
    pub fn density_at(&self, x: f64) -> Option<f64> {
        self.bins.iter().find(|b| b.left <= x && x <= b.right).map(|b| b.density)
    }
}

/// Sup-distance between the empirical distribution functions.
pub fn kolmogorov_distance(a: &EmpiricalSpectrum, b: &EmpiricalSpectrum) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(invalid("Kolmogorov distance of an empty spectrum"));
    }
    let (xa, xb) = (a.eigenvalues(), b.eigenvalues());
    let (na, nb) = (xa.len() as f64, xb.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut best = 0.0f64;
    while i < xa.len() || j < xb.len() {
        let x = match (xa.get(i), xb.get(j)) {
            (Some(&p), Some(&q)) => p.min(q),
            (Some(&p), None) => p,
            (None, Some(&q)) => q,
            (None, None) => unreachable!(),
        };
        while i < xa.len() && xa[i] <= x {
            i += 1;
        }
        while j < xb.len() && xb[j] <= x {
            j += 1;
        }
        best = best.max((i as f64 / na - j as f64 / nb).abs());
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::{reversed_toeplitz_from, sample_matrix};
    use crate::rng::{derive_seed, stream_rng};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::Rng;

    fn random_symmetric(n: usize, seed: u64) -> Matrix<f64> {
        let mut rng = stream_rng(seed);
        let upper: Vec<f64> = (0..n * (n + 1) / 2).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mut m = Matrix::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                m.set(i, j, upper[k]);
                m.set(j, i, upper[k]);
                k += 1;
            }
        }
        m
    }

    #[test]
    fn small_eigenvalues() {
        let x = Matrix::from_vec(2, 2, vec![0.0, 1.0, 1.0, 0.0]);
        let e = eigvalsh(&x).unwrap();
        assert!((e[0] + 1.0).abs() < 1e-14 && (e[1] - 1.0).abs() < 1e-14);
        let d = Matrix::from_vec(3, 3, vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0]);
        assert_eq!(eigvalsh(&d).unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(eigvalsh(&Matrix::from_vec(1, 1, vec![4.0])).unwrap(), vec![4.0]);
        assert!(eigvalsh(&Matrix::<f64>::zeros(0, 0)).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        let a = Matrix::from_vec(2, 2, vec![0.0, 1.0, 2.0, 0.0]);
        assert!(matches!(eigvalsh(&a), Err(crate::Error::InvalidArgument(_))));
        assert!(eigvalsh(&Matrix::from_vec(1, 2, vec![0.0, 1.0])).is_err());
        assert!(eigvalsh(&Matrix::from_vec(1, 1, vec![f64::NAN])).is_err());
    }

    #[test]
    fn trace_identities_on_random_matrices() {
        for t in 0..100u64 {
            let n = 1 + (t as usize * 37) % 200;
            let a = random_symmetric(n, derive_seed(11, t));
            let e = eigvalsh(&a).unwrap();
            assert!(e.windows(2).all(|w| w[0] <= w[1]));
            let tr = a.trace();
            let fro2 = a.frobenius_norm().powi(2);
            let s1: f64 = e.iter().sum();
            let s2: f64 = e.iter().map(|x| x * x).sum();
            let scale = a.frobenius_norm().max(1.0);
            assert!((s1 - tr).abs() <= 1e-10 * scale * (n as f64).sqrt(), "n = {n}: {s1} vs {tr}");
            assert!((s2 - fro2).abs() <= 1e-10 * fro2, "n = {n}: {s2} vs {fro2}");
        }
    }

    #[test]
    fn permutation_invariance() {
        let a = random_symmetric(9, 5);
        let perm = [3, 7, 0, 8, 1, 5, 2, 6, 4];
        let b = Matrix::from_fn(9, 9, |i, j| *a.get(perm[i], perm[j]));
        for r in 1..=6 {
            let (x, y) = (empirical_moment(&a, r).unwrap(), empirical_moment(&b, r).unwrap());
            assert!((x - y).abs() <= 1e-12 * a.frobenius_norm().powi(r as i32), "r = {r}: {x} vs {y}");
        }
        // exact power traces are invariant bit for bit
        let ai = a.map(|x| BigRational::from_float(*x).unwrap());
        let bi = b.map(|x| BigRational::from_float(*x).unwrap());
        for r in 1..=4 {
            assert_eq!(ai.power_trace(r), bi.power_trace(r));
        }
    }

    #[test]
    fn moments_and_norms() {
        let n = 6;
        let id = Matrix::<f64>::identity(n);
        assert!((empirical_moment(&id, 2).unwrap() - 1.0 / n as f64).abs() < 1e-15);
        assert_eq!(empirical_moment(&Matrix::zeros(4, 4), 3).unwrap(), 0.0);
        let d = Matrix::from_vec(2, 2, vec![-5.0, 0.0, 0.0, 3.0]);
        assert_eq!(spectral_norm(&d).unwrap(), 5.0);
        let x = Matrix::from_vec(2, 2, vec![0.0, 1.0, 1.0, 0.0]);
        assert!((spectral_norm(&x).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(spectral_norm(&Matrix::from_vec(1, 1, vec![0.0])).unwrap(), 0.0);
        let a = random_symmetric(8, 3);
        for r in 1..=4 {
            let direct = a.power_trace(r as usize) / (8f64).powf(r as f64 / 2.0 + 1.0);
            assert!((empirical_moment(&a, r).unwrap() - direct).abs() < 1e-12);
        }
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn circuit_examples() {
        let e = [q(2), q(-3), q(5)];
        let h = trace_via_circuits(Ensemble::Hankel, &e, 2, 2, DEFAULT_CIRCUIT_BUDGET).unwrap();
        assert_eq!(h, q(4 + 2 * 9 + 25));
        let t = trace_via_circuits(Ensemble::Toeplitz, &e, 3, 2, DEFAULT_CIRCUIT_BUDGET).unwrap();
        assert_eq!(t, trace_via_powers(Ensemble::Toeplitz, &e, 3, 2).unwrap());
        let m = trace_via_circuits(Ensemble::Markov, &e, 3, 1, DEFAULT_CIRCUIT_BUDGET).unwrap();
        assert_eq!(m, q(-2 * (2 - 3 + 5)));
        assert!(matches!(
            trace_via_circuits(Ensemble::Toeplitz, &vec![q(1); 10], 10, 8, 1000),
            Err(crate::Error::Capacity(_))
        ));
        assert!(trace_via_circuits(Ensemble::Toeplitz, &e, 2, 2, 100).is_err());
    }

    #[test]
    fn circuits_match_powers() {
        let mut rng = stream_rng(77);
        for ensemble in [Ensemble::Toeplitz, Ensemble::Hankel, Ensemble::Markov] {
            for n in 1..=6 {
                let entries: Vec<BigRational> = (0..ensemble.stream_len(n))
                    .map(|_| BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()))
                    .collect();
                for r in 1..=4 {
                    let c = trace_via_circuits(ensemble, &entries, n, r, DEFAULT_CIRCUIT_BUDGET).unwrap();
                    let p = trace_via_powers(ensemble, &entries, n, r).unwrap();
                    assert_eq!(c, p, "{ensemble} n = {n} r = {r}");
                }
            }
        }
    }

    #[test]
    fn histogram_basics() {
        let s = EmpiricalSpectrum::new(vec![1.0, 0.0], Scale::Unit);
        let h = histogram(&s, 2, None).unwrap();
        assert_eq!(h.bins.iter().map(|b| b.density).collect::<Vec<_>>(), vec![1.0, 1.0]);
        assert_eq!(h.bins.iter().map(|b| b.count).collect::<Vec<_>>(), vec![1, 1]);
        let s = EmpiricalSpectrum::new((0..1000).map(|i| (i as f64 * 0.37).sin()).collect(), Scale::Unit);
        let h = histogram(&s, 17, Some((-1.5, 1.5))).unwrap();
        let mass: f64 = h.bins.iter().map(|b| b.density * (b.right - b.left)).sum();
        assert!((mass - 1.0).abs() < 1e-12);
        assert!(histogram(&s, 0, None).is_err());
        assert!(histogram(&EmpiricalSpectrum::new(vec![], Scale::Unit), 3, None).is_err());
        let mut buf = Vec::new();
        h.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("bin_left,bin_right,count,density\n"));
        assert_eq!(text.lines().count(), 18);
    }

    #[test]
    fn mode_counting() {
        let bimodal: Vec<f64> = (0..4000).map(|i| {
            let u = (i as f64 + 0.5) / 4000.0;
            if i % 2 == 0 { -2.0 + 0.5 * (u - 0.5) } else { 2.0 + 0.5 * (u - 0.5) }
        }).collect();
        let h = histogram(&EmpiricalSpectrum::new(bimodal, Scale::Unit), 40, Some((-4.0, 4.0))).unwrap();
        assert_eq!(h.mode_count(), 2);
        let unimodal: Vec<f64> = (1..4000).map(|i| {
            let u = i as f64 / 4000.0;
            // triangular quantile function
            if u < 0.5 { (2.0 * u).sqrt() - 1.0 } else { 1.0 - (2.0 * (1.0 - u)).sqrt() }
        }).collect();
        let h = histogram(&EmpiricalSpectrum::new(unimodal, Scale::Unit), 30, None).unwrap();
        assert_eq!(h.mode_count(), 1);
    }

    #[test]
    fn kolmogorov_examples() {
        let a = EmpiricalSpectrum::new(vec![0.0, 1.0, 2.0], Scale::Unit);
        assert_eq!(kolmogorov_distance(&a, &a).unwrap(), 0.0);
        let p = EmpiricalSpectrum::new(vec![0.0], Scale::Unit);
        let r = EmpiricalSpectrum::new(vec![1.0], Scale::Unit);
        assert_eq!(kolmogorov_distance(&p, &r).unwrap(), 1.0);
        let b = EmpiricalSpectrum::new(vec![0.5, 1.0, 1.0, 3.0], Scale::Unit);
        assert!((kolmogorov_distance(&a, &b).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(kolmogorov_distance(&a, &EmpiricalSpectrum::new(vec![], Scale::Unit)).is_err());
    }

    #[test]
    fn singular_values_of_reversed_toeplitz() {
        for n in [1, 2, 5, 16, 64] {
            let mut rng = stream_rng(derive_seed(21, n as u64));
            let stream = EntryDistribution::Gaussian.sample_vec(&mut rng, 2 * n - 1);
            let h = hankel_from(&stream).unwrap();
            let r = reversed_toeplitz_from(&stream).unwrap();
            let gram = r.transpose().matmul(&r);
            let sv: Vec<f64> = eigvalsh(&gram).unwrap().iter().map(|x| x.max(0.0).sqrt()).collect();
            let mut abs_eig: Vec<f64> = eigvalsh(&h).unwrap().iter().map(|x| x.abs()).collect();
            abs_eig.sort_by(f64::total_cmp);
            let scale = h.frobenius_norm();
            for (s, e) in sv.iter().zip(&abs_eig) {
                // sqrt of the Gram spectrum loses half the digits near zero
                assert!((s - e).abs() <= 1e-6 * scale, "n = {n}: {s} vs {e}");
            }
        }
    }

    #[test]
    fn sampled_ensembles_have_symmetric_spectra_checks() {
        let s = sample_matrix(Ensemble::Markov, 50, EntryDistribution::Gaussian, 1).unwrap();
        let e = eigvalsh(&s.matrix).unwrap();
        // zero row sums: the all-ones vector is a null vector
        assert!(e.iter().any(|x| x.abs() < 1e-10));
    }
}
