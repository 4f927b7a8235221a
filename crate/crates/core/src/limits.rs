//! Limiting moment sequences and free cumulants.
//!
//! Even moments of the limit laws are sums over partition words of length
//! `2k`: `p_T(w)` (Toeplitz), `p_H(w)` (Hankel) or `2^height(w)` (Markov).
//! Odd moments vanish. Moments and free cumulants of a symmetric law are
//! linked by
//!
//! `m_2n = sum_{r=1..n} k_2r * sum_{i_1 + ... + i_2r = 2n - 2r} m_{i_1} ... m_{i_2r}`,
//!
//! which is applied in both directions with exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::rng::derive_seed;
use crate::polytope::VolumeCache;
use crate::volumes::{build_system, volume_exact_cached, volume_mc, SlabKind, VolumeEstimate, DEFAULT_MAX_DIMENSION};
use crate::words::{enumerate_words_capped, height, is_irreducible, DEFAULT_MAX_HALF_LENGTH};

type Q = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Toeplitz,
    Hankel,
    Markov,
    Semicircle,
    Gaussian,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Toeplitz => "toeplitz",
            Family::Hankel => "hankel",
            Family::Markov => "markov",
            Family::Semicircle => "semicircle",
            Family::Gaussian => "gaussian",
        }
    }

    /// Second moment of the limit law.
    pub fn variance(self) -> u32 {
        match self {
            Family::Markov => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "toeplitz" => Ok(Family::Toeplitz),
            "hankel" => Ok(Family::Hankel),
            "markov" => Ok(Family::Markov),
            "semicircle" => Ok(Family::Semicircle),
            "gaussian" => Ok(Family::Gaussian),
            _ => Err(invalid(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Mc,
    Formula,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Mc => "mc",
            Method::Formula => "formula",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Method::Exact),
            "mc" => Ok(Method::Mc),
            "formula" => Ok(Method::Formula),
            _ => Err(invalid(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MomentValue {
    Exact(BigRational),
    Estimate { value: f64, stderr: f64 },
}

impl MomentValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            MomentValue::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            MomentValue::Estimate { value, .. } => *value,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            MomentValue::Exact(q) => Some(q),
            MomentValue::Estimate { .. } => None,
        }
    }

    pub fn stderr(&self) -> f64 {
        match self {
            MomentValue::Exact(_) => 0.0,
            MomentValue::Estimate { stderr, .. } => *stderr,
        }
    }
}

/// Even moments of one law; odd moments are implicitly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentTable {
    pub family: Family,
    pub method: Method,
    entries: BTreeMap<usize, MomentValue>,
}

impl MomentTable {
    /// A table holding only `m_0 = 1`.
    pub fn new(family: Family, method: Method) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(0, MomentValue::Exact(Q::one()));
        Self { family, method, entries }
    }

    /// Table of exact even moments `m_2, m_4, ...` given in order.
    pub fn from_exact(family: Family, even_moments: impl IntoIterator<Item = BigRational>) -> Self {
        let mut t = Self::new(family, Method::Exact);
        for (i, m) in even_moments.into_iter().enumerate() {
            t.entries.insert(2 * (i + 1), MomentValue::Exact(m));
        }
        t
    }

    pub fn insert(&mut self, order: usize, value: MomentValue) -> Result<()> {
        if order % 2 == 1 {
            return Err(invalid(format!("odd moment m_{order} is identically zero")));
        }
        if order == 0 {
            return Err(invalid("m_0 is fixed at 1"));
        }
        self.entries.insert(order, value);
        Ok(())
    }

    /// Moment of any order; odd orders are exact zeros.
    pub fn get(&self, order: usize) -> Option<MomentValue> {
        if order % 2 == 1 {
            return Some(MomentValue::Exact(Q::zero()));
        }
        self.entries.get(&order).cloned()
    }

    pub fn exact(&self, order: usize) -> Option<BigRational> {
        self.get(order).and_then(|v| v.exact().cloned())
    }

    /// Highest even order stored.
    pub fn max_order(&self) -> usize {
        *self.entries.keys().next_back().unwrap_or(&0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &MomentValue)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    /// Exact moments `m_0, m_1, ..., m_order` or an error naming the first gap.
    fn exact_prefix(&self, order: usize) -> Result<Vec<Q>> {
        (0..=order)
            .map(|i| self.exact(i).ok_or_else(|| invalid(format!("exact moment m_{i} is missing"))))
            .collect()
    }
}

/// Even free cumulants of a symmetric law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumulantTable {
    pub family: Family,
    entries: BTreeMap<usize, BigRational>,
}

impl CumulantTable {
    pub fn new(family: Family) -> Self {
        Self { family, entries: BTreeMap::new() }
    }

    /// Table from `k_2, k_4, ...` given in order.
    pub fn from_even(family: Family, even: impl IntoIterator<Item = BigRational>) -> Self {
        let entries = even.into_iter().enumerate().map(|(i, c)| (2 * (i + 1), c)).collect();
        Self { family, entries }
    }

    pub fn insert(&mut self, order: usize, value: BigRational) -> Result<()> {
        if order == 0 || order % 2 == 1 {
            return Err(invalid(format!("only even cumulants of positive order are stored, got {order}")));
        }
        self.entries.insert(order, value);
        Ok(())
    }

    /// Cumulant of any positive order; odd orders are zero.
    pub fn get(&self, order: usize) -> Option<BigRational> {
        if order % 2 == 1 {
            return Some(Q::zero());
        }
        self.entries.get(&order).cloned()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }
}

/// Tuning for [`limit_moment`].
#[derive(Debug, Clone)]
pub struct MomentOptions {
    pub method: Method,
    pub mc_samples: u64,
    pub seed: u64,
    pub max_half_length: usize,
    pub max_dimension: usize,
}

impl Default for MomentOptions {
    fn default() -> Self {
        Self {
            method: Method::Exact,
            mc_samples: 100_000,
            seed: crate::rng::DEFAULT_SEED,
            max_half_length: DEFAULT_MAX_HALF_LENGTH,
            max_dimension: DEFAULT_MAX_DIMENSION,
        }
    }
}

impl MomentOptions {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn mc(samples: u64, seed: u64) -> Self {
        Self { method: Method::Mc, mc_samples: samples, seed, ..Self::default() }
    }
}

fn q_int(n: impl Into<BigInt>) -> Q {
    Q::from_integer(n.into())
}

/// Seed of the Monte Carlo stream for word `index` among words of length `2k`.
pub fn word_stream_seed(master: u64, k: usize, index: usize) -> u64 {
    derive_seed(master, ((k as u64) << 32) | index as u64)
}

/// Per-word volumes `p(w)` for every word of length `2k`, in enumeration order.
pub fn word_volumes(kind: SlabKind, k: usize, opts: &MomentOptions) -> Result<Vec<VolumeEstimate>> {
    let words = enumerate_words_capped(k, opts.max_half_length)?;
    words
        .par_iter()
        .enumerate()
        .map_init(VolumeCache::new, |cache, (i, w)| {
            let s = build_system(w, kind)?;
            match opts.method {
                Method::Exact => volume_exact_cached(&s, opts.max_dimension, cache),
                Method::Mc => volume_mc(&s, opts.mc_samples, word_stream_seed(opts.seed, k, i)),
                Method::Formula => Err(invalid("volumes are computed exactly or by Monte Carlo")),
            }
        })
        .collect()
}

/// Limiting moment of the given even or odd order.
///
/// Toeplitz and Hankel moments sum per-word volumes (exact or Monte Carlo,
/// with aggregated standard error); Markov moments sum `2^height` and are
/// always exact; semicircle and Gaussian moments come from closed forms.
pub fn limit_moment(family: Family, order: usize, opts: &MomentOptions) -> Result<MomentValue> {
    if order == 0 {
        return Ok(MomentValue::Exact(Q::one()));
    }
    if order % 2 == 1 {
        return Ok(MomentValue::Exact(Q::zero()));
    }
    let k = order / 2;
    match family {
        Family::Semicircle | Family::Gaussian => reference_moments(family, order).map(MomentValue::Exact),
        Family::Markov => {
            if opts.method == Method::Formula {
                return Err(invalid("markov moments are computed by word enumeration"));
            }
            let words = enumerate_words_capped(k, opts.max_half_length)?;
            let sum: BigInt = words.iter().map(|w| BigInt::one() << height(w)).sum();
            Ok(MomentValue::Exact(Q::from_integer(sum)))
        }
        Family::Toeplitz | Family::Hankel => {
            let kind = if family == Family::Toeplitz { SlabKind::Toeplitz } else { SlabKind::Hankel };
            if opts.method == Method::Formula {
                return Err(invalid(format!("{family} moments need method exact or mc")));
            }
            let vols = word_volumes(kind, k, opts)?;
            if opts.method == Method::Exact {
                let sum = vols.iter().map(|v| v.exact_value().cloned().expect("exact volumes")).sum();
                Ok(MomentValue::Exact(sum))
            } else {
                let value = vols.iter().map(VolumeEstimate::as_f64).sum();
                let var: f64 = vols.iter().map(|v| v.stderr.unwrap_or(0.0).powi(2)).sum();
                Ok(MomentValue::Estimate { value, stderr: var.sqrt() })
            }
        }
    }
}

/// Moments of orders `2, 4, ..., max_order` (rounded down to even).
pub fn limit_moment_table(family: Family, max_order: usize, opts: &MomentOptions) -> Result<MomentTable> {
    let method = match family {
        Family::Semicircle | Family::Gaussian => Method::Formula,
        Family::Markov => Method::Exact,
        _ => opts.method,
    };
    let mut t = MomentTable::new(family, method);
    for order in (2..=max_order).step_by(2) {
        t.insert(order, limit_moment(family, order, opts)?)?;
    }
    Ok(t)
}

/// Catalan numbers (semicircle) or `(2k-1)!!` (Gaussian); odd orders are 0.
pub fn reference_moments(family: Family, order: usize) -> Result<BigRational> {
    if order % 2 == 1 {
        return Ok(Q::zero());
    }
    let k = order / 2;
    match family {
        Family::Semicircle => Ok(q_int(catalan(k))),
        Family::Gaussian => Ok(q_int((1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(2 * j - 1)))),
        _ => Err(invalid(format!("{family} has no closed-form reference moments"))),
    }
}

pub fn catalan(k: usize) -> BigInt {
    // C_k = binom(2k, k) / (k + 1)
    let mut c = BigInt::one();
    for j in 0..k {
        c = c * BigInt::from(2 * (2 * j + 1)) / BigInt::from(j + 2);
    }
    c
}

/// Reference table of `m_2, ..., m_max_order`.
pub fn reference_table(family: Family, max_order: usize) -> Result<MomentTable> {
    let mut t = MomentTable::new(family, Method::Formula);
    for order in (2..=max_order).step_by(2) {
        t.insert(order, MomentValue::Exact(reference_moments(family, order)?))?;
    }
    Ok(t)
}

/// `sum over weak compositions i_1 + ... + i_parts = total of prod m_{i_j}`,
/// i.e. the coefficient of `t^total` in `(sum_i m_i t^i)^parts`.
fn composition_sum(moments: &[Q], parts: usize, total: usize) -> Q {
    let mut acc = vec![Q::zero(); total + 1];
    acc[0] = Q::one();
    for _ in 0..parts {
        let mut next = vec![Q::zero(); total + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, m) in moments.iter().enumerate().take(total + 1 - i) {
                if !m.is_zero() {
                    next[i + j] += a * m;
                }
            }
        }
        acc = next;
    }
    acc[total].clone()
}

/// Moments up to order `up_to` from even free cumulants.
pub fn cumulants_to_moments(c: &CumulantTable, up_to: usize) -> Result<MomentTable> {
    let n = up_to / 2;
    let kappa: Vec<Q> = (1..=n)
        .map(|r| c.get(2 * r).ok_or_else(|| invalid(format!("free cumulant k_{} is missing", 2 * r))))
        .collect::<Result<_>>()?;
    // moments[i] = m_i; odd entries stay zero
    let mut moments = vec![Q::zero(); 2 * n + 1];
    moments[0] = Q::one();
    for big_n in 1..=n {
        let mut m = Q::zero();
        for r in 1..=big_n {
            if kappa[r - 1].is_zero() {
                continue;
            }
            let rest = 2 * big_n - 2 * r;
            m += &kappa[r - 1] * composition_sum(&moments[..=rest], 2 * r, rest);
        }
        moments[2 * big_n] = m;
    }
    Ok(MomentTable::from_exact(c.family, (1..=n).map(|i| moments[2 * i].clone())))
}

/// Even free cumulants up to order `up_to` from exact moments.
pub fn moments_to_cumulants(m: &MomentTable, up_to: usize) -> Result<CumulantTable> {
    let n = up_to / 2;
    let moments = m.exact_prefix(2 * n)?;
    let mut kappa: Vec<Q> = Vec::with_capacity(n);
    for big_n in 1..=n {
        let mut k = moments[2 * big_n].clone();
        for r in 1..big_n {
            let rest = 2 * big_n - 2 * r;
            k -= &kappa[r - 1] * composition_sum(&moments[..=rest], 2 * r, rest);
        }
        kappa.push(k);
    }
    Ok(CumulantTable::from_even(m.family, kappa))
}

/// Number of irreducible partition words of length `2k`.
pub fn irreducible_word_count(k: usize) -> Result<u64> {
    Ok(enumerate_words_capped(k, DEFAULT_MAX_HALF_LENGTH)?.iter().filter(|w| is_irreducible(w)).count() as u64)
}

/// Free cumulants of the semicircle law (`k_2 = 1`, all others 0).
pub fn semicircle_cumulants(up_to: usize) -> CumulantTable {
    CumulantTable::from_even(Family::Semicircle, (1..=up_to / 2).map(|r| if r == 1 { Q::one() } else { Q::zero() }))
}

/// Free cumulants of the standard normal law: irreducible word counts.
pub fn gaussian_cumulants(up_to: usize) -> Result<CumulantTable> {
    let even = (1..=up_to / 2).map(|r| irreducible_word_count(r).map(q_int)).collect::<Result<Vec<_>>>()?;
    Ok(CumulantTable::from_even(Family::Gaussian, even))
}

/// Free cumulants of the semicircle-normal free convolution: the sum of the
/// two cumulant sequences.
pub fn markov_cumulants(up_to: usize) -> Result<CumulantTable> {
    let g = gaussian_cumulants(up_to)?;
    let s = semicircle_cumulants(up_to);
    let even = (1..=up_to / 2).map(|r| g.get(2 * r).expect("filled") + s.get(2 * r).expect("filled"));
    Ok(CumulantTable::from_even(Family::Markov, even))
}

/// Determinant of the `n x n` moment matrix with entries `m_{2(i+j-2)}`,
/// or `(2(i+j) - 3) m_{2(i+j-2)}` when `weighted` (1-based `i, j`).
pub fn hankel_moment_matrix_det(m: &MomentTable, n: usize, weighted: bool) -> Result<BigRational> {
    if n == 0 {
        return Err(invalid("moment matrix must be at least 1 x 1"));
    }
    let moments = m.exact_prefix(4 * (n - 1))?;
    let mut a: Vec<Vec<Q>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let entry = moments[2 * (i + j - 2)].clone();
                    if weighted {
                        entry * q_int(2 * (i + j) as i64 - 3)
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(&mut a))
}

/// Exact determinant by Gaussian elimination; consumes `a`.
pub fn determinant(a: &mut [Vec<Q>]) -> Q {
    let n = a.len();
    let mut det = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn small_exact_moments() {
        let o = MomentOptions::exact();
        assert_eq!(limit_moment(Family::Toeplitz, 4, &o).unwrap().exact().unwrap(), &q(8, 3));
        assert_eq!(limit_moment(Family::Hankel, 4, &o).unwrap().exact().unwrap(), &q(2, 1));
        assert_eq!(limit_moment(Family::Markov, 2, &o).unwrap().exact().unwrap(), &q(2, 1));
        assert_eq!(limit_moment(Family::Markov, 4, &o).unwrap().exact().unwrap(), &q(9, 1));
        assert_eq!(limit_moment(Family::Toeplitz, 3, &o).unwrap().exact().unwrap(), &q(0, 1));
        assert_eq!(limit_moment(Family::Hankel, 0, &o).unwrap().exact().unwrap(), &q(1, 1));
    }

    #[test]
    fn second_moments_are_variances() {
        let o = MomentOptions::exact();
        for f in [Family::Toeplitz, Family::Hankel, Family::Markov, Family::Semicircle, Family::Gaussian] {
            assert_eq!(limit_moment(f, 2, &o).unwrap().exact().unwrap(), &q(f.variance() as i64, 1), "{f}");
        }
    }

    #[test]
    fn mc_moment_agrees_with_exact() {
        let v = limit_moment(Family::Toeplitz, 4, &MomentOptions::mc(200_000, 5)).unwrap();
        let MomentValue::Estimate { value, stderr } = v else { panic!("expected estimate") };
        assert!((value - 8.0 / 3.0).abs() <= 3.0 * stderr, "{value} +- {stderr}");
        assert!(stderr > 0.0);
    }

    #[test]
    fn method_and_cap_errors() {
        let formula = MomentOptions { method: Method::Formula, ..MomentOptions::default() };
        assert!(limit_moment(Family::Toeplitz, 4, &formula).is_err());
        let capped = MomentOptions { max_half_length: 2, ..MomentOptions::default() };
        assert!(limit_moment(Family::Markov, 6, &capped).is_err());
        let low_dim = MomentOptions { max_dimension: 2, ..MomentOptions::default() };
        assert!(matches!(limit_moment(Family::Toeplitz, 4, &low_dim), Err(Error::Capacity(_))));
    }

    #[test]
    fn reference_values() {
        assert_eq!(reference_moments(Family::Semicircle, 4).unwrap(), q(2, 1));
        assert_eq!(reference_moments(Family::Gaussian, 6).unwrap(), q(15, 1));
        assert_eq!(reference_moments(Family::Semicircle, 0).unwrap(), q(1, 1));
        assert_eq!(reference_moments(Family::Gaussian, 5).unwrap(), q(0, 1));
        assert!(reference_moments(Family::Hankel, 2).is_err());
        let cats: Vec<BigInt> = (0..8).map(catalan).collect();
        assert_eq!(cats, [1, 1, 2, 5, 14, 42, 132, 429].map(BigInt::from));
    }

    #[test]
    fn semicircle_cumulants_give_catalan() {
        let m = cumulants_to_moments(&semicircle_cumulants(12), 12).unwrap();
        for k in 0..=6 {
            assert_eq!(m.exact(2 * k).unwrap(), q_int(catalan(k)));
        }
    }

    #[test]
    fn zero_cumulants_give_point_mass() {
        let c = CumulantTable::from_even(Family::Gaussian, vec![Q::zero(); 4]);
        let m = cumulants_to_moments(&c, 8).unwrap();
        assert_eq!(m.exact(0).unwrap(), q(1, 1));
        for k in 1..=4 {
            assert!(m.exact(2 * k).unwrap().is_zero());
        }
    }

    #[test]
    fn markov_cumulant_route() {
        let m = cumulants_to_moments(&markov_cumulants(4).unwrap(), 4).unwrap();
        assert_eq!(m.exact(4).unwrap(), q(9, 1));
        let k = moments_to_cumulants(&limit_moment_table(Family::Markov, 8, &MomentOptions::exact()).unwrap(), 8).unwrap();
        assert_eq!(k.get(2).unwrap(), q(2, 1));
        assert_eq!(k, CumulantTable { family: Family::Markov, ..markov_cumulants(8).unwrap() });
    }

    #[test]
    fn gaussian_moments_give_irreducible_counts() {
        let k = moments_to_cumulants(&reference_table(Family::Gaussian, 10).unwrap(), 10).unwrap();
        for r in 1..=5 {
            assert_eq!(k.get(2 * r).unwrap(), q_int(irreducible_word_count(r).unwrap()));
        }
        // 1, 1, 4, 27, 248 irreducible pair partitions
        assert_eq!(k.get(8).unwrap(), q(27, 1));
        let s = moments_to_cumulants(&reference_table(Family::Semicircle, 10).unwrap(), 10).unwrap();
        assert_eq!(s, CumulantTable { family: Family::Semicircle, ..semicircle_cumulants(10) });
    }

    #[test]
    fn missing_entries_are_errors() {
        let c = CumulantTable::from_even(Family::Gaussian, vec![q(1, 1)]);
        assert!(cumulants_to_moments(&c, 4).is_err());
        let m = MomentTable::from_exact(Family::Hankel, vec![q(1, 1)]);
        assert!(moments_to_cumulants(&m, 4).is_err());
        assert!(hankel_moment_matrix_det(&m, 2, false).is_err());
        let mut est = MomentTable::new(Family::Toeplitz, Method::Mc);
        est.insert(2, MomentValue::Estimate { value: 1.0, stderr: 0.1 }).unwrap();
        assert!(moments_to_cumulants(&est, 2).is_err());
    }

    #[test]
    fn hankel_determinants() {
        let hankel = MomentTable::from_exact(Family::Hankel, vec![q(1, 1), q(2, 1), q(11, 2), q(281, 15)]);
        assert_eq!(hankel_moment_matrix_det(&hankel, 3, true).unwrap(), q(-73, 20));
        // direct cofactor expansion of [[1,1,2],[1,2,11/2],[2,11/2,281/15]]
        let a = [[q(1, 1), q(1, 1), q(2, 1)], [q(1, 1), q(2, 1), q(11, 2)], [q(2, 1), q(11, 2), q(281, 15)]];
        let cof = &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1])
            - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
            + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0]);
        let det = hankel_moment_matrix_det(&hankel, 3, false).unwrap();
        assert_eq!(det, cof);
        assert!(det > Q::zero());
        assert_eq!(hankel_moment_matrix_det(&hankel, 1, true).unwrap(), q(1, 1));
        assert!(hankel_moment_matrix_det(&hankel, 0, true).is_err());
    }

    #[test]
    fn table_accessors() {
        let mut t = MomentTable::new(Family::Toeplitz, Method::Exact);
        assert!(t.insert(3, MomentValue::Exact(q(1, 1))).is_err());
        assert!(t.insert(0, MomentValue::Exact(q(1, 1))).is_err());
        t.insert(2, MomentValue::Exact(q(1, 1))).unwrap();
        assert_eq!(t.exact(1).unwrap(), q(0, 1));
        assert_eq!(t.max_order(), 2);
        assert!(t.get(4).is_none());
    }
}
