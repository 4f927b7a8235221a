//! Linear systems attached to partition words and the volumes of the unit-cube
//! cross-sections they cut out.
//!
//! For a word of length `2k` the unknowns are `x_0, ..., x_2k`, one between
//! every pair of neighbouring letters (and one at each end). Each letter with
//! occurrences at positions `i < m` (one-based) contributes one equation:
//!
//! * Toeplitz: `x_i - x_{i-1} + x_m - x_{m-1} = 0`, solved for `x_m`;
//! * Hankel: `x_i + x_{i-1} = x_m + x_{m-1}`, solved for `x_{i-1}`, plus the
//!   closure `x_0 = x_2k`.
//!
//! The `k + 1` remaining unknowns are free coordinates on `[0, 1]^{k+1}` and the
//! volume is the measure of the set where every dependent unknown also lies
//! in `[0, 1]`.

mod eulerian;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{capacity, invalid, Result};
use crate::polytope::{HalfSpace, VolumeCache};
use crate::rng::stream_rng;
use crate::words::PartitionWord;

pub use eulerian::{eulerian_number, slab_volume_integral};

type Q = BigRational;

/// Largest free-coordinate count accepted by [`volume_exact`].
pub const DEFAULT_MAX_DIMENSION: usize = 6;

/// Largest number of grid points accepted by [`volume_grid`].
pub const DEFAULT_GRID_BUDGET: u64 = 1 << 26;

/// Which matrix structure a system encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlabKind {
    Toeplitz,
    Hankel,
    /// Hand-built system, not derived from a word.
    Custom,
}

/// `constant + sum_j coeffs[j] * x_j` over a fixed set of unknowns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub constant: Q,
    pub coeffs: Vec<Q>,
}

impl AffineForm {
    pub fn zero(num_vars: usize) -> Self {
        Self { constant: Q::zero(), coeffs: vec![Q::zero(); num_vars] }
    }

    pub fn var(num_vars: usize, index: usize) -> Self {
        let mut f = Self::zero(num_vars);
        f.coeffs[index] = Q::one();
        f
    }

    /// Builds a form with integer coefficients.
    pub fn from_integers(constant: i64, coeffs: &[i64]) -> Self {
        Self {
            constant: Q::from_integer(constant.into()),
            coeffs: coeffs.iter().map(|&c| Q::from_integer(c.into())).collect(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add_scaled(&mut self, other: &AffineForm, scale: i64) {
        let s = Q::from_integer(scale.into());
        self.constant += &other.constant * &s;
        for (c, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c += o * &s;
        }
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut acc = self.constant.to_f64().unwrap_or(f64::NAN);
        for (c, x) in self.coeffs.iter().zip(point) {
            if !c.is_zero() {
                acc += c.to_f64().unwrap_or(f64::NAN) * x;
            }
        }
        acc
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "x_{j}")?;
            first = false;
        }
        if !self.constant.is_zero() || first {
            if first {
                write!(f, "{}", self.constant)?;
            } else {
                let sign = if self.constant.is_negative() { "-" } else { "+" };
                write!(f, " {sign} {}", self.constant.abs())?;
            }
        }
        Ok(())
    }
}

/// Dependent unknowns expressed over free ones, plus an optional closure form
/// that must vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlabSystem {
    kind: SlabKind,
    num_vars: usize,
    free_vars: Vec<usize>,
    dependents: BTreeMap<usize, AffineForm>,
    closure: Option<AffineForm>,
}

impl SlabSystem {
    /// Assembles a system, checking that free and dependent unknowns
    /// partition `0..num_vars` and that dependents only use free unknowns.
    pub fn new(
        kind: SlabKind,
        num_vars: usize,
        free_vars: Vec<usize>,
        dependents: BTreeMap<usize, AffineForm>,
        closure: Option<AffineForm>,
    ) -> Result<Self> {
        let mut seen = vec![false; num_vars];
        for &v in free_vars.iter().chain(dependents.keys()) {
            if v >= num_vars || seen[v] {
                return Err(invalid(format!("unknown x_{v} is out of range or listed twice")));
            }
            seen[v] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(invalid("free and dependent unknowns must cover every index"));
        }
        for form in dependents.values().chain(closure.iter()) {
            if form.num_vars() != num_vars {
                return Err(invalid("affine form has the wrong number of unknowns"));
            }
            if form.coeffs.iter().enumerate().any(|(j, c)| !c.is_zero() && dependents.contains_key(&j)) {
                return Err(invalid("affine forms may only use free unknowns"));
            }
        }
        Ok(Self { kind, num_vars, free_vars, dependents, closure })
    }

    /// `{x in [0,1]^n : sum of the first n - negatives coordinates minus the
    /// rest lies in [0, 1]}`, encoded with `x_n` as the single dependent.
    pub fn single_slab(n: usize, negatives: usize) -> Result<Self> {
        if n == 0 || negatives > n {
            return Err(invalid(format!("single slab needs n >= 1 and negatives <= n, got ({n}, {negatives})")));
        }
        let coeffs: Vec<i64> = (0..=n)
            .map(|j| match j {
                _ if j == n => 0,
                _ if j < n - negatives => 1,
                _ => -1,
            })
            .collect();
        let mut deps = BTreeMap::new();
        deps.insert(n, AffineForm::from_integers(0, &coeffs));
        Self::new(SlabKind::Custom, n + 1, (0..n).collect(), deps, None)
    }

    pub fn kind(&self) -> SlabKind {
        self.kind
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn free_vars(&self) -> &[usize] {
        &self.free_vars
    }

    pub fn dependents(&self) -> &BTreeMap<usize, AffineForm> {
        &self.dependents
    }

    pub fn dependent(&self, var: usize) -> Option<&AffineForm> {
        self.dependents.get(&var)
    }

    pub fn closure(&self) -> Option<&AffineForm> {
        self.closure.as_ref()
    }

    /// Dimension of the ambient cube.
    pub fn dimension(&self) -> usize {
        self.free_vars.len()
    }

    /// True when the closure form forces a measure-zero set.
    pub fn closure_is_degenerate(&self) -> bool {
        self.closure.as_ref().is_some_and(|c| !c.is_zero())
    }

    /// Dependent forms restricted to the free coordinates, in `free_vars` order.
    fn restricted_forms(&self) -> Vec<(Vec<Q>, Q)> {
        self.dependents
            .values()
            .map(|f| {
                let coeffs = self.free_vars.iter().map(|&v| f.coeffs[v].clone()).collect();
                (coeffs, f.constant.clone())
            })
            .collect()
    }

    fn halfspaces(&self) -> Vec<HalfSpace> {
        let d = self.dimension();
        let mut out = Vec::with_capacity(2 * (d + self.dependents.len()));
        for j in 0..d {
            let mut up = vec![Q::zero(); d];
            up[j] = Q::one();
            let down = up.iter().map(|c| -c).collect();
            out.push(HalfSpace::new(up, Q::one()));
            out.push(HalfSpace::new(down, Q::zero()));
        }
        for (coeffs, constant) in self.restricted_forms() {
            let neg = coeffs.iter().map(|c| -c).collect();
            out.push(HalfSpace::new(coeffs, Q::one() - &constant));
            out.push(HalfSpace::new(neg, constant));
        }
        out
    }
}

/// Builds the Toeplitz or Hankel system of a word.
///
/// Toeplitz equations are solved in increasing order of second occurrence and
/// Hankel equations in decreasing order of first occurrence, so each solved
/// unknown only refers to free or already-solved ones.
pub fn build_system(w: &PartitionWord, kind: SlabKind) -> Result<SlabSystem> {
    let k = w.half_len();
    let nv = 2 * k + 1;
    // one-based (first, second) occurrence positions
    let mut pairs: Vec<(usize, usize)> = w.pairs().into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
    let mut exprs: Vec<Option<AffineForm>> = vec![None; nv];
    let (free, closure) = match kind {
        SlabKind::Toeplitz => {
            let mut free: Vec<usize> = std::iter::once(0).chain(pairs.iter().map(|&(i, _)| i)).collect();
            free.sort_unstable();
            for &v in &free {
                exprs[v] = Some(AffineForm::var(nv, v));
            }
            pairs.sort_by_key(|&(_, m)| m);
            for &(i, m) in &pairs {
                let mut e = exprs[m - 1].clone().expect("solved in order");
                e.add_scaled(exprs[i].as_ref().expect("solved in order"), -1);
                e.add_scaled(exprs[i - 1].as_ref().expect("solved in order"), 1);
                exprs[m] = Some(e);
            }
            (free, None)
        }
        SlabKind::Hankel => {
            let mut free: Vec<usize> = pairs.iter().map(|&(_, m)| m - 1).chain(std::iter::once(2 * k)).collect();
            free.sort_unstable();
            for &v in &free {
                exprs[v] = Some(AffineForm::var(nv, v));
            }
            pairs.sort_by_key(|&(i, _)| std::cmp::Reverse(i));
            for &(i, m) in &pairs {
                let mut e = exprs[m].clone().expect("solved in order");
                e.add_scaled(exprs[m - 1].as_ref().expect("solved in order"), 1);
                e.add_scaled(exprs[i].as_ref().expect("solved in order"), -1);
                exprs[i - 1] = Some(e);
            }
            let mut closure = exprs[0].clone().expect("x_0 is always solved");
            closure.add_scaled(&AffineForm::var(nv, 2 * k), -1);
            (free, Some(closure))
        }
        SlabKind::Custom => return Err(invalid("word systems are either toeplitz or hankel")),
    };
    let dependents = (0..nv)
        .filter(|v| free.binary_search(v).is_err())
        .map(|v| (v, exprs[v].take().expect("every unknown is solved")))
        .collect();
    SlabSystem::new(kind, nv, free, dependents, closure)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VolumeMethod {
    Exact,
    Mc,
    Grid,
}

impl VolumeMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            VolumeMethod::Exact => "exact",
            VolumeMethod::Mc => "mc",
            VolumeMethod::Grid => "grid",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum VolumeValue {
    Exact(BigRational),
    Approx(f64),
}

/// A volume, exact or estimated.
#[derive(Debug, Clone, PartialEq)]
pub struct VolumeEstimate {
    pub value: VolumeValue,
    /// Monte Carlo standard error; `None` for exact and grid values.
    pub stderr: Option<f64>,
    pub method: VolumeMethod,
    /// Number of random draws or grid points used.
    pub samples: Option<u64>,
}

impl VolumeEstimate {
    fn exact(v: Q) -> Self {
        Self { value: VolumeValue::Exact(v), stderr: None, method: VolumeMethod::Exact, samples: None }
    }

    pub fn as_f64(&self) -> f64 {
        match &self.value {
            VolumeValue::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            VolumeValue::Approx(x) => *x,
        }
    }

    pub fn exact_value(&self) -> Option<&BigRational> {
        match &self.value {
            VolumeValue::Exact(q) => Some(q),
            VolumeValue::Approx(_) => None,
        }
    }
}

/// Exact rational volume, limited to [`DEFAULT_MAX_DIMENSION`] free coordinates.
pub fn volume_exact(s: &SlabSystem) -> Result<VolumeEstimate> {
    volume_exact_capped(s, DEFAULT_MAX_DIMENSION)
}

pub fn volume_exact_capped(s: &SlabSystem, max_dimension: usize) -> Result<VolumeEstimate> {
    volume_exact_cached(s, max_dimension, &mut VolumeCache::new())
}

/// Exact volume sharing face volumes with earlier calls through `cache`.
pub fn volume_exact_cached(s: &SlabSystem, max_dimension: usize, cache: &mut VolumeCache) -> Result<VolumeEstimate> {
    if s.closure_is_degenerate() {
        return Ok(VolumeEstimate::exact(Q::zero()));
    }
    let d = s.dimension();
    if d > max_dimension {
        return Err(capacity(format!(
            "exact volume limited to {max_dimension} free coordinates, system has {d}; use the Monte Carlo estimator"
        )));
    }
    cache.volume(d, &s.halfspaces()).map(VolumeEstimate::exact)
}

/// Monte Carlo estimate from `samples` uniform draws on the free cube.
pub fn volume_mc(s: &SlabSystem, samples: u64, seed: u64) -> Result<VolumeEstimate> {
    if samples == 0 {
        return Err(invalid("Monte Carlo volume needs at least one sample"));
    }
    if s.closure_is_degenerate() {
        return Ok(VolumeEstimate {
            value: VolumeValue::Exact(Q::zero()),
            stderr: None,
            method: VolumeMethod::Mc,
            samples: Some(0),
        });
    }
    let d = s.dimension();
    let forms: Vec<(Vec<f64>, f64)> = s
        .restricted_forms()
        .into_iter()
        .map(|(c, k)| {
            (c.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect(), k.to_f64().unwrap_or(f64::NAN))
        })
        .collect();
    let mut rng = stream_rng(seed);
    let mut point = vec![0.0; d];
    let mut hits = 0u64;
    for _ in 0..samples {
        for x in point.iter_mut() {
            *x = rng.gen::<f64>();
        }
        let inside = forms.iter().all(|(c, k)| {
            let v = k + c.iter().zip(&point).map(|(a, x)| a * x).sum::<f64>();
            (0.0..=1.0).contains(&v)
        });
        hits += inside as u64;
    }
    let p = hits as f64 / samples as f64;
    Ok(VolumeEstimate {
        value: VolumeValue::Approx(p),
        stderr: Some((p * (1.0 - p) / samples as f64).sqrt()),
        method: VolumeMethod::Mc,
        samples: Some(samples),
    })
}

/// Midpoint-rule estimate on a uniform grid with `subdivisions` cells per axis.
pub fn volume_grid(s: &SlabSystem, subdivisions: u32) -> Result<VolumeEstimate> {
    volume_grid_budgeted(s, subdivisions, DEFAULT_GRID_BUDGET)
}

pub fn volume_grid_budgeted(s: &SlabSystem, subdivisions: u32, budget: u64) -> Result<VolumeEstimate> {
    if subdivisions == 0 {
        return Err(invalid("grid needs at least one subdivision"));
    }
    let d = s.dimension();
    let total = (subdivisions as u64)
        .checked_pow(d as u32)
        .filter(|&t| t <= budget)
        .ok_or_else(|| capacity(format!("{subdivisions}^{d} grid points exceed the budget of {budget}")))?;
    if s.closure_is_degenerate() {
        return Ok(VolumeEstimate {
            value: VolumeValue::Approx(0.0),
            stderr: None,
            method: VolumeMethod::Grid,
            samples: Some(total),
        });
    }
    let two_s = 2 * subdivisions as i64;
    // Scale each form to integers: with x_j = (2 i_j + 1) / (2 s), the test
    // 0 <= c + a.x <= 1 becomes 0 <= 2s*D*c + sum D*a_j*(2 i_j + 1) <= 2s*D.
    let forms: Vec<(Vec<i64>, i64, i64)> = s
        .restricted_forms()
        .into_iter()
        .map(|(coeffs, constant)| {
            let den = coeffs.iter().chain(std::iter::once(&constant)).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let scale = |c: &Q| (c * Q::from_integer(den.clone())).to_integer().to_i64().expect("small coefficients");
            let a: Vec<i64> = coeffs.iter().map(scale).collect();
            let d_i = den.to_i64().expect("small denominators");
            (a, scale(&constant) * two_s, d_i * two_s)
        })
        .collect();
    let mut idx = vec![0i64; d];
    // running value of sum a_j * (2 i_j + 1) per form
    let mut acc: Vec<i64> = forms.iter().map(|(a, _, _)| a.iter().sum()).collect();
    let mut hits = 0u64;
    'outer: loop {
        let inside = forms.iter().zip(&acc).all(|((_, c, hi), v)| {
            let x = v + c;
            x >= 0 && x <= *hi
        });
        hits += inside as u64;
        for j in 0..d {
            idx[j] += 1;
            if idx[j] < subdivisions as i64 {
                for (v, (a, _, _)) in acc.iter_mut().zip(&forms) {
                    *v += 2 * a[j];
                }
                continue 'outer;
            }
            for (v, (a, _, _)) in acc.iter_mut().zip(&forms) {
                *v -= 2 * a[j] * (subdivisions as i64 - 1);
            }
            idx[j] = 0;
        }
        break;
    }
    Ok(VolumeEstimate {
        value: VolumeValue::Approx(hits as f64 / total as f64),
        stderr: None,
        method: VolumeMethod::Grid,
        samples: Some(total),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_words;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn word(s: &str) -> PartitionWord {
        s.parse().unwrap()
    }

    #[test]
    fn toeplitz_abab_system() {
        let s = build_system(&word("abab"), SlabKind::Toeplitz).unwrap();
        assert_eq!(s.free_vars(), &[0, 1, 2]);
        assert_eq!(s.dependent(3).unwrap(), &AffineForm::from_integers(0, &[1, -1, 1, 0, 0]));
        assert_eq!(s.dependent(4).unwrap(), &AffineForm::var(5, 0));
        assert!(s.closure().is_none());
        assert_eq!(s.dependent(3).unwrap().to_string(), "x_0 - x_1 + x_2");
    }

    #[test]
    fn hankel_abab_system() {
        let s = build_system(&word("abab"), SlabKind::Hankel).unwrap();
        assert_eq!(s.free_vars(), &[2, 3, 4]);
        assert_eq!(s.dependent(0).unwrap(), &AffineForm::from_integers(0, &[0, 0, 2, 0, -1]));
        assert_eq!(s.dependent(1).unwrap(), &AffineForm::from_integers(0, &[0, 0, -1, 1, 1]));
        // closure is a nonzero multiple of x_4 - x_2
        let c = s.closure().unwrap();
        assert!(c.constant.is_zero());
        assert!(!c.coeffs[4].is_zero());
        assert_eq!(c.coeffs[2], -c.coeffs[4].clone());
        assert!(s.closure_is_degenerate());
    }

    #[test]
    fn toeplitz_aa_system() {
        let s = build_system(&word("aa"), SlabKind::Toeplitz).unwrap();
        assert_eq!(s.free_vars(), &[0, 1]);
        assert_eq!(s.dependent(2).unwrap(), &AffineForm::var(3, 0));
    }

    #[test]
    fn toeplitz_last_unknown_telescopes_to_first() {
        for k in 1..=5 {
            for w in enumerate_words(k).unwrap() {
                let s = build_system(&w, SlabKind::Toeplitz).unwrap();
                assert_eq!(s.dependent(2 * k).unwrap(), &AffineForm::var(2 * k + 1, 0), "word {w}");
            }
        }
    }

    #[test]
    fn hankel_unknowns_partition() {
        for k in 1..=4 {
            for w in enumerate_words(k).unwrap() {
                let s = build_system(&w, SlabKind::Hankel).unwrap();
                assert_eq!(s.dimension(), k + 1);
                assert_eq!(s.dependents().len(), k);
                assert!(s.free_vars().contains(&(2 * k)));
            }
        }
    }

    #[test]
    fn exact_volumes_of_small_words() {
        let v = |s: &str, kind| volume_exact(&build_system(&word(s), kind).unwrap()).unwrap();
        assert_eq!(v("abab", SlabKind::Toeplitz).exact_value().unwrap(), &q(2, 3));
        assert_eq!(v("abab", SlabKind::Hankel).exact_value().unwrap(), &q(0, 1));
        assert_eq!(v("aabb", SlabKind::Toeplitz).exact_value().unwrap(), &q(1, 1));
        assert_eq!(v("abba", SlabKind::Toeplitz).exact_value().unwrap(), &q(1, 1));
        assert_eq!(v("aa", SlabKind::Hankel).exact_value().unwrap(), &q(1, 1));
        assert!(v("abab", SlabKind::Toeplitz).stderr.is_none());
    }

    #[test]
    fn exact_volume_dimension_cap() {
        let s = build_system(&word("abcdefabcdef"), SlabKind::Toeplitz).unwrap();
        assert_eq!(s.dimension(), 7);
        assert!(matches!(volume_exact(&s), Err(crate::Error::Capacity(_))));
    }

    #[test]
    fn monte_carlo_volumes() {
        let abab = build_system(&word("abab"), SlabKind::Toeplitz).unwrap();
        let est = volume_mc(&abab, 1_000_000, 11).unwrap();
        let se = est.stderr.unwrap();
        assert!((est.as_f64() - 2.0 / 3.0).abs() <= 3.0 * se, "{est:?}");
        assert_eq!(est, volume_mc(&abab, 1_000_000, 11).unwrap());

        let aa = build_system(&word("aa"), SlabKind::Toeplitz).unwrap();
        assert_eq!(volume_mc(&aa, 1000, 3).unwrap().as_f64(), 1.0);

        let hankel = build_system(&word("abab"), SlabKind::Hankel).unwrap();
        let z = volume_mc(&hankel, 10, 3).unwrap();
        assert_eq!(z.exact_value(), Some(&q(0, 1)));
        assert!(volume_mc(&aa, 0, 3).is_err());
    }

    #[test]
    fn grid_volumes() {
        let sys = |s: &str| build_system(&word(s), SlabKind::Toeplitz).unwrap();
        assert!((volume_grid(&sys("abab"), 64).unwrap().as_f64() - 2.0 / 3.0).abs() <= 0.02);
        assert_eq!(volume_grid(&sys("aa"), 4).unwrap().as_f64(), 1.0);
        assert_eq!(volume_grid(&sys("aabb"), 32).unwrap().as_f64(), 1.0);
        assert!(matches!(volume_grid_budgeted(&sys("abab"), 100, 1000), Err(crate::Error::Capacity(_))));
    }

    #[test]
    fn single_slab_system_shape() {
        let s = SlabSystem::single_slab(3, 1).unwrap();
        assert_eq!(s.dimension(), 3);
        assert_eq!(s.dependent(3).unwrap().to_string(), "x_0 + x_1 - x_2");
        assert!(SlabSystem::single_slab(0, 0).is_err());
    }

    #[test]
    fn custom_kind_rejected_for_words() {
        assert!(build_system(&word("aa"), SlabKind::Custom).is_err());
    }

    #[test]
    fn system_validation() {
        let mut deps = BTreeMap::new();
        deps.insert(1, AffineForm::var(2, 0));
        assert!(SlabSystem::new(SlabKind::Custom, 2, vec![0], deps.clone(), None).is_ok());
        assert!(SlabSystem::new(SlabKind::Custom, 3, vec![0], deps.clone(), None).is_err());
        let mut bad = BTreeMap::new();
        bad.insert(1, AffineForm::var(2, 1));
        assert!(SlabSystem::new(SlabKind::Custom, 2, vec![0], bad, None).is_err());
    }

    #[test]
    fn affine_display() {
        assert_eq!(AffineForm::from_integers(0, &[0, 0, 2, 0, -1]).to_string(), "2x_2 - x_4");
        assert_eq!(AffineForm::zero(3).to_string(), "0");
        assert_eq!(AffineForm::from_integers(-1, &[0, 1]).to_string(), "x_1 - 1");
    }
}
