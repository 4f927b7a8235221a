//! Eulerian numbers and their slab-volume integral representation.

use std::f64::consts::PI;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{invalid, numerical, Result};

/// `A(n, m)` by `A(n, m) = (n - m + 1) A(n-1, m-1) + m A(n-1, m)`, `A(1, 1) = 1`.
///
/// Zero outside `1 <= m <= n`.
pub fn eulerian_number(n: usize, m: i64) -> BigUint {
    if n == 0 || m < 1 || m as u64 > n as u64 {
        return BigUint::zero();
    }
    let m = m as usize;
    // row[j] holds A(r, j) for the current r, j in 0..=n
    let mut row = vec![BigUint::zero(); n + 2];
    row[1] = BigUint::from(1u32);
    for r in 2..=n {
        for j in (1..=r).rev() {
            let left = &row[j - 1] * BigUint::from(r - j + 1);
            let right = &row[j] * BigUint::from(j);
            row[j] = left + right;
        }
    }
    row[m].clone()
}

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_0,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let x = h * XGK[i];
        let pair = f(c - x) + f(c + x);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

fn adaptive(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> Result<(f64, f64)> {
    let (val, err) = gk15(f, a, b);
    if err <= tol || (b - a) < 1e-12 {
        return Ok((val, err));
    }
    if depth == 0 {
        return Err(numerical(format!("quadrature did not converge on [{a}, {b}]: error {err:.3e} > {tol:.3e}")));
    }
    let mid = 0.5 * (a + b);
    let (l, el) = adaptive(f, a, mid, 0.5 * tol, depth - 1)?;
    let (r, er) = adaptive(f, mid, b, 0.5 * tol, depth - 1)?;
    Ok((l + r, el + er))
}

/// Number of half-periods integrated explicitly before the tail estimate.
const PERIODS: usize = 2000;
const TOLERANCE: f64 = 1e-9;

/// `(2/pi) * int_0^inf (sin t / t)^(n+1) cos((n+1-2m) t) dt`, the volume of
/// `{x in [0,1]^n : x_1 + ... + x_{n-m} - (x_{n-m+1} + ... + x_n) in [0, 1]}`.
///
/// The integrand is integrated period by period on `[0, N pi]`; past that
/// point `sin^(n+1)(t) cos(ct)` has period `pi`, so the tail is its mean times
/// `int t^-(n+1)`, with an error of order `(N pi)^-(n+1)`.
pub fn slab_volume_integral(n: usize, m: usize) -> Result<f64> {
    if n == 0 || m == 0 || m > n {
        return Err(invalid(format!("slab integral needs 1 <= m <= n, got n = {n}, m = {m}")));
    }
    let p = (n + 1) as i32;
    let c = (n + 1) as f64 - 2.0 * m as f64;
    let integrand = |t: f64| {
        let s = if t.abs() < 1e-8 { 1.0 - t * t / 6.0 } else { t.sin() / t };
        s.powi(p) * (c * t).cos()
    };
    let per_tol = TOLERANCE / PERIODS as f64;
    let mut head = 0.0;
    let mut err = 0.0;
    for j in 0..PERIODS {
        let a = j as f64 * PI;
        let (v, e) = adaptive(&integrand, a, a + PI, per_tol, 20)?;
        head += v;
        err += e;
    }
    let (mean_period, e) = adaptive(&|t: f64| t.sin().powi(p) * (c * t).cos(), 0.0, PI, per_tol, 20)?;
    err += e;
    let t_end = PERIODS as f64 * PI;
    let tail = mean_period / PI * t_end.powi(1 - p) / (p - 1) as f64;
    let truncation = t_end.powi(-p);
    if err + truncation > 1e-7 {
        return Err(numerical(format!("slab integral achieved only {:.3e}", err + truncation)));
    }
    Ok(2.0 / PI * (head + tail))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> u64 {
        (1..=n as u64).product()
    }

    #[test]
    fn eulerian_values() {
        assert_eq!(eulerian_number(3, 2), BigUint::from(4u32));
        for n in 1..12 {
            assert_eq!(eulerian_number(n, 1), BigUint::from(1u32));
            assert_eq!(eulerian_number(n, n as i64), BigUint::from(1u32));
        }
        let row: BigUint = (1..=5).map(|m| eulerian_number(5, m)).sum();
        assert_eq!(row, BigUint::from(120u32));
        assert_eq!(eulerian_number(5, 0), BigUint::zero());
        assert_eq!(eulerian_number(5, 6), BigUint::zero());
        assert_eq!(eulerian_number(5, -1), BigUint::zero());
        assert_eq!(eulerian_number(5, 3), BigUint::from(66u32));
    }

    #[test]
    fn eulerian_matches_ascent_count() {
        // permutations of 1..=n with m positions where sigma_i > sigma_{i-1}, sigma_0 = 0
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n);
                    out.push(q);
                }
            }
            out
        }
        for n in 1..=6 {
            let mut counts = vec![0u32; n + 1];
            for p in perms(n) {
                let mut prev = 0;
                let mut ascents = 0;
                for &x in &p {
                    if x > prev {
                        ascents += 1;
                    }
                    prev = x;
                }
                counts[ascents] += 1;
            }
            for m in 1..=n {
                assert_eq!(eulerian_number(n, m as i64), BigUint::from(counts[m]), "A({n},{m})");
            }
        }
    }

    #[test]
    fn integral_values() {
        assert!((slab_volume_integral(3, 2).unwrap() - 4.0 / 6.0).abs() < 1e-6);
        assert!((slab_volume_integral(1, 1).unwrap() - 1.0).abs() < 1e-6);
        let a53 = 66.0 / factorial(5) as f64;
        assert!((slab_volume_integral(5, 3).unwrap() - a53).abs() < 1e-6);
        assert!(slab_volume_integral(3, 0).is_err());
        assert!(slab_volume_integral(3, 4).is_err());
    }
}
