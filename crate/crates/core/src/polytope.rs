//! Exact volume of a bounded H-polytope `{x : A x <= b}` over the rationals.
//!
//! Uses Lasserre's recursion: `d * vol_d(P) = sum_i b_i / |a_ij| * vol_{d-1}(proj_j F_i)`,
//! where `F_i` is the face cut out by constraint `i` and `proj_j` drops a
//! coordinate with nonzero coefficient in that constraint. Rows are kept as
//! integer vectors, deduplicated, and reduced to the tightest bound per
//! direction; with that normal form the recursion
//! returns zero for lower-dimensional and empty polytopes. Faces reached along
//! different paths are shared through a memo keyed by the reduced system.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{numerical, Result};

type Q = BigRational;

/// One inequality `normal . x <= bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    pub normal: Vec<Q>,
    pub bound: Q,
}

impl HalfSpace {
    pub fn new(normal: Vec<Q>, bound: Q) -> Self {
        Self { normal, bound }
    }
}

/// Rows are stored flattened, `dim + 1` integers each: normal, then bound.
type Flat = Vec<i64>;

fn overflow() -> crate::Error {
    numerical("polytope coefficients overflow 64-bit integers")
}

/// Normal form of a system: every row is the unique integer row `(q u, p)`
/// with `u` primitive and `p / q` the tightest bound in direction `u`,
/// sorted by direction. `None` means provably empty.
fn reduce(dim: usize, rows: impl IntoIterator<Item = Flat>) -> Result<Option<Flat>> {
    let mut tightest: BTreeMap<Vec<i64>, (i64, i64)> = BTreeMap::new();
    for row in rows {
        let (a, b) = (&row[..dim], row[dim]);
        let g = a.iter().fold(0i64, |g, &c| g.gcd(&c));
        if g == 0 {
            if b < 0 {
                return Ok(None);
            }
            continue;
        }
        let u: Vec<i64> = a.iter().map(|c| c / g).collect();
        match tightest.get_mut(&u) {
            Some((b0, g0)) => {
                if (b as i128) * (*g0 as i128) < (*b0 as i128) * (g as i128) {
                    *b0 = b;
                    *g0 = g;
                }
            }
            None => {
                tightest.insert(u, (b, g));
            }
        }
    }
    let mut out = Vec::with_capacity(tightest.len() * (dim + 1));
    for (u, (b, g)) in tightest {
        let h = b.gcd(&g);
        let (p, q) = (b / h, g / h);
        for c in u {
            out.push(c.checked_mul(q).ok_or_else(overflow)?);
        }
        out.push(p);
    }
    Ok(Some(out))
}

/// Memo of face volumes, reusable across polytopes of the same ambient family.
#[derive(Debug, Default)]
pub struct VolumeCache {
    memo: HashMap<Flat, Q>,
}

impl VolumeCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// Same as [`polytope_volume`], reusing faces computed earlier.
    pub fn volume(&mut self, dim: usize, halfspaces: &[HalfSpace]) -> Result<Q> {
        if dim == 0 {
            return Err(numerical("zero-dimensional volume requested"));
        }
        let mut rows = Vec::with_capacity(halfspaces.len());
        for h in halfspaces {
            if h.normal.len() != dim {
                return Err(numerical(format!(
                    "half-space has {} coefficients, expected {dim}",
                    h.normal.len()
                )));
            }
            rows.push(integer_row(h)?);
        }
        let Some(rows) = reduce(dim, rows)? else {
            return Ok(Q::zero());
        };
        self.lasserre(&rows, dim)
    }

    fn lasserre(&mut self, rows: &[i64], dim: usize) -> Result<Q> {
        if dim == 1 {
            return interval_length(rows);
        }
        if let Some(v) = self.memo.get(rows) {
            return Ok(v.clone());
        }
        let w = dim + 1;
        let m = rows.len() / w;
        let mut total = Q::zero();
        for i in 0..m {
            let a_i = &rows[i * w..(i + 1) * w];
            if a_i[dim] == 0 {
                continue;
            }
            let j = a_i.iter().position(|&c| c != 0).expect("reduced rows are nonzero");
            let (scale, sign) = (a_i[j].abs(), a_i[j].signum());
            // substitute x_j from row i into every other row, scaled by |a_ij|
            let mut face = Vec::with_capacity(m - 1);
            for r in (0..m).filter(|&r| r != i) {
                let a_r = &rows[r * w..(r + 1) * w];
                let f = a_r[j] * sign;
                let mut row = Vec::with_capacity(dim);
                for l in (0..w).filter(|&l| l != j) {
                    let v = a_r[l]
                        .checked_mul(scale)
                        .and_then(|x| x.checked_sub(f.checked_mul(a_i[l])?))
                        .ok_or_else(overflow)?;
                    row.push(v);
                }
                face.push(row);
            }
            if let Some(face) = reduce(dim - 1, face)? {
                let weight = Q::new(a_i[dim].into(), scale.into());
                total += weight * self.lasserre(&face, dim - 1)?;
            }
        }
        let vol = total / Q::from_integer((dim as i64).into());
        self.memo.insert(rows.to_vec(), vol.clone());
        Ok(vol)
    }
}

/// Clears denominators of one half-space.
fn integer_row(h: &HalfSpace) -> Result<Flat> {
    let lcm = h.normal.iter().chain(std::iter::once(&h.bound)).fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    h.normal
        .iter()
        .chain(std::iter::once(&h.bound))
        .map(|c| (c * Q::from_integer(lcm.clone())).to_integer().to_i64().ok_or_else(overflow))
        .collect()
}

fn interval_length(rows: &[i64]) -> Result<Q> {
    // bounds as fractions (num, den) with den > 0
    let mut lo: Option<(i64, i64)> = None;
    let mut hi: Option<(i64, i64)> = None;
    let less = |x: (i64, i64), y: (i64, i64)| (x.0 as i128) * (y.1 as i128) < (y.0 as i128) * (x.1 as i128);
    for r in rows.chunks_exact(2) {
        let (a, b) = (r[0], r[1]);
        if a > 0 {
            let t = (b, a);
            if hi.map_or(true, |h| less(t, h)) {
                hi = Some(t);
            }
        } else {
            let t = (-b, -a);
            if lo.map_or(true, |l| less(l, t)) {
                lo = Some(t);
            }
        }
    }
    match (lo, hi) {
        (Some(lo), Some(hi)) if less(lo, hi) => {
            Ok(Q::new(hi.0.into(), hi.1.into()) - Q::new(lo.0.into(), lo.1.into()))
        }
        (Some(_), Some(_)) => Ok(Q::zero()),
        _ => Err(numerical("polytope is unbounded")),
    }
}

/// Exact `dim`-dimensional volume of `{x : h.normal . x <= h.bound for all h}`.
///
/// The polytope must be bounded; lower-dimensional or empty polytopes have
/// volume zero.
pub fn polytope_volume(dim: usize, halfspaces: &[HalfSpace]) -> Result<Q> {
    VolumeCache::new().volume(dim, halfspaces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    fn cube(dim: usize) -> Vec<HalfSpace> {
        let mut out = Vec::new();
        for j in 0..dim {
            let mut up = vec![q(0, 1); dim];
            up[j] = q(1, 1);
            let down = up.iter().map(|c| -c).collect();
            out.push(HalfSpace::new(up, q(1, 1)));
            out.push(HalfSpace::new(down, q(0, 1)));
        }
        out
    }

    #[test]
    fn unit_cubes() {
        for d in 1..=5 {
            assert_eq!(polytope_volume(d, &cube(d)).unwrap(), q(1, 1));
        }
    }

    #[test]
    fn simplex_corner() {
        // x, y, z >= 0, x + y + z <= 1
        let mut hs = cube(3);
        hs.push(HalfSpace::new(vec![q(1, 1), q(1, 1), q(1, 1)], q(1, 1)));
        assert_eq!(polytope_volume(3, &hs).unwrap(), q(1, 6));
    }

    #[test]
    fn flat_and_empty() {
        let mut hs = cube(2);
        // x = y line: measure zero
        hs.push(HalfSpace::new(vec![q(1, 1), q(-1, 1)], q(0, 1)));
        hs.push(HalfSpace::new(vec![q(-1, 1), q(1, 1)], q(0, 1)));
        assert_eq!(polytope_volume(2, &hs).unwrap(), q(0, 1));

        let mut hs = cube(2);
        hs.push(HalfSpace::new(vec![q(1, 1), q(1, 1)], q(-1, 1)));
        assert_eq!(polytope_volume(2, &hs).unwrap(), q(0, 1));
    }

    #[test]
    fn duplicated_and_scaled_rows() {
        let mut hs = cube(2);
        hs.extend(cube(2));
        hs.push(HalfSpace::new(vec![q(2, 1), q(0, 1)], q(1, 1)));
        assert_eq!(polytope_volume(2, &hs).unwrap(), q(1, 2));
    }

    #[test]
    fn unbounded_is_an_error() {
        let hs = vec![HalfSpace::new(vec![q(1, 1)], q(1, 1))];
        assert!(polytope_volume(1, &hs).is_err());
    }
}
