//! Dense row-major matrices over any ring-like scalar.

use std::io::{self, Write};
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Wraps row-major `data`; panics if the length is not `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }
}

impl<T: Clone + PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One,
{
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + for<'a> Add<&'a T, Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    /// Matrix product; panics on mismatched shapes.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = vec![T::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let slot = &mut out[i * other.cols + j];
                    *slot = std::mem::replace(slot, T::zero()) + &(a * other.get(l, j));
                }
            }
        }
        Matrix { rows: self.rows, cols: other.cols, data: out }
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    /// `tr(A^r)` by repeated multiplication; `r = 0` gives the dimension.
    pub fn power_trace(&self, r: usize) -> T
    where
        T: One,
    {
        assert!(self.is_square(), "power trace of a non-square matrix");
        let mut p = Self::identity(self.rows);
        for _ in 0..r {
            p = p.matmul(self);
        }
        p.trace()
    }
}

impl Matrix<f64> {
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Row-major CSV dump, one matrix row per line, 17 significant digits.
    pub fn write_csv(&self, mut w: impl Write) -> io::Result<()> {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| format_f64(*x)).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Ok(())
    }
}

/// Decimal with 17 significant digits, enough to round-trip any `f64`.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 {
        // avoid "-0.0000000000000000e0"
        return "0.0000000000000000e0".to_string();
    }
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_traces() {
        let a = Matrix::from_vec(2, 2, vec![1i64, 2, 3, 4]);
        assert_eq!(a.matmul(&a).into_vec(), vec![7, 10, 15, 22]);
        assert_eq!(a.trace(), 5);
        assert_eq!(a.power_trace(2), 29);
        assert_eq!(a.power_trace(0), 2);
        assert_eq!(a.transpose().into_vec(), vec![1, 3, 2, 4]);
        assert!(!a.is_symmetric());
        assert!(Matrix::<i64>::identity(3).is_symmetric());
    }

    #[test]
    fn csv_dump_round_trips() {
        let m = Matrix::from_vec(2, 2, vec![0.1, -1.0 / 3.0, -0.0, 1e300]);
        let mut buf = Vec::new();
        m.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let back: Vec<f64> = text.lines().flat_map(|l| l.split(',').map(|s| s.parse::<f64>().unwrap())).collect();
        assert_eq!(back, vec![0.1, -1.0 / 3.0, 0.0, 1e300]);
        assert!(text.starts_with("1.0000000000000001e-1,"));
    }
}
