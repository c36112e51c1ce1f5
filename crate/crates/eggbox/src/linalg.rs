//! Dense exact matrices and the rank/kernel/solve kernel.
//!
//! The whole crate uses the row-vector convention: vectors multiply matrices
//! on the left, the range of `x` is its row space, and the null space of `x`
//! is its left kernel `{v : v*x = 0}`. Reduced row echelon form with the
//! first-nonzero pivot rule is the canonicalization everything else leans on:
//! two matrices have equal row spaces exactly when their reduced forms agree
//! after dropping zero rows.
//!
//! Matrices are immutable after construction and all operations are pure.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::exact::Scalar;

/// A dense matrix over the Gaussian rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of reduced row echelon elimination.
pub struct Rref {
    pub matrix: Matrix,
    /// Pivot columns, one per pivot row, in row order.
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Result of solving `A x = b` for a column vector `x`.
pub struct SolveOutcome {
    /// A particular solution when the system is consistent.
    pub particular: Option<Vec<Scalar>>,
    /// Basis of `{x : A x = 0}`, independent of `b`.
    pub kernel: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from rows; they must all have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            entries.extend(row);
        }
        Ok(Matrix { rows: nrows, cols: ncols, entries })
    }

    /// Convenience constructor from integer literals.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&n| Scalar::from_integer(n)).collect())
            .collect();
        Matrix::from_rows(data).expect("integer rows are rectangular")
    }

    /// Square diagonal matrix with the given entries.
    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { Scalar::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Stacks `other` below `self`; the column counts must agree.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    /// Row-major copy of the entries, used to treat matrices as vectors.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    /// `A x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, x.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x[c].is_zero() {
                        acc = &acc + &(a * &x[c]);
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * s;
            self.set(r, c, v);
        }
    }

    /// `row[target] -= factor * row[source]`.
    fn subtract_scaled_row(&mut self, target: usize, source: usize, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let s = self.get(source, c);
            if s.is_zero() {
                continue;
            }
            let v = self.get(target, c) - &(factor * s);
            self.set(target, c, v);
        }
    }

    /// Reduced row echelon form with the first-nonzero pivot rule, so the
    /// output is deterministic and canonical for the row space.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(pivot_row) = (lead..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pivot_row);
            let inv = m.get(lead, col).inverse().expect("pivot is nonzero");
            m.scale_row(lead, &inv);
            for r in 0..m.rows {
                if r != lead {
                    let factor = m.get(r, col).clone();
                    m.subtract_scaled_row(r, lead, &factor);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : A x = 0}` as column vectors, from the reduced form's
    /// free columns. Deterministic.
    pub fn column_kernel(&self) -> Vec<Vec<Scalar>> {
        let reduced = self.rref();
        let pivot_set: Vec<bool> = {
            let mut set = vec![false; self.cols];
            for &p in &reduced.pivots {
                set[p] = true;
            }
            set
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &pcol) in reduced.pivots.iter().enumerate() {
                v[pcol] = -reduced.matrix.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Basis rows of the left kernel `{v : v * self = 0}`.
    ///
    /// The result has `rows(self) - rank(self)` rows and `rows(self)` columns.
    pub fn left_kernel(&self) -> Matrix {
        let vectors = self.transpose().column_kernel();
        let mut out = Matrix::zero(vectors.len(), self.rows);
        for (r, v) in vectors.into_iter().enumerate() {
            for (c, s) in v.into_iter().enumerate() {
                out.set(r, c, s);
            }
        }
        out
    }

    /// Determinant by Gaussian elimination; panics on non-square input.
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Scalar::zero();
            };
            if pivot_row != col {
                m.swap_rows(col, pivot_row);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inverse().expect("pivot is nonzero");
            m.scale_row(col, &inv);
            for r in col + 1..n {
                let factor = m.get(r, col).clone();
                m.subtract_scaled_row(r, col, &factor);
            }
        }
        det
    }

    /// Exact inverse; errors on singular input.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(Matrix::zero(0, 0));
        }
        let augmented = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let reduced = augmented.rref();
        if reduced.pivots.len() < n || reduced.pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |r, c| reduced.matrix.get(r, n + c).clone()))
    }
}

/// Solves `A x = b` for a column vector `x` of length `cols(A)`.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> SolveOutcome {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let augmented = Matrix::from_fn(a.rows(), a.cols() + 1, |r, c| {
        if c < a.cols() {
            a.get(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let reduced = augmented.rref();
    let inconsistent = reduced.pivots.last() == Some(&a.cols());
    let particular = if inconsistent {
        None
    } else {
        let mut x = vec![Scalar::zero(); a.cols()];
        for (row, &pcol) in reduced.pivots.iter().enumerate() {
            x[pcol] = reduced.matrix.get(row, a.cols()).clone();
        }
        Some(x)
    };
    SolveOutcome { particular, kernel: a.column_kernel() }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        self.get(r, c)
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.get(k, c);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        })
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

/// JSON encoding: an array of rows, each an array of scalar strings.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(Scalar::to_string).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        let parsed: Result<Vec<Vec<Scalar>>, Error> = rows
            .iter()
            .map(|row| row.iter().map(|s| Scalar::from_str(s)).collect())
            .collect();
        let parsed = parsed.map_err(|e| D::Error::custom(e.to_string()))?;
        Matrix::from_rows(parsed).map_err(|e| D::Error::custom(e.to_string()))
    }
}
