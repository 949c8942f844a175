//! Exact dense matrices and sparse row echelon forms.
//!
//! Elimination is deterministic: a new row is reduced against existing
//! pivots in increasing column order, and its first surviving column becomes
//! its pivot. Pivot rows are scaled to a leading one.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

pub type SparseRow<T> = BTreeMap<usize, T>;

/// Incrementally built row echelon form over `T`.
#[derive(Debug, Clone)]
pub struct SparseEchelon<T> {
    width: usize,
    pivots: BTreeMap<usize, SparseRow<T>>,
}

impl<T: Field> SparseEchelon<T> {
    pub fn new(width: usize) -> Self {
        SparseEchelon {
            width,
            pivots: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the current pivots. Returns the new pivot
    /// column when the row was independent, `None` otherwise.
    pub fn insert(&mut self, row: SparseRow<T>) -> Option<usize> {
        let mut row: SparseRow<T> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        debug_assert!(row.keys().all(|&c| c < self.width));
        let mut floor = 0;
        loop {
            let Some((&lead, _)) = row.range(floor..).find(|(c, _)| self.pivots.contains_key(c))
            else {
                break;
            };
            let factor = row[&lead].clone();
            let pivot = &self.pivots[&lead];
            for (&c, v) in pivot {
                let delta = factor.clone() * v.clone();
                match row.get_mut(&c) {
                    Some(slot) => {
                        *slot = slot.clone() - delta;
                        if slot.is_zero() {
                            row.remove(&c);
                        }
                    }
                    None => {
                        row.insert(c, -delta);
                    }
                }
            }
            floor = lead + 1;
        }
        let (&lead, lead_value) = row.iter().next()?;
        let inv = T::one() / lead_value.clone();
        for v in row.values_mut() {
            *v = v.clone() * inv.clone();
        }
        self.pivots.insert(lead, row);
        Some(lead)
    }

    pub fn contains(&self, row: &SparseRow<T>) -> bool {
        let mut probe = self.clone();
        probe.insert(row.clone()).is_none()
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
                .collect(),
        )
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidMatrix(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] =
                            a.clone() * other[(k, l)].clone();
                    }
                }
            }
        }
        out
    }

    pub fn sparse_row(&self, i: usize) -> SparseRow<T> {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut echelon = SparseEchelon::new(self.cols);
        for i in 0..self.rows {
            echelon.insert(self.sparse_row(i));
        }
        echelon.rank()
    }

    /// Solves `self · X = rhs` for a matrix with independent columns.
    /// Returns `None` when some column of `rhs` is outside the column space.
    pub fn solve_full_column_rank(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows, "row count mismatch");
        let (n, d, m) = (self.rows, self.cols, rhs.cols);
        let mut aug: Vec<Vec<T>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(rhs.row(i));
                r
            })
            .collect();
        let mut pivot_row = 0;
        for col in 0..d {
            let found = (pivot_row..n).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(pivot_row, found);
            let inv = T::one() / aug[pivot_row][col].clone();
            for v in aug[pivot_row].iter_mut() {
                *v = v.clone() * inv.clone();
            }
            let pivot = aug[pivot_row].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == pivot_row || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *v = v.clone() - f.clone() * p.clone();
                    }
                }
            }
            pivot_row += 1;
        }
        if aug[d..].iter().any(|row| row[d..].iter().any(|v| !v.is_zero())) {
            return None;
        }
        let mut x = Self::zeros(d, m);
        for i in 0..d {
            for j in 0..m {
                x[(i, j)] = aug[i][d + j].clone();
            }
        }
        Some(x)
    }

    /// Parses `"1,0;1/2,1"`: rows split by `;`, entries by `,`.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        T::parse_exact(t)
                            .ok_or_else(|| Error::InvalidMatrix(format!("bad entry {:?}", t.trim())))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Field> fmt::Display for Matrix<T> {
    /// Same text form accepted by [`Matrix::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join(";"))
    }
}
