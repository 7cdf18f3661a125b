//! Dense matrices over a [`Field`] with exact Gaussian elimination.

use std::fmt::Debug;

use rand::Rng;

use crate::error::{domain_err, shape_err, Result};
use crate::field::Field;

/// Row-major dense matrix. Arithmetic takes the field context explicitly.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<E> {
    pub matrix: Mat<E>,
    pub pivots: Vec<usize>,
}

impl<E: Clone + PartialEq + Debug> Mat<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(shape_err!("ragged matrix rows"));
        }
        Ok(Mat { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<E>>) -> Result<Self> {
        if cols.iter().any(|c| c.len() != rows) {
            return Err(shape_err!("column length differs from {rows}"));
        }
        let ncols = cols.len();
        Ok(Mat::from_fn(rows, ncols, |i, j| cols[j][i].clone()))
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

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &E {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Self {
        assert!(range.end <= self.cols);
        let start = range.start;
        Mat::from_fn(self.rows, range.len(), |i, j| self.get(i, start + j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Mat::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(shape_err!("hstack of {} and {} rows", self.rows, other.rows));
        }
        Ok(Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(shape_err!("vstack of {} and {} columns", self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Mat { rows: self.rows + other.rows, cols: self.cols, data })
    }
}

impl<E: Clone + PartialEq + Debug> Mat<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
    }

    pub fn from_i64<F: Field<Elem = E>>(f: &F, rows: &[Vec<i64>]) -> Result<Self> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect())
    }

    pub fn random<F: Field<Elem = E>, R: Rng + ?Sized>(
        f: &F,
        rows: usize,
        cols: usize,
        rng: &mut R,
    ) -> Self {
        Mat::from_fn(rows, cols, |_, _| f.random(rng))
    }

    /// Uniform invertible matrix, by rejection of singular draws.
    pub fn random_invertible<F: Field<Elem = E>, R: Rng + ?Sized>(f: &F, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Mat::random(f, n, n, rng);
            if m.rank(f) == n {
                return m;
            }
        }
    }

    /// Random upper-triangular matrix with nonzero diagonal.
    pub fn random_upper_triangular<F: Field<Elem = E>, R: Rng + ?Sized>(
        f: &F,
        n: usize,
        rng: &mut R,
    ) -> Self {
        Mat::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => f.random(rng),
            std::cmp::Ordering::Equal => f.random_nonzero(rng),
            std::cmp::Ordering::Greater => f.zero(),
        })
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn is_upper_triangular<F: Field<Elem = E>>(&self, f: &F) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| f.is_zero(self.get(i, j))))
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(shape_err!(
                "cannot add {}x{} and {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            ));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| f.mul(c, x)).collect() }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(shape_err!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            ));
        }
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Result<Vec<E>> {
        if v.len() != self.cols {
            return Err(shape_err!("vector of length {} for {} columns", v.len(), self.cols));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    pub fn rref<F: Field<Elem = E>>(&self, f: &F) -> Rref<E> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !f.is_zero(m.get(i, col))) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for j in col..m.cols {
                let v = f.mul(m.get(row, j), &inv);
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || f.is_zero(m.get(i, col)) {
                    continue;
                }
                let factor = m.get(i, col).clone();
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(row, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        // forward elimination only
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| !f.is_zero(m.get(i, col))) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = f.inv(m.get(rank, col)).expect("pivot is nonzero");
            for i in rank + 1..m.rows {
                if f.is_zero(m.get(i, col)) {
                    continue;
                }
                let factor = f.mul(m.get(i, col), &inv);
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(rank, j)));
                    m.set(i, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<E>> {
        let Rref { matrix, pivots } = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(matrix.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn det<F: Field<Elem = E>>(&self, f: &F) -> Result<E> {
        if !self.is_square() {
            return Err(shape_err!("determinant of a {}x{} matrix", self.rows, self.cols));
        }
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&i| !f.is_zero(m.get(i, col))) else {
                return Ok(f.zero());
            };
            if p != col {
                m.swap_rows(col, p);
                det = f.neg(&det);
            }
            let pivot = m.get(col, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("pivot is nonzero");
            for i in col + 1..m.rows {
                if f.is_zero(m.get(i, col)) {
                    continue;
                }
                let factor = f.mul(m.get(i, col), &inv);
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Result<Self> {
        if !self.is_square() {
            return Err(shape_err!("inverse of a {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(f, n))?;
        let Rref { matrix, pivots } = aug.rref(f);
        if pivots.len() < n || pivots.iter().take(n).any(|&p| p >= n) {
            return Err(domain_err!("matrix is singular"));
        }
        Ok(matrix.columns(n..2 * n))
    }

    /// Solve `self * x = b` for one solution, or `None` if inconsistent.
    pub fn solve<F: Field<Elem = E>>(&self, f: &F, b: &[E]) -> Result<Option<Vec<E>>> {
        if b.len() != self.rows {
            return Err(shape_err!("right-hand side of length {} for {} rows", b.len(), self.rows));
        }
        let bcol = Mat::from_fn(self.rows, 1, |i, _| b[i].clone());
        let Rref { matrix, pivots } = self.hstack(&bcol)?.rref(f);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Apply `g` to every entry, possibly changing the element type.
    pub fn map<T>(&self, g: impl Fn(&E) -> T) -> Mat<T> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(g).collect() }
    }
}
