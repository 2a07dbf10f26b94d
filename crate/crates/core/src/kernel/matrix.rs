use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{Field, Rref};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single scalar field.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![F::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = F::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<F>>) -> Result<Self> {
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: data.len(), cols, data })
    }

    /// Builds a matrix with `rows` rows whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.data[i][j] = x.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i][j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                t.data[j][i] = x.clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!("{}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in o.data[k].iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i][j].add_assign(&a.times(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!("{} columns vs vector of length {}", self.cols, v.len())));
        }
        Ok(self.data.iter().map(|r| dot(r, v)).collect())
    }

    pub fn add(&self, o: &Matrix<F>) -> Result<Matrix<F>> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::Dimension("shape mismatch in sum".into()));
        }
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        let data = self.data.iter().map(|r| r.iter().map(|x| x.times(c)).collect()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(F::is_zero))
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t.add_assign(&self.data[i][i]);
        }
        t
    }

    pub fn rref(&self) -> Rref<F> {
        F::rref(&self.data, self.cols)
    }

    /// Row rank over the scalar field.
    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        F::nullspace(&self.data, self.cols)
    }

    /// Some `x` with `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("{} rows vs right-hand side of length {}", self.rows, b.len())));
        }
        let aug: Vec<Vec<F>> = self
            .data
            .iter()
            .zip(b)
            .map(|(r, x)| {
                let mut row = r.clone();
                row.push(x.clone());
                row
            })
            .collect();
        let r = F::rref(&aug, self.cols + 1);
        if r.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut s = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s.add_assign(&x.times(y));
        }
    }
    s
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in &self.data {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(Matrix::<Rational>::identity(2).rank(), 2);
        assert_eq!(Matrix::<Rational>::zeros(3, 5).rank(), 0);
        assert!(Matrix::<Rational>::identity(4).kernel_basis().is_empty());
        assert_eq!(Matrix::<Rational>::zeros(2, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn kernel_of_row() {
        let m = Matrix::from_rows(vec![vec![q(1), q(1)]]).unwrap();
        assert_eq!(m.kernel_basis(), vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn solve_cases() {
        let id = Matrix::<Rational>::identity(3);
        let b = vec![q(1), q(-2), Rational::ratio(1, 3)];
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::<Rational>::zeros(3, 3).solve(&b).unwrap(), None);
    }
}
