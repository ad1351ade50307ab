//! Dense exact matrices and indexed families of matrices.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A linear map between based spaces. Column `j` holds the image of the
/// `j`-th source basis vector, so `rows` is the target dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl LinearMap {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            data: vec![scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        LinearMap { rows, cols, data }
    }

    /// Row-major construction; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::dim("ragged rows"));
        }
        Ok(LinearMap {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| scalar::int(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Build a map from the images of the source basis vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::dim("column length differs from row count"));
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| {
            columns[j][i].clone()
        }))
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(idx, v)| (idx / self.cols, idx % self.cols, v))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::dim(format!(
                "vector of length {} applied to a {}x{} map",
                x.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                scalar::dot(row, x)
            })
            .collect())
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> LinearMap {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn zip_with(
        &self,
        other: &LinearMap,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<LinearMap> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dim(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(LinearMap {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> LinearMap {
        self.scale(&-scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    /// Commutator `self·other − other·self` of two square maps.
    pub fn commutator(&self, other: &LinearMap) -> Result<LinearMap> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// Gauss-Jordan reduction; returns the reduced matrix and pivot columns.
    fn row_reduce(&self) -> (LinearMap, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
            }
            let inv = scalar::one() / m.get(row, col);
            for j in 0..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(r, j) - &factor * m.get(row, j);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::dim("determinant of a non-square matrix"));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(scalar::zero());
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let factor = m.get(r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(r, j) - &factor * m.get(col, j);
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        if !self.is_square() {
            return Err(Error::dim("inverse of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let augmented = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                scalar::one()
            } else {
                scalar::zero()
            }
        });
        let (reduced, pivots) = augmented.row_reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == self.transpose().neg()
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols)
                .map(|j| scalar::format(self.get(i, j)))
                .collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// A linear map `A → gl(V)` stored extensionally: one `vdim × vdim` matrix
/// per basis vector of `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixFamily {
    vdim: usize,
    mats: Vec<LinearMap>,
}

impl MatrixFamily {
    pub fn new(vdim: usize, mats: Vec<LinearMap>) -> Result<Self> {
        if let Some((i, m)) = mats
            .iter()
            .enumerate()
            .find(|(_, m)| m.rows() != vdim || m.cols() != vdim)
        {
            return Err(Error::dim(format!(
                "family member {} is {}x{}, expected {vdim}x{vdim}",
                i + 1,
                m.rows(),
                m.cols()
            )));
        }
        Ok(MatrixFamily { vdim, mats })
    }

    pub fn zeros(len: usize, vdim: usize) -> Self {
        MatrixFamily {
            vdim,
            mats: vec![LinearMap::zeros(vdim, vdim); len],
        }
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn get(&self, i: usize) -> &LinearMap {
        &self.mats[i]
    }

    pub fn members(&self) -> &[LinearMap] {
        &self.mats
    }

    /// Evaluate at an arbitrary element `Σ x_i e_i`.
    pub fn at(&self, x: &[Scalar]) -> Result<LinearMap> {
        if x.len() != self.mats.len() {
            return Err(Error::dim(format!(
                "family of length {} evaluated at a vector of length {}",
                self.mats.len(),
                x.len()
            )));
        }
        let mut out = LinearMap::zeros(self.vdim, self.vdim);
        for (c, m) in x.iter().zip(&self.mats) {
            if !c.is_zero() {
                out = out.add(&m.scale(c))?;
            }
        }
        Ok(out)
    }

    pub fn map(&self, f: impl Fn(&LinearMap) -> LinearMap) -> MatrixFamily {
        MatrixFamily {
            vdim: self.vdim,
            mats: self.mats.iter().map(f).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &MatrixFamily,
        f: impl Fn(&LinearMap, &LinearMap) -> Result<LinearMap>,
    ) -> Result<MatrixFamily> {
        if self.vdim != other.vdim || self.mats.len() != other.mats.len() {
            return Err(Error::dim("families of different shapes"));
        }
        Ok(MatrixFamily {
            vdim: self.vdim,
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| f(a, b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn add(&self, other: &MatrixFamily) -> Result<MatrixFamily> {
        self.zip_with(other, LinearMap::add)
    }

    pub fn sub(&self, other: &MatrixFamily) -> Result<MatrixFamily> {
        self.zip_with(other, LinearMap::sub)
    }

    pub fn neg(&self) -> MatrixFamily {
        self.map(LinearMap::neg)
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(LinearMap::is_zero)
    }
}

/// The dual representation on `V*`: `ρ*(x) = −ρ(x)ᵀ` in the dual basis.
pub fn dual_rep(rho: &MatrixFamily) -> MatrixFamily {
    rho.map(|m| m.transpose().neg())
}
