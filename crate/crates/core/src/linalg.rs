//! Exact dense matrices: fraction-free determinants, Vandermonde
//! constructors, and determinants of matrices whose last column holds
//! polynomials (the shape of every determinantal formula in this crate).

use crate::error::Error;
use crate::poly::UniPoly;
use crate::scalar::Field;

/// Row-major dense matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<K: Field> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged matrix rows");
        Matrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { K::one() } else { K::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = K::zero();
            for t in 0..self.cols {
                acc = acc.add(&self.at(i, t).mul(rhs.at(t, j)));
            }
            acc
        })
    }

    /// Copy of the matrix with one row removed.
    pub fn without_row(&self, row: usize) -> Self {
        Self::from_fn(self.rows - 1, self.cols, |i, j| {
            let src = if i < row { i } else { i + 1 };
            self.at(src, j).clone()
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting. The 0x0 determinant is 1 (empty product).
    pub fn det(&self) -> Result<K, Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(K::one());
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<K>, i: usize, j: usize| m[i * n + j].clone();
        let mut negate = false;
        let mut prev = K::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let Some(pivot) = (k + 1..n).find(|&i| !at(&m, i, k).is_zero()) else {
                    return Ok(K::zero());
                };
                for j in 0..n {
                    m.swap(k * n + j, pivot * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    // Exact in any field; over the rationals this is the
                    // fraction-free Bareiss update.
                    let num = at(&m, k, k)
                        .mul(&at(&m, i, j))
                        .sub(&at(&m, i, k).mul(&at(&m, k, j)));
                    m[i * n + j] = num.div(&prev);
                }
                m[i * n + k] = K::zero();
            }
            prev = at(&m, k, k);
        }
        let det = at(&m, n - 1, n - 1);
        Ok(if negate { det.neg() } else { det })
    }
}

/// Square matrix whose last column holds polynomials: an `r x (r-1)`
/// numeric block plus `r` polynomial entries.
#[derive(Clone, Debug)]
pub struct PolyColMatrix<K: Field> {
    pub block: Matrix<K>,
    pub last_col: Vec<UniPoly<K>>,
}

impl<K: Field> PolyColMatrix<K> {
    /// Determinant as a polynomial, by Laplace expansion along the last
    /// column; each minor is a numeric determinant.
    pub fn det_poly(&self) -> Result<UniPoly<K>, Error> {
        let r = self.last_col.len();
        if self.block.rows() != r || r != self.block.cols() + 1 {
            return Err(Error::NonSquareMatrix {
                rows: self.block.rows(),
                cols: self.block.cols() + 1,
            });
        }
        if r == 0 {
            return Ok(UniPoly::one());
        }
        let mut acc = UniPoly::zero();
        for (i, entry) in self.last_col.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor = self.block.without_row(i).det()?;
            if minor.is_zero() {
                continue;
            }
            let signed = if (i + r - 1).is_multiple_of(2) {
                minor
            } else {
                minor.neg()
            };
            acc = acc.add(&entry.scale(&signed));
        }
        Ok(acc)
    }
}

/// The shifted Vandermonde matrix of size `height x |xs|`: rows hold the
/// powers of the entries, exponent `height-1` on top down to exponent 0.
/// When `height == |xs|` its determinant is `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde<K: Field>(xs: &[K], height: usize) -> Matrix<K> {
    Matrix::from_fn(height, xs.len(), |i, j| xs[j].pow_usize(height - 1 - i))
}

/// `prod_{i<j} (x_i - x_j)`, the square Vandermonde determinant.
pub fn vandermonde_product<K: Field>(xs: &[K]) -> K {
    let mut acc = K::one();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            acc = acc.mul(&xs[i].sub(&xs[j]));
        }
    }
    acc
}
