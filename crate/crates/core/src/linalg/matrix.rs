use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::reduce::RowReducer;
use crate::error::{Error, Result};

/// Dense row-major matrix over ℚ.
///
/// Arithmetic operators panic on incompatible shapes; the checked entry
/// points (`try_mul`, `new`, ...) return [`Error::Shape`] instead.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Integer matrix from rows. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            data.extend(r.iter().map(|&x| Rational::from_integer(x)));
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors, all of length `len`.
    pub fn from_columns(columns: &[Vec<Rational>], len: usize) -> Result<Self> {
        let mut m = Self::zeros(len, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != len {
                return Err(Error::Shape(format!("column of length {} where {len} expected", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    /// Single column.
    pub fn column(v: Vec<Rational>) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Rational> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_vec(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Reinterpret the row-major entries with a new shape.
    pub fn reshape(self, rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, self.data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                if !x.is_zero() {
                    t[(j, i)] = x.clone();
                }
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix) -> Rational {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut acc = Rational::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let b = &other[(k, i)];
                if !b.is_zero() {
                    acc += a * b;
                }
            }
        }
        acc
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        // Row supports of rhs; most matrices in this crate are sparse
        // (permutation-like representations and their Kronecker products).
        let support: Vec<Vec<usize>> = (0..rhs.rows)
            .map(|k| (0..rhs.cols).filter(|&j| !rhs[(k, j)].is_zero()).collect())
            .collect();
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for &j in &support[k] {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Kronecker product `self ⊗ rhs`: entry `(i*p + k, j*q + l)` is
    /// `self[i,j] * rhs[k,l]` for `rhs` of shape `p x q`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (p, q) = rhs.shape();
        let mut out = Matrix::zeros(self.rows * p, self.cols * q);
        self.kron_into(rhs, &Rational::one(), &mut out);
        out
    }

    /// `out += c * (self ⊗ rhs)`.
    pub fn kron_into(&self, rhs: &Matrix, c: &Rational, out: &mut Matrix) {
        let (p, q) = rhs.shape();
        assert_eq!(out.shape(), (self.rows * p, self.cols * q));
        let rhs_nz: Vec<(usize, usize, &Rational)> = (0..p)
            .flat_map(|k| (0..q).map(move |l| (k, l)))
            .map(|(k, l)| (k, l, &rhs[(k, l)]))
            .filter(|(_, _, x)| !x.is_zero())
            .collect();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                let ca = c * a;
                for &(k, l, b) in &rhs_nz {
                    out[(i * p + k, j * q + l)] += &ca * b;
                }
            }
        }
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::Shape("hstack of matrices with different row counts".into()));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    out[(i, c0 + j)] = b[(i, j)].clone();
                }
            }
            c0 += b.cols;
        }
        Ok(out)
    }

    pub fn vstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::Shape("vstack of matrices with different column counts".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend_from_slice(&b.data);
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Reduced row-echelon form and its pivot columns (strictly increasing).
    /// The RREF of a matrix is unique, so the result depends only on the
    /// row space.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut red = RowReducer::new(self.cols);
        for i in 0..self.rows {
            red.push(self.row(i).to_vec());
        }
        let (basis, pivots) = red.into_rref();
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for r in basis {
            data.extend(r);
        }
        data.resize(self.rows * self.cols, Rational::zero());
        (Matrix { rows: self.rows, cols: self.cols, data }, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.cols);
        for i in 0..self.rows {
            red.push(self.row(i).to_vec());
        }
        red.rank()
    }

    /// Null-space basis in free-variable order: for each non-pivot column
    /// `f` (ascending) the vector with a 1 in slot `f`, zero in the other
    /// free slots, and `-R[r, f]` in pivot slot `p_r`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// A particular solution of `self * x = b` with free variables set to 0.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let n = self.cols;
        let mut red = RowReducer::new(n + 1);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.push(b[i].clone());
            red.push(row);
        }
        let (basis, pivots) = red.into_rref();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = vec![Rational::zero(); n];
        for (row, &p) in basis.iter().zip(&pivots) {
            x[p] = row[n].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut red = RowReducer::new(2 * n);
        for i in 0..n {
            let mut row = self.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            red.push(row);
        }
        let (basis, pivots) = red.into_rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for (i, row) in basis.into_iter().enumerate() {
            for (j, x) in row.into_iter().skip(n).enumerate() {
                inv[(i, j)] = x;
            }
        }
        Some(inv)
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            let inv = pivot.recip().expect("nonzero pivot");
            let (top, bottom) = a.split_at_mut(col + 1);
            let prow = &top[col];
            for row in bottom.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let f = &row[col] * &inv;
                for j in col..n {
                    if !prow[j].is_zero() {
                        let d = &f * &prow[j];
                        row[j] -= d;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && &(self * self) == self
    }

    /// Rank factorization of an idempotent: `e = i * p` and
    /// `p * i = identity(rank)`.
    ///
    /// `p` is the nonzero part of `rref(e)` and `i` collects the pivot
    /// columns of `e`.
    pub fn split_idempotent(&self) -> Result<(Matrix, Matrix)> {
        if !self.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        let (r, pivots) = self.rref();
        let k = pivots.len();
        let p = Matrix::new(k, self.cols, r.data[..k * self.cols].to_vec())?;
        let mut i = Matrix::zeros(self.rows, k);
        for (c, &pc) in pivots.iter().enumerate() {
            for row in 0..self.rows {
                i[(row, c)] = self[(row, pc)].clone();
            }
        }
        debug_assert!((&p * &i).is_identity());
        Ok((p, i))
    }

    /// Canonical basis of the column space: the nonzero rows of
    /// `rref(transpose)`, returned as column vectors.
    pub fn column_space(&self) -> Vec<Vec<Rational>> {
        let mut red = RowReducer::new(self.rows);
        for j in 0..self.cols {
            red.push(self.column_vec(j));
        }
        red.into_rref().0
    }

    /// Left inverse of a matrix with independent columns.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let t = self.transpose();
        let gram = &t * self;
        Some(&gram.inverse()? * &t)
    }
}

/// Kernel vectors from an RREF (see [`Matrix::kernel_basis`]).
pub fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<Rational>> {
    let n = r.cols();
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, f)];
            }
            v
        })
        .collect()
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, p) = Matrix::identity(2).rref();
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1]);

        let (r, p) = Matrix::from_ints(&[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r, Matrix::from_ints(&[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);

        let (r, p) = Matrix::zeros(3, 3).rref();
        assert!(r.is_zero());
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let k = Matrix::from_ints(&[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k, vec![ints(&[-1, 1])]);
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(Matrix::from_ints(&[&[1, 0]]).kernel_basis(), vec![ints(&[0, 1])]);
    }

    #[test]
    fn solve_examples() {
        let b = ints(&[3, -2]);
        assert_eq!(Matrix::identity(2).solve(&b), Some(b.clone()));
        assert_eq!(Matrix::from_ints(&[&[1, 1]]).solve(&ints(&[2])), Some(ints(&[2, 0])));
        assert_eq!(Matrix::from_ints(&[&[0]]).solve(&ints(&[1])), None);
    }

    #[test]
    fn idempotent_examples() {
        assert!(Matrix::from_ints(&[&[1, 0], &[0, 0]]).is_idempotent());
        assert!(!Matrix::from_ints(&[&[2, 0], &[0, 0]]).is_idempotent());
        assert!(Matrix::zeros(3, 3).is_idempotent());
        assert!(!Matrix::zeros(2, 3).is_idempotent());
    }

    #[test]
    fn split_idempotent_examples() {
        let (p, i) = Matrix::identity(3).split_idempotent().unwrap();
        assert!(p.is_identity() && i.is_identity());

        let (p, i) = Matrix::from_ints(&[&[1, 0], &[0, 0]]).split_idempotent().unwrap();
        assert_eq!(p, Matrix::from_ints(&[&[1, 0]]));
        assert_eq!(i, Matrix::from_ints(&[&[1], &[0]]));

        let half = q(1, 2);
        let e = Matrix::new(2, 2, vec![half.clone(), half.clone(), half.clone(), half]).unwrap();
        assert_eq!(&e * &e, e);
        let (p, i) = e.split_idempotent().unwrap();
        assert_eq!(p.shape(), (1, 2));
        assert_eq!(&i * &p, e);
        assert!((&p * &i).is_identity());

        assert!(matches!(
            Matrix::from_ints(&[&[2, 0], &[0, 0]]).split_idempotent(),
            Err(Error::NotIdempotent)
        ));
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_ints(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(m.determinant().unwrap(), Rational::one());
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(Matrix::from_ints(&[&[0, 1], &[1, 0]]).determinant().unwrap(), q(-1, 1));
        let v = Matrix::from_ints(&[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]]);
        assert_eq!(v.determinant().unwrap(), q(1, 1));
    }

    #[test]
    fn kron_layout() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        assert_eq!(k.shape(), (4, 4));
        assert_eq!(k[(1, 3)], q(14, 1));
        assert_eq!(k[(2, 1)], q(15, 1));
        // vec_row(A M B) = (A ⊗ Bᵀ) vec_row(M)
        let m = Matrix::from_ints(&[&[1, -1], &[2, 0]]);
        let lhs = (&(&a * &m) * &b).into_data();
        let rhs = a.kron(&b.transpose()).mul_vec(m.as_slice());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn column_space_is_canonical() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.column_space(), vec![ints(&[1, 2])]);
        let left = Matrix::from_ints(&[&[1, 0], &[1, 1], &[0, 1]]).left_inverse().unwrap();
        assert!((&left * &Matrix::from_ints(&[&[1, 0], &[1, 1], &[0, 1]])).is_identity());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                Matrix::new(r, c, v.into_iter().map(Rational::from_integer).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_rank_nullity(m in small_matrix()) {
            let (r, p) = m.rref();
            let (r2, p2) = r.rref();
            prop_assert_eq!(&r, &r2);
            prop_assert_eq!(&p, &p2);
            prop_assert!(p.windows(2).all(|w| w[0] < w[1]));
            let k = m.kernel_basis();
            prop_assert_eq!(p.len() + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
            }
        }

        #[test]
        fn projector_splits(m in small_matrix()) {
            // Build an idempotent from a full-column-rank basis of the column space.
            let cols = m.column_space();
            prop_assume!(!cols.is_empty());
            let basis = Matrix::from_columns(&cols, m.rows()).unwrap();
            let e = &basis * &basis.left_inverse().unwrap();
            prop_assert!(e.is_idempotent());
            let (p, i) = e.split_idempotent().unwrap();
            prop_assert_eq!(&(&i * &p), &e);
            prop_assert!((&p * &i).is_identity());
        }

        #[test]
        fn solve_is_consistent(m in small_matrix(), x in proptest::collection::vec(-3i64..4, 6)) {
            let x: Vec<Rational> = x.into_iter().take(m.cols()).map(Rational::from_integer).collect();
            prop_assume!(x.len() == m.cols());
            let b = m.mul_vec(&x);
            let y = m.solve(&b).expect("consistent system");
            prop_assert_eq!(m.mul_vec(&y), b);
        }
    }
}
