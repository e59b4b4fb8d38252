//! Dense exact-integer matrices.
//!
//! Every pairing, witness and normal form in this crate is an [`IntMatrix`].
//! Entries are arbitrary-precision integers, so no operation can silently
//! overflow. Empty matrices (`0×0`, `0×n`) are ordinary values: the
//! determinant of `0×0` is 1, its signature is 0, and it is the identity for
//! [`IntMatrix::block_sum`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {op} of {lhs:?} and {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("{op} needs a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("entry buffer has length {len}, expected {rows}x{cols}")]
    BadLength {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("rows have unequal lengths")]
    Ragged,
}

/// A dense `rows × cols` matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::BadLength {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn empty() -> Self {
        Self::zeros(0, 0)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Build from machine integers. Panics if `data.len() != rows * cols`.
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "from_i64: wrong entry count");
        IntMatrix {
            rows,
            cols,
            data: data.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Build from a list of rows. An empty list gives the `0×0` matrix.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            let row = row.as_ref();
            if row.len() != c {
                return Err(MatrixError::Ragged);
            }
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(MatrixError::Ragged);
            }
            data.extend(row);
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    /// `diag(entries)`.
    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &x) in entries.iter().enumerate() {
            m.data[i * n + i] = BigInt::from(x);
        }
        m
    }

    /// Permutation matrix `P` with `(P X P')[i][j] = X[order[i]][order[j]]`.
    /// Row `i` of `P` is the unit vector `e_{order[i]}`.
    pub fn permutation(order: &[usize]) -> Self {
        let n = order.len();
        let mut m = Self::zeros(n, n);
        for (i, &src) in order.iter().enumerate() {
            assert!(src < n, "permutation index out of range");
            m.data[i * n + src] = BigInt::one();
        }
        debug_assert!(m.is_integrally_invertible(), "order is not a permutation");
        m
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

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn require_square(&self, op: &'static str) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        t
    }

    pub fn multiply(&self, other: &IntMatrix) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                op: "multiply",
                lhs: self.shape(),
                rhs: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self.data[i * self.cols + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[l * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `P · A · P'` where `self` is `A`.
    pub fn congruence(&self, p: &IntMatrix) -> Result<Self, MatrixError> {
        let n = self.require_square("congruence")?;
        if p.cols != n {
            return Err(MatrixError::DimensionMismatch {
                op: "congruence",
                lhs: p.shape(),
                rhs: self.shape(),
            });
        }
        p.multiply(self)?.multiply(&p.transpose())
    }

    /// `diag(self, other)`. Both operands must be square.
    pub fn block_sum(&self, other: &IntMatrix) -> Result<Self, MatrixError> {
        let a = self.require_square("block_sum")?;
        let b = other.require_square("block_sum")?;
        let n = a + b;
        let mut out = Self::zeros(n, n);
        for i in 0..a {
            for j in 0..a {
                out.data[i * n + j] = self.data[i * a + j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                out.data[(a + i) * n + a + j] = other.data[i * b + j].clone();
            }
        }
        Ok(out)
    }

    /// Block sum of a sequence of square matrices.
    pub fn block_sum_all<'a, I>(parts: I) -> Result<Self, MatrixError>
    where
        I: IntoIterator<Item = &'a IntMatrix>,
    {
        parts
            .into_iter()
            .try_fold(Self::empty(), |acc, m| acc.block_sum(m))
    }

    /// Kronecker product `self ⊗ other`; the row/column index of `self`
    /// varies slowest.
    pub fn tensor(&self, other: &IntMatrix) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.data[i * self.cols + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other.data[k * other.cols + l];
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * cols + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> Result<Self, MatrixError> {
        if self.shape() != other.shape() {
            return Err(MatrixError::DimensionMismatch {
                op: "add",
                lhs: self.shape(),
                rhs: other.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, factor: i64) -> Self {
        let f = BigInt::from(factor);
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * &f).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// The `height × width` sub-block starting at `(row, col)`.
    pub fn block(&self, row: usize, col: usize, height: usize, width: usize) -> Self {
        assert!(
            row + height <= self.rows && col + width <= self.cols,
            "block out of range"
        );
        let mut out = Self::zeros(height, width);
        for i in 0..height {
            for j in 0..width {
                out.data[i * width + j] = self.data[(row + i) * self.cols + col + j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && self.transpose() == self.neg()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, MatrixError> {
        let n = self.require_square("determinant")?;
        let mut m = self.data.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    m.swap(k * n + j, swap * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = v / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = if n == 0 { BigInt::one() } else { prev };
        Ok(if sign < 0 { -det } else { det })
    }

    /// True iff `det = ±1`.
    pub fn is_unimodular(&self) -> bool {
        self.determinant()
            .map(|d| d.abs().is_one())
            .unwrap_or(false)
    }

    /// Same test as [`is_unimodular`](Self::is_unimodular); named for its
    /// use on change-of-basis witnesses.
    pub fn is_integrally_invertible(&self) -> bool {
        self.is_unimodular()
    }

    /// Signature (positive minus negative inertia) of a symmetric matrix,
    /// by exact congruence diagonalization over the rationals.
    pub fn signature(&self) -> Result<i64, MatrixError> {
        Ok(self.inertia()?.signature())
    }

    /// Inertia `(positive, negative, zero)` of a symmetric matrix.
    ///
    /// Uses symmetric Gaussian pivoting with 1×1 pivots on nonzero diagonal
    /// entries and 2×2 pivots `[[0,b],[b,0]]` when the remaining diagonal is
    /// zero. Each 2×2 pivot contributes one positive and one negative square.
    pub fn inertia(&self) -> Result<Inertia, MatrixError> {
        let n = self.require_square("signature")?;
        if !self.is_symmetric() {
            return Err(MatrixError::NotSymmetric);
        }
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        let mut active: Vec<usize> = (0..n).collect();
        let mut inertia = Inertia::default();
        while !active.is_empty() {
            if let Some(pos) = active.iter().position(|&i| !m[i][i].is_zero()) {
                let p = active.swap_remove(pos);
                let pivot = m[p][p].clone();
                if pivot.is_positive() {
                    inertia.positive += 1;
                } else {
                    inertia.negative += 1;
                }
                for &i in &active {
                    if m[i][p].is_zero() {
                        continue;
                    }
                    let factor = &m[i][p] / &pivot;
                    for &j in &active {
                        let delta = &factor * &m[p][j];
                        m[i][j] -= delta;
                    }
                }
                continue;
            }
            let pair = active.iter().enumerate().find_map(|(x, &i)| {
                active[x + 1..]
                    .iter()
                    .find(|&&j| !m[i][j].is_zero())
                    .map(|&j| (i, j))
            });
            let Some((p, q)) = pair else {
                inertia.zero += active.len();
                break;
            };
            active.retain(|&i| i != p && i != q);
            inertia.positive += 1;
            inertia.negative += 1;
            // inverse of [[0,b],[b,0]] is [[0,1/b],[1/b,0]]
            let b = m[p][q].clone();
            for &i in &active {
                let cp = &m[i][q] / &b;
                let cq = &m[i][p] / &b;
                if cp.is_zero() && cq.is_zero() {
                    continue;
                }
                for &j in &active {
                    let delta = &cp * &m[p][j] + &cq * &m[q][j];
                    m[i][j] -= delta;
                }
            }
        }
        Ok(inertia)
    }

    /// Largest entry bit length; 0 for an all-zero or empty matrix.
    pub fn max_bits(&self) -> u64 {
        self.data.iter().map(BigInt::bits).max().unwrap_or(0)
    }
}

/// Counts of positive, negative and zero squares in a diagonalization.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}{}", self.rows, self.cols, self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Shorthand for small literal matrices in tests and corpus code.
///
/// ```
/// use spinslice::imat;
/// let j = imat![[0, 1], [-1, 0]];
/// assert_eq!(j.determinant().unwrap(), 1.into());
/// ```
#[macro_export]
macro_rules! imat {
    () => {
        $crate::exactmat::IntMatrix::empty()
    };
    ($([$($x:expr),* $(,)?]),+ $(,)?) => {
        $crate::exactmat::IntMatrix::from_rows(&[$(vec![$($x as i64),*]),+])
            .expect("imat!: ragged rows")
    };
}
