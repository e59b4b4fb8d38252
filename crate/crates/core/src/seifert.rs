//! Seifert matrices and knot dimension bookkeeping.
//!
//! A knot `S^{2n-1} ⊂ S^{2n+1}` is represented by a Seifert matrix `A`
//! whose entry `(i, j)` is the linking number of `x_i` with the positive
//! push-off of `x_j`. `A + ε A'` with `ε = (-1)^n` is the intersection form
//! of the Seifert surface and must be unimodular.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::exactmat::{IntMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("Seifert matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("knot parameter n must be at least 1, got {0}")]
    BadN(i64),
    #[error("NotUnimodular: det(A + ε A') = {0}, expected ±1")]
    NotUnimodular(BigInt),
    #[error("WrongParity: the signature residue needs n even (ε = +1), got n = {0}")]
    WrongParity(u32),
    #[error("invalid dimensions: {0}")]
    BadDims(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^e`.
    pub fn pow(e: u64) -> Self {
        if e.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply(self, m: &IntMatrix) -> IntMatrix {
        match self {
            Sign::Plus => m.clone(),
            Sign::Minus => m.neg(),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `A + (-1)^n A'`, without any validity requirement on `A`.
pub fn symmetrize(a: &IntMatrix, n: u32) -> Result<IntMatrix, SeifertError> {
    if !a.is_square() {
        return Err(SeifertError::NotSquare(a.rows(), a.cols()));
    }
    Ok(a.add(&Sign::pow(n.into()).apply(&a.transpose()))?)
}

/// `signature(A + A') mod 16` for `n` even, without requiring `A` to be
/// ε-unimodular.
pub fn signature_residue(a: &IntMatrix, n: u32) -> Result<u8, SeifertError> {
    if n % 2 == 1 {
        return Err(SeifertError::WrongParity(n));
    }
    let sym = symmetrize(a, n)?;
    let sig = sym.signature()?;
    Ok(sig.rem_euclid(16) as u8)
}

/// A Seifert matrix checked for ε-unimodularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    a: IntMatrix,
    n: u32,
}

impl SeifertData {
    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn epsilon(&self) -> Sign {
        Sign::pow(self.n.into())
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.a
    }

    /// The intersection form `A + ε A'` of the Seifert surface.
    pub fn epsilon_symmetrization(&self) -> IntMatrix {
        symmetrize(&self.a, self.n).expect("validated matrix is square")
    }

    /// `signature(A + A') mod 16`; 0 is necessary for the class to come from
    /// a knot when `n = 2`.
    pub fn levine_signature_residue(&self) -> Result<u8, SeifertError> {
        signature_residue(&self.a, self.n)
    }

    /// Block sum of two Seifert matrices for the same `n`.
    pub fn block_sum(&self, other: &SeifertData) -> Result<SeifertData, SeifertError> {
        if self.n != other.n {
            return Err(SeifertError::BadDims(format!(
                "cannot add Seifert matrices for n = {} and n = {}",
                self.n, other.n
            )));
        }
        validate_seifert(self.a.block_sum(&other.a)?, self.n)
    }
}

/// Accepts `a` when it is square, `n ≥ 1`, and `a + (-1)^n a'` has
/// determinant ±1.
pub fn validate_seifert(a: IntMatrix, n: u32) -> Result<SeifertData, SeifertError> {
    if n == 0 {
        return Err(SeifertError::BadN(0));
    }
    let sym = symmetrize(&a, n)?;
    let det = sym.determinant()?;
    if !det.abs().is_one() {
        return Err(SeifertError::NotUnimodular(det));
    }
    Ok(SeifertData { a, n })
}

/// Dimensions of a frame-spin: base knot `S^{k-2} ⊂ S^k`, spun about a closed
/// `m`-manifold, giving a knot `S^{2n-1} ⊂ S^{2n+1}` with `m + k = 2n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KnotDims {
    k: u32,
    m: u32,
    n: u32,
}

impl KnotDims {
    pub fn new(k: u32, m: u32) -> Result<Self, SeifertError> {
        if k < 3 {
            return Err(SeifertError::BadDims(format!(
                "k ≥ 3 required, got k = {k}"
            )));
        }
        if m < 1 {
            return Err(SeifertError::BadDims(format!(
                "m ≥ 1 required, got m = {m}"
            )));
        }
        if (m + k).is_multiple_of(2) {
            return Err(SeifertError::BadDims(format!(
                "m + k must be odd, got m = {m}, k = {k}"
            )));
        }
        Ok(KnotDims {
            k,
            m,
            n: (m + k - 1) / 2,
        })
    }

    /// Like [`new`](Self::new) but also checks a stated `n`.
    pub fn with_n(k: u32, m: u32, n: u32) -> Result<Self, SeifertError> {
        let dims = Self::new(k, m)?;
        if dims.n != n {
            return Err(SeifertError::BadDims(format!(
                "m + k = 2n + 1 fails for k = {k}, m = {m}, n = {n}"
            )));
        }
        Ok(dims)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `ε = (-1)^n` for the spun knot.
    pub fn epsilon(&self) -> Sign {
        Sign::pow(self.n.into())
    }
}

/// Dispatch on the dimension of a knot's ambient sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceReport {
    /// Knots in even-dimensional spheres are all slice (Kervaire).
    SliceByKervaire,
    /// Odd ambient dimension: sliceness is decided by Seifert matrices.
    UseMatrixMachinery,
}

impl fmt::Display for SliceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceReport::SliceByKervaire => {
                f.write_str("slice by Kervaire: every knot in an even-dimensional sphere is slice")
            }
            SliceReport::UseMatrixMachinery => {
                f.write_str("odd-dimensional ambient sphere: use matrix machinery")
            }
        }
    }
}

/// `ambient_dim` is the dimension of the sphere the knot sits in.
pub fn even_dimensional_slice(ambient_dim: u32) -> SliceReport {
    if ambient_dim.is_multiple_of(2) {
        SliceReport::SliceByKervaire
    } else {
        SliceReport::UseMatrixMachinery
    }
}

impl SliceReport {
    pub fn is_slice(&self) -> bool {
        matches!(self, SliceReport::SliceByKervaire)
    }
}

/// Quick check that `det(A + εA') = ±1` for an arbitrary square matrix.
pub fn is_epsilon_unimodular(a: &IntMatrix, n: u32) -> bool {
    symmetrize(a, n)
        .ok()
        .and_then(|s| s.determinant().ok())
        .is_some_and(|d| d.abs() == BigInt::one())
}
