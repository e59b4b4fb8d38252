//! Seifert matrix of a frame-spun knot.
//!
//! Input is purely algebraic: the free ranks `r_a = rank F_a(V)` of a Seifert
//! surface `V` of the base knot, the ranks `ρ_b = rank F_b(M)` of the spinning
//! manifold, the linking pairings `Λ_a : F_a(V) × F_{k-1-a}(V) → ℤ` and the
//! intersection pairings `T_b : F_b(M) × F_{m-b}(M) → ℤ`.
//!
//! The spun Seifert surface has free middle homology
//! `⊕_{a=1}^{k-2} F_a(V) ⊗ F_{n-a}(M)`, each summand in lexicographic order
//! with the `V` index slowest. The pairing of `x ⊗ ξ ∈ F_{a,b}` with
//! `y ⊗ η ∈ F_{c,d}` is `(-1)^{(m-b)(k-c)} (z·i(y)) (ξ·η)`, which vanishes
//! unless `a + c = k - 1`; so the assembled matrix is block anti-diagonal
//! with blocks `±Λ_a ⊗ T_{n-a}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::exactmat::{IntMatrix, MatrixError};
use crate::seifert::{symmetrize, KnotDims, SeifertError, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinError {
    #[error(transparent)]
    Dims(#[from] SeifertError),
    #[error("invalid ranks: {0}")]
    BadRanks(String),
    #[error("ShapeMismatch: {what} should be {expected:?}, got {got:?}")]
    ShapeMismatch {
        what: String,
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("unexpected pairing index {index} for {what}")]
    UnexpectedIndex { what: &'static str, index: u32 },
    #[error("NotSymmetric: middle intersection form must be symmetric when m ≡ 0 mod 4")]
    NotSymmetric,
    #[error("NotSkew: middle intersection form must be skew-symmetric when m ≡ 2 mod 4")]
    NotSkew,
    #[error("NotUnimodular: middle intersection form has determinant {0}")]
    NotUnimodular(BigInt),
    #[error("NonzeroSignature: intersection form of M has signature {0}, expected 0")]
    NonzeroSignature(i64),
    #[error("NotUnimodularResult: det(A + ε A') = {0} for the assembled matrix")]
    NotUnimodularResult(BigInt),
    #[error("KEven: k = {0} is even, there is no middle block")]
    KEven(u32),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Validated algebraic data of a frame-spin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinInput {
    dims: KnotDims,
    v_ranks: Vec<usize>,
    m_ranks: Vec<usize>,
    linking: BTreeMap<u32, IntMatrix>,
    intersection: BTreeMap<u32, IntMatrix>,
}

/// Fills in a missing or empty pairing whose expected shape has no entries,
/// and checks the shape otherwise.
fn shaped(
    what: String,
    given: Option<IntMatrix>,
    rows: usize,
    cols: usize,
) -> Result<IntMatrix, SpinError> {
    match given {
        Some(m) if m.shape() == (rows, cols) => Ok(m),
        Some(m) if m.is_empty() && rows * cols == 0 => Ok(IntMatrix::zeros(rows, cols)),
        None if rows * cols == 0 => Ok(IntMatrix::zeros(rows, cols)),
        other => Err(SpinError::ShapeMismatch {
            what,
            expected: (rows, cols),
            got: other.map_or((0, 0), |m| m.shape()),
        }),
    }
}

impl SpinInput {
    /// Validates ranks, duality, pairing shapes and the middle intersection
    /// form of `M`.
    ///
    /// `linking` is keyed by `a ∈ 1..=k-2` and `intersection` by
    /// `b ∈ 0..=m`; entries whose expected shape is empty may be omitted.
    pub fn new(
        dims: KnotDims,
        v_ranks: Vec<usize>,
        m_ranks: Vec<usize>,
        mut linking: BTreeMap<u32, IntMatrix>,
        mut intersection: BTreeMap<u32, IntMatrix>,
    ) -> Result<Self, SpinError> {
        let (k, m) = (dims.k(), dims.m());
        if v_ranks.len() != k as usize {
            return Err(SpinError::BadRanks(format!(
                "v_ranks needs k = {k} entries (a = 0..k-1), got {}",
                v_ranks.len()
            )));
        }
        if v_ranks[0] != 1 {
            return Err(SpinError::BadRanks("rank F_0(V) must be 1".into()));
        }
        if v_ranks[k as usize - 1] != 0 {
            return Err(SpinError::BadRanks("rank F_{k-1}(V) must be 0".into()));
        }
        for a in 1..k as usize - 1 {
            let c = k as usize - 1 - a;
            if v_ranks[a] != v_ranks[c] {
                return Err(SpinError::BadRanks(format!(
                    "duality on V needs rank F_{a}(V) = rank F_{c}(V), got {} and {}",
                    v_ranks[a], v_ranks[c]
                )));
            }
        }
        if m_ranks.len() != m as usize + 1 {
            return Err(SpinError::BadRanks(format!(
                "m_ranks needs m + 1 = {} entries (b = 0..m), got {}",
                m + 1,
                m_ranks.len()
            )));
        }
        for b in 0..=m as usize {
            if m_ranks[b] != m_ranks[m as usize - b] {
                return Err(SpinError::BadRanks(format!(
                    "duality on M needs rank F_{b}(M) = rank F_{}(M), got {} and {}",
                    m as usize - b,
                    m_ranks[b],
                    m_ranks[m as usize - b]
                )));
            }
        }

        let mut lk = BTreeMap::new();
        for a in 1..k - 1 {
            let c = (k - 1 - a) as usize;
            let given = linking.remove(&a);
            let mat = shaped(
                format!("linking[{a}]"),
                given,
                v_ranks[a as usize],
                v_ranks[c],
            )?;
            lk.insert(a, mat);
        }
        if let Some(&index) = linking.keys().next() {
            return Err(SpinError::UnexpectedIndex {
                what: "linking",
                index,
            });
        }
        let mut it = BTreeMap::new();
        for b in 0..=m {
            let given = intersection.remove(&b);
            let mat = shaped(
                format!("intersection[{b}]"),
                given,
                m_ranks[b as usize],
                m_ranks[(m - b) as usize],
            )?;
            it.insert(b, mat);
        }
        if let Some(&index) = intersection.keys().next() {
            return Err(SpinError::UnexpectedIndex {
                what: "intersection",
                index,
            });
        }

        let input = SpinInput {
            dims,
            v_ranks,
            m_ranks,
            linking: lk,
            intersection: it,
        };
        if let Some(tau) = input.tau() {
            check_middle_form(tau, m)?;
        }
        Ok(input)
    }

    pub fn dims(&self) -> KnotDims {
        self.dims
    }

    pub fn v_ranks(&self) -> &[usize] {
        &self.v_ranks
    }

    pub fn m_ranks(&self) -> &[usize] {
        &self.m_ranks
    }

    pub fn linking(&self) -> &BTreeMap<u32, IntMatrix> {
        &self.linking
    }

    pub fn intersection(&self) -> &BTreeMap<u32, IntMatrix> {
        &self.intersection
    }

    /// `rank F_b(M)`, zero outside `0..=m`.
    pub fn m_rank(&self, b: i64) -> usize {
        usize::try_from(b)
            .ok()
            .and_then(|b| self.m_ranks.get(b).copied())
            .unwrap_or(0)
    }

    /// The middle intersection form `τ = T_{m/2}` (m even).
    pub fn tau(&self) -> Option<&IntMatrix> {
        let m = self.dims.m();
        m.is_multiple_of(2).then(|| &self.intersection[&(m / 2)])
    }

    /// The Seifert matrix `Λ_{(k-1)/2}` of the base knot (k odd).
    pub fn base_seifert(&self) -> Option<&IntMatrix> {
        let k = self.dims.k();
        (k % 2 == 1).then(|| &self.linking[&((k - 1) / 2)])
    }

    pub fn layout(&self) -> BlockLayout {
        BlockLayout::for_input(self)
    }
}

fn check_middle_form(tau: &IntMatrix, m: u32) -> Result<(), SpinError> {
    if m.is_multiple_of(4) {
        if !tau.is_symmetric() {
            return Err(SpinError::NotSymmetric);
        }
    } else if !tau.is_skew_symmetric() {
        return Err(SpinError::NotSkew);
    }
    let det = tau.determinant()?;
    if !det.abs().is_one() {
        return Err(SpinError::NotUnimodular(det));
    }
    if m.is_multiple_of(4) {
        let sig = tau.signature()?;
        if sig != 0 {
            return Err(SpinError::NonzeroSignature(sig));
        }
    }
    Ok(())
}

/// One summand `F_{a,b} = F_a(V) ⊗ F_b(M)` with `b = n - a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summand {
    pub a: u32,
    pub b: i64,
    pub v_rank: usize,
    pub m_rank: usize,
    pub offset: usize,
    pub size: usize,
}

/// Basis layout of the spun Seifert surface: summands for `a = 1..=k-2` in
/// increasing `a`, each of size `r_a · ρ_{n-a}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    dims: KnotDims,
    summands: Vec<Summand>,
}

impl BlockLayout {
    fn for_input(input: &SpinInput) -> Self {
        let dims = input.dims;
        let n = dims.n() as i64;
        let mut offset = 0;
        let summands = (1..dims.k() - 1)
            .map(|a| {
                let b = n - a as i64;
                let v_rank = input.v_ranks[a as usize];
                let m_rank = input.m_rank(b);
                let s = Summand {
                    a,
                    b,
                    v_rank,
                    m_rank,
                    offset,
                    size: v_rank * m_rank,
                };
                offset += s.size;
                s
            })
            .collect();
        BlockLayout { dims, summands }
    }

    pub fn dims(&self) -> KnotDims {
        self.dims
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn summand(&self, a: u32) -> Option<&Summand> {
        self.summands.iter().find(|s| s.a == a)
    }

    pub fn total(&self) -> usize {
        self.summands.iter().map(|s| s.size).sum()
    }

    /// Partner index `c = k - 1 - a`.
    pub fn partner(&self, a: u32) -> u32 {
        self.dims.k() - 1 - a
    }

    /// The middle summand `a = (k-1)/2`, present only for odd `k`.
    pub fn middle(&self) -> Option<&Summand> {
        let k = self.dims.k();
        if k % 2 == 1 {
            self.summand((k - 1) / 2)
        } else {
            None
        }
    }

    /// `(μ, ν)`: total size of the summands below the middle, and the size of
    /// the middle summand. For even `k`, `ν = 0`.
    pub fn mu_nu(&self) -> (usize, usize) {
        let k = self.dims.k();
        let mu = self
            .summands
            .iter()
            .filter(|s| 2 * s.a < k - 1)
            .map(|s| s.size)
            .sum();
        (mu, self.middle().map_or(0, |s| s.size))
    }

    /// Sub-block of `matrix` with rows in summand `a` and columns in
    /// summand `c`.
    pub fn block(&self, matrix: &IntMatrix, a: u32, c: u32) -> IntMatrix {
        let r = self.summand(a).expect("row summand");
        let s = self.summand(c).expect("column summand");
        matrix.block(r.offset, s.offset, r.size, s.size)
    }

    /// Sign `(-1)^{(m-b)(k-c)}` of the block with row summand `a`, where
    /// `b = n - a` and `c = k - 1 - a`.
    pub fn block_sign(&self, a: u32) -> Sign {
        let (k, m, n) = (
            self.dims.k() as i64,
            self.dims.m() as i64,
            self.dims.n() as i64,
        );
        let b = n - a as i64;
        let c = k - 1 - a as i64;
        Sign::pow(((m - b) * (k - c)).rem_euclid(2) as u64)
    }
}

impl fmt::Display for BlockLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "k = {}, m = {}, n = {}, total size {}",
            self.dims.k(),
            self.dims.m(),
            self.dims.n(),
            self.total()
        )?;
        for s in &self.summands {
            let c = self.partner(s.a);
            let pair_size = self.summand(c).map_or(0, |p| p.size);
            write!(
                f,
                "  F_{{{},{}}}: rank {} x {} = {:<3} offset {:<3} L_{} -> column summand {} ({}x{}, sign {})",
                s.a,
                s.b,
                s.v_rank,
                s.m_rank,
                s.size,
                s.offset,
                s.a,
                c,
                s.size,
                pair_size,
                self.block_sign(s.a)
            )?;
            if s.size == 0 {
                f.write_str(" [empty]")?;
            }
            if 2 * s.a == self.dims.k() - 1 {
                f.write_str(" [middle]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Assembles the Seifert matrix of the spun knot.
///
/// Block `(a, c)` is `(-1)^{(m-b)(k-c)} Λ_a ⊗ T_b` when `a + c = k - 1`
/// (with `b = n - a`) and zero otherwise. The result is checked to satisfy
/// `det(A + (-1)^n A') = ±1`.
pub fn assemble(input: &SpinInput) -> Result<(IntMatrix, BlockLayout), SpinError> {
    let layout = input.layout();
    let total = layout.total();
    let mut out = IntMatrix::zeros(total, total);
    for s in layout.summands() {
        let c = layout.partner(s.a);
        let col = layout.summand(c).expect("partner summand exists");
        if s.size == 0 || col.size == 0 {
            continue;
        }
        let lambda = &input.linking[&s.a];
        let t = &input.intersection[&(u32::try_from(s.b).expect("nonempty summand has b ≥ 0"))];
        let block = layout.block_sign(s.a).apply(&lambda.tensor(t));
        if block.shape() != (s.size, col.size) {
            return Err(SpinError::ShapeMismatch {
                what: format!("block L_{}", s.a),
                expected: (s.size, col.size),
                got: block.shape(),
            });
        }
        for i in 0..s.size {
            for j in 0..col.size {
                out.set(s.offset + i, col.offset + j, block.get(i, j).clone());
            }
        }
    }
    let det = symmetrize(&out, layout.dims().n())?.determinant()?;
    if !det.abs().is_one() {
        return Err(SpinError::NotUnimodularResult(det));
    }
    Ok((out, layout))
}

/// `(-1)^{(mk+m)/4} Λ_{(k-1)/2} ⊗ T_{m/2}`, computed directly rather than
/// through the general block rule.
pub fn middle_block(input: &SpinInput) -> Result<IntMatrix, SpinError> {
    let (k, m) = (input.dims.k(), input.dims.m());
    if k % 2 == 0 {
        return Err(SpinError::KEven(k));
    }
    let a = input.base_seifert().expect("k odd");
    let tau = input.tau().expect("k odd forces m even");
    let sign = Sign::pow(((m * k + m) / 4).into());
    Ok(sign.apply(&a.tensor(tau)))
}
