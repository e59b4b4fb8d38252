//! Null-cobordance certificates in the matrix cobordism group `G_ε`.
//!
//! A square integer matrix `N` is null-cobordant when some integrally
//! invertible `P` makes the upper-left half-size block of `P N P'` vanish.
//! A [`SliceCertificate`] certifies `[target] = 0` by exhibiting such a `P`
//! for `target ⊞ stabilizer`, where the stabilizer is itself certified
//! null-cobordant by a second witness. Checking a certificate needs nothing
//! but exact matrix multiplication and determinants; see [`verify`].
//!
//! The constructive side follows the structure of a frame-spun Seifert
//! matrix:
//!
//! * block anti-diagonal matrices with no middle block are half-zero after a
//!   summand permutation ([`certify_antidiagonal`]);
//! * otherwise a permutation `J` splits off the middle block
//!   ([`reduce_to_middle`]), which is `±A ⊗ τ`;
//! * for skew `τ`, a symplectic basis turns `A ⊗ τ` into
//!   `[[0, ⊞A], [-⊞A, 0]]` ([`certify_tensor_skew`]);
//! * for symmetric `τ` of signature 0, stabilizing by `A ⊞ -A` and
//!   diagonalizing `τ ⊞ 1 ⊞ -1` turns it into `B ⊞ -B`, which
//!   `[[I, I], [I, 0]]` makes half-zero ([`certify_tensor_symmetric`]).

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmat::{IntMatrix, MatrixError};
use crate::framespin::{assemble, BlockLayout, SpinError, SpinInput};
use crate::quadform::{diagonalize_odd_indefinite, symplectic_basis, FormError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CobordismError {
    #[error(transparent)]
    Spin(#[from] SpinError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("KEven: k = {0} is even, there is no middle block to reduce to")]
    KEven(u32),
    #[error("LayoutMismatch: layout describes size {layout}, matrix is {rows}x{cols}")]
    LayoutMismatch {
        layout: usize,
        rows: usize,
        cols: usize,
    },
    #[error("MiddleBlockNonEmpty: middle summand has size {0}; use the middle-block reduction")]
    MiddleBlockNonEmpty(usize),
    #[error("NotSymmetric: τ must be symmetric")]
    NotSymmetric,
    #[error("NotUnimodular: τ has determinant {0}")]
    NotUnimodular(num_bigint::BigInt),
    #[error("NonzeroSignature: τ has signature {0}, expected 0")]
    NonzeroSignature(i64),
    #[error("internal error: middle block of the assembled matrix differs from ±Λ ⊗ τ")]
    MiddleBlockMismatch,
    #[error("internal error: produced certificate failed verification: {0}")]
    Rejected(Violation),
}

/// The first certificate invariant found to fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("target is not square ({0}x{1})")]
    TargetNotSquare(usize, usize),
    #[error("stabilizer is not square ({0}x{1})")]
    StabilizerNotSquare(usize, usize),
    #[error("target ⊞ stabilizer has odd size {0}, cannot split in half")]
    OddSize(usize),
    #[error("half is {half}, expected {expected}")]
    WrongHalf { half: usize, expected: usize },
    #[error("p is {rows}x{cols}, expected {expected}x{expected}")]
    WitnessShape {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("det(p) ≠ ±1 (det = {0})")]
    PNotUnimodular(num_bigint::BigInt),
    #[error("upper-left {half}x{half} block of p·X·p' is nonzero at ({row},{col})")]
    NonzeroBlock { half: usize, row: usize, col: usize },
    #[error("stabilizer has odd size {0}")]
    OddStabilizer(usize),
    #[error("stabilizer witness is {rows}x{cols}, expected {expected}x{expected}")]
    StabilizerWitnessShape {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("det(stabilizer witness) ≠ ±1 (det = {0})")]
    StabilizerWitnessNotUnimodular(num_bigint::BigInt),
    #[error(
        "upper-left {half}x{half} block of the stabilizer congruence is nonzero at ({row},{col})"
    )]
    NonzeroStabilizerBlock { half: usize, row: usize, col: usize },
}

/// Evidence that `[target] = 0` in `G_ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceCertificate {
    pub target: IntMatrix,
    /// Block sum of pairs `X ⊞ -X`; `0×0` when no stabilization was needed.
    pub stabilizer: IntMatrix,
    /// Makes the stabilizer's upper-left half block vanish.
    pub stabilizer_witness: IntMatrix,
    /// Makes the upper-left half block of `target ⊞ stabilizer` vanish.
    pub p: IntMatrix,
    pub half: usize,
}

impl SliceCertificate {
    /// Certificate whose target is already half-zero in its given basis.
    pub fn trivial(target: IntMatrix) -> Self {
        let n = target.rows();
        SliceCertificate {
            target,
            stabilizer: IntMatrix::empty(),
            stabilizer_witness: IntMatrix::empty(),
            p: IntMatrix::identity(n),
            half: n / 2,
        }
    }

    /// Size of `target ⊞ stabilizer`.
    pub fn total_size(&self) -> usize {
        self.target.rows() + self.stabilizer.rows()
    }

    pub fn stabilizer_rank(&self) -> usize {
        self.stabilizer.rows()
    }

    /// Bit length of the largest witness entry.
    pub fn witness_bits(&self) -> u64 {
        self.p.max_bits().max(self.stabilizer_witness.max_bits())
    }

    pub fn verify(&self) -> Result<(), Violation> {
        verify(self)
    }

    pub fn is_valid(&self) -> bool {
        verify(self).is_ok()
    }
}

impl fmt::Display for SliceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "target {}x{}, stabilizer rank {}, half {}, witness bit-size {}",
            self.target.rows(),
            self.target.cols(),
            self.stabilizer_rank(),
            self.half,
            self.witness_bits()
        )
    }
}

fn first_nonzero(m: &IntMatrix, half: usize) -> Option<(usize, usize)> {
    (0..half)
        .flat_map(|i| (0..half).map(move |j| (i, j)))
        .find(|&(i, j)| !m.get(i, j).is_zero())
}

/// Checks every certificate invariant by exact arithmetic. Uses only
/// [`IntMatrix`] operations, never the code that produced the certificate.
pub fn verify(cert: &SliceCertificate) -> Result<(), Violation> {
    let t = &cert.target;
    let s = &cert.stabilizer;
    if !t.is_square() {
        return Err(Violation::TargetNotSquare(t.rows(), t.cols()));
    }
    if !s.is_square() {
        return Err(Violation::StabilizerNotSquare(s.rows(), s.cols()));
    }
    let total = t.rows() + s.rows();
    if total % 2 == 1 {
        return Err(Violation::OddSize(total));
    }
    if cert.half != total / 2 {
        return Err(Violation::WrongHalf {
            half: cert.half,
            expected: total / 2,
        });
    }
    if cert.p.shape() != (total, total) {
        return Err(Violation::WitnessShape {
            rows: cert.p.rows(),
            cols: cert.p.cols(),
            expected: total,
        });
    }
    let det = cert.p.determinant().expect("square");
    if !det.abs().is_one() {
        return Err(Violation::PNotUnimodular(det));
    }
    let x = t.block_sum(s).expect("both square");
    let y = x.congruence(&cert.p).expect("shapes checked");
    if let Some((row, col)) = first_nonzero(&y, cert.half) {
        return Err(Violation::NonzeroBlock {
            half: cert.half,
            row,
            col,
        });
    }

    let sn = s.rows();
    if sn % 2 == 1 {
        return Err(Violation::OddStabilizer(sn));
    }
    let w = &cert.stabilizer_witness;
    if w.shape() != (sn, sn) {
        return Err(Violation::StabilizerWitnessShape {
            rows: w.rows(),
            cols: w.cols(),
            expected: sn,
        });
    }
    let det = w.determinant().expect("square");
    if !det.abs().is_one() {
        return Err(Violation::StabilizerWitnessNotUnimodular(det));
    }
    let z = s.congruence(w).expect("shapes checked");
    if let Some((row, col)) = first_nonzero(&z, sn / 2) {
        return Err(Violation::NonzeroStabilizerBlock {
            half: sn / 2,
            row,
            col,
        });
    }
    Ok(())
}

/// `[[I, I], [I, 0]]` with `r × r` blocks.
pub fn pair_sum_witness(r: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * r, 2 * r);
    for i in 0..r {
        j.set(i, i, One::one());
        j.set(i, r + i, One::one());
        j.set(r + i, i, One::one());
    }
    j
}

/// `B ⊞ -B` is null-cobordant: conjugating by `[[I, I], [I, 0]]` gives
/// `[[0, B], [B, B]]`.
pub fn certify_pair_sum(b: &IntMatrix) -> Result<SliceCertificate, CobordismError> {
    let target = b.block_sum(&b.neg())?;
    let cert = SliceCertificate {
        half: b.rows(),
        p: pair_sum_witness(b.rows()),
        target,
        stabilizer: IntMatrix::empty(),
        stabilizer_witness: IntMatrix::empty(),
    };
    checked(cert)
}

fn checked(cert: SliceCertificate) -> Result<SliceCertificate, CobordismError> {
    verify(&cert).map_err(CobordismError::Rejected)?;
    Ok(cert)
}

fn check_layout(a_sigma: &IntMatrix, layout: &BlockLayout) -> Result<(), CobordismError> {
    if a_sigma.shape() != (layout.total(), layout.total()) {
        return Err(CobordismError::LayoutMismatch {
            layout: layout.total(),
            rows: a_sigma.rows(),
            cols: a_sigma.cols(),
        });
    }
    Ok(())
}

/// The permutation matrix `J = [[0, I_ν, 0], [I_μ, 0, 0], [0, 0, I_μ]]` that
/// moves the middle summand to the front.
pub fn middle_first_permutation(mu: usize, nu: usize) -> IntMatrix {
    let order: Vec<usize> = (mu..mu + nu)
        .chain(0..mu)
        .chain(mu + nu..2 * mu + nu)
        .collect();
    IntMatrix::permutation(&order)
}

/// Conjugates `a_sigma` by `J` so that the middle block `L_{(k-1)/2}` comes
/// first and the rest forms `[[0, C], [B, 0]]`. Returns `(J, J A J')`.
pub fn reduce_to_middle(
    a_sigma: &IntMatrix,
    layout: &BlockLayout,
) -> Result<(IntMatrix, IntMatrix), CobordismError> {
    let k = layout.dims().k();
    if k.is_multiple_of(2) {
        return Err(CobordismError::KEven(k));
    }
    check_layout(a_sigma, layout)?;
    let (mu, nu) = layout.mu_nu();
    let j = middle_first_permutation(mu, nu);
    let reduced = a_sigma.congruence(&j)?;
    Ok((j, reduced))
}

/// Summand permutation putting every `a < (k-1)/2` first. The vanishing rule
/// makes the leading half-size block zero when the middle summand is empty.
pub fn certify_antidiagonal(
    a_sigma: &IntMatrix,
    layout: &BlockLayout,
) -> Result<SliceCertificate, CobordismError> {
    check_layout(a_sigma, layout)?;
    let (mu, nu) = layout.mu_nu();
    if nu > 0 {
        return Err(CobordismError::MiddleBlockNonEmpty(nu));
    }
    let k = layout.dims().k();
    let mut low = Vec::new();
    let mut high = Vec::new();
    for s in layout.summands() {
        let range = s.offset..s.offset + s.size;
        if 2 * s.a < k - 1 {
            low.extend(range);
        } else {
            high.extend(range);
        }
    }
    debug_assert_eq!(low.len(), mu);
    let order: Vec<usize> = low.into_iter().chain(high).collect();
    checked(SliceCertificate {
        target: a_sigma.clone(),
        stabilizer: IntMatrix::empty(),
        stabilizer_witness: IntMatrix::empty(),
        p: IntMatrix::permutation(&order),
        half: mu,
    })
}

/// Permutation taking the Kronecker basis of `A ⊗ T` (index `i·t + j`, `A`
/// slowest) to that of `T ⊗ A` (index `j·r + i`).
pub fn kronecker_swap(r: usize, t: usize) -> IntMatrix {
    let order: Vec<usize> = (0..t)
        .flat_map(|j| (0..r).map(move |i| i * t + j))
        .collect();
    IntMatrix::permutation(&order)
}

/// Certifies `a ⊗ tau` for skew-symmetric unimodular `tau`.
///
/// With `q` a symplectic basis of `tau`, `(I ⊗ q)` brings the target to
/// `a ⊗ [[0, I], [-I, 0]]`, and swapping the Kronecker factors gives
/// `[[0, ⊞a], [-⊞a, 0]]`.
pub fn certify_tensor_skew(
    a: &IntMatrix,
    tau: &IntMatrix,
) -> Result<SliceCertificate, CobordismError> {
    let sym = symplectic_basis(tau)?;
    let r = a.rows();
    let t = tau.rows();
    let target = a.tensor(tau);
    let p = kronecker_swap(r, t).multiply(&IntMatrix::identity(r).tensor(sym.q()))?;
    checked(SliceCertificate {
        target,
        stabilizer: IntMatrix::empty(),
        stabilizer_witness: IntMatrix::empty(),
        p,
        half: r * t / 2,
    })
}

/// Certifies `a ⊗ tau` for symmetric unimodular `tau` of signature 0.
///
/// The stabilizer is `a ⊞ -a`. Reordering `(a ⊗ τ) ⊞ a ⊞ -a` as
/// `(τ ⊞ 1 ⊞ -1) ⊗ a`, diagonalizing `τ ⊞ 1 ⊞ -1` to `diag(1^u, -1^u)` and
/// applying `[[I, I], [I, 0]]` to the resulting `B ⊞ -B` (with `B = ⊞^u a`)
/// leaves a zero upper-left half.
pub fn certify_tensor_symmetric(
    a: &IntMatrix,
    tau: &IntMatrix,
) -> Result<SliceCertificate, CobordismError> {
    if !tau.is_symmetric() {
        return Err(CobordismError::NotSymmetric);
    }
    let det = tau.determinant()?;
    if !det.abs().is_one() {
        return Err(CobordismError::NotUnimodular(det));
    }
    let sig = tau.signature()?;
    if sig != 0 {
        return Err(CobordismError::NonzeroSignature(sig));
    }
    let r = a.rows();
    let t = tau.rows();
    let stabilized = IntMatrix::block_sum_all([tau, &IntMatrix::diagonal(&[1, -1])])?;
    let diag = diagonalize_odd_indefinite(&stabilized)?;
    let u = (t + 2) / 2;

    // (a ⊗ τ) ⊞ a ⊞ -a  →  (τ ⊞ 1 ⊞ -1) ⊗ a
    let reorder = kronecker_swap(r, t).block_sum(&IntMatrix::identity(2 * r))?;
    let rebase = diag.q().tensor(&IntMatrix::identity(r));
    let p = pair_sum_witness(u * r)
        .multiply(&rebase)?
        .multiply(&reorder)?;

    let pair = certify_pair_sum(a)?;
    checked(SliceCertificate {
        target: a.tensor(tau),
        stabilizer: pair.target,
        stabilizer_witness: pair.p,
        p,
        half: u * r,
    })
}

/// Certifies that the assembled Seifert matrix of a frame-spun knot is
/// null-cobordant.
///
/// Even `k` or an empty middle summand: summand permutation. Odd `k`: the
/// middle block `±Λ ⊗ τ` is certified by the skew (`m ≡ 2 mod 4`) or
/// symmetric (`m ≡ 0 mod 4`) construction, and that witness is combined with
/// `J` and the half-zero layout of the outer blocks into one `p`.
pub fn certify_frame_spin(input: &SpinInput) -> Result<SliceCertificate, CobordismError> {
    let (a_sigma, layout) = assemble(input)?;
    let (mu, nu) = layout.mu_nu();
    if nu == 0 {
        return certify_antidiagonal(&a_sigma, &layout);
    }
    let m = layout.dims().m();
    let (j, reduced) = reduce_to_middle(&a_sigma, &layout)?;
    let middle = reduced.block(0, 0, nu, nu);
    let sign = layout.block_sign((layout.dims().k() - 1) / 2);
    let lambda = sign.apply(input.base_seifert().expect("k odd"));
    let tau = input.tau().expect("k odd forces m even");
    let mid = if m % 4 == 2 {
        certify_tensor_skew(&lambda, tau)?
    } else {
        certify_tensor_symmetric(&lambda, tau)?
    };
    if mid.target != middle {
        return Err(CobordismError::MiddleBlockMismatch);
    }

    let sigma = mid.stabilizer.rows();
    let h = mid.half;
    // A ⊞ S  --J ⊞ I-->  L ⊞ R ⊞ S  -->  (L ⊞ S) ⊞ R
    let step1 = j.block_sum(&IntMatrix::identity(sigma))?;
    let order2: Vec<usize> = (0..nu)
        .chain(nu + 2 * mu..nu + 2 * mu + sigma)
        .chain(nu..nu + 2 * mu)
        .collect();
    let step2 = IntMatrix::permutation(&order2);
    // (L ⊞ S) ⊞ R  -->  M' ⊞ R with M' half-zero
    let step3 = mid.p.block_sum(&IntMatrix::identity(2 * mu))?;
    // interleave the zero halves of M' and R = [[0, C], [B, 0]]
    let ms = nu + sigma;
    let order4: Vec<usize> = (0..h)
        .chain(ms..ms + mu)
        .chain(h..ms)
        .chain(ms + mu..ms + 2 * mu)
        .collect();
    let step4 = IntMatrix::permutation(&order4);
    let p = step4.multiply(&step3)?.multiply(&step2)?.multiply(&step1)?;
    checked(SliceCertificate {
        target: a_sigma,
        stabilizer: mid.stabilizer,
        stabilizer_witness: mid.stabilizer_witness,
        p,
        half: h + mu,
    })
}
