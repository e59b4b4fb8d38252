//! Constructive normal forms for unimodular integral bilinear forms.
//!
//! Two reductions are provided, each returning an explicit integral change of
//! basis `q` (rows are the new basis vectors in the old coordinates) with
//! `q · t · q' = normal_form`:
//!
//! * [`symplectic_basis`]: a skew-symmetric unimodular form is brought to
//!   `[[0, I], [-I, 0]]` by splitting off hyperbolic pairs.
//! * [`diagonalize_odd_indefinite`]: an odd indefinite unimodular symmetric
//!   form is brought to `diag(1, …, 1, -1, …, -1)` by repeatedly splitting off
//!   a vector of norm ±1 found by bounded enumeration.
//!
//! Every witness is re-checked by exact multiplication before it is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmat::{IntMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("form must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("NotSkew: form is not skew-symmetric")]
    NotSkew,
    #[error("NotSymmetric: form is not symmetric")]
    NotSymmetric,
    #[error("NotUnimodular: determinant is {0}, expected ±1")]
    NotUnimodular(BigInt),
    #[error("OddRank: skew-symmetric unimodular forms have even rank, got {0}")]
    OddRank(usize),
    #[error("PreconditionFailed: {0}")]
    PreconditionFailed(String),
    #[error("SearchBudgetExceeded: no admissible vector of norm ±1 within max-norm radius {0}")]
    SearchBudgetExceeded(u32),
    #[error("witness check failed: {0}")]
    WitnessMismatch(String),
}

impl From<MatrixError> for FormError {
    fn from(e: MatrixError) -> Self {
        FormError::WitnessMismatch(e.to_string())
    }
}

/// An integrally invertible change of basis together with the form it
/// produces. Construction re-verifies `congruence(q, input) = normal_form`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormWitness {
    q: IntMatrix,
    normal_form: IntMatrix,
}

impl FormWitness {
    pub fn new(q: IntMatrix, input: &IntMatrix, normal_form: IntMatrix) -> Result<Self, FormError> {
        if !q.is_integrally_invertible() {
            return Err(FormError::WitnessMismatch(
                "change of basis is not integrally invertible".into(),
            ));
        }
        if input.congruence(&q)? != normal_form {
            return Err(FormError::WitnessMismatch(
                "q · t · q' differs from the claimed normal form".into(),
            ));
        }
        Ok(FormWitness { q, normal_form })
    }

    pub fn q(&self) -> &IntMatrix {
        &self.q
    }

    pub fn normal_form(&self) -> &IntMatrix {
        &self.normal_form
    }

    pub fn into_parts(self) -> (IntMatrix, IntMatrix) {
        (self.q, self.normal_form)
    }

    /// Bit length of the largest entry of `q`.
    pub fn bit_size(&self) -> u64 {
        self.q.max_bits()
    }
}

/// Bounds for the norm-±1 vector enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitSearch {
    /// Largest max-norm radius tried before giving up.
    pub max_radius: u32,
}

impl Default for UnitSearch {
    fn default() -> Self {
        UnitSearch { max_radius: 10 }
    }
}

/// `[[0, I_s], [-I_s, 0]]`.
pub fn standard_symplectic(s: usize) -> IntMatrix {
    let n = 2 * s;
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..s {
        m.set(i, s + i, BigInt::one());
        m.set(s + i, i, -BigInt::one());
    }
    m
}

/// `diag(1^u, (-1)^v)`.
pub fn standard_diagonal(u: usize, v: usize) -> IntMatrix {
    let entries: Vec<i64> = std::iter::repeat_n(1, u)
        .chain(std::iter::repeat_n(-1, v))
        .collect();
    IntMatrix::diagonal(&entries)
}

fn pairing(t: &IntMatrix, x: &[BigInt], y: &[BigInt]) -> BigInt {
    let n = x.len();
    let mut acc = BigInt::zero();
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        let mut row = BigInt::zero();
        for j in 0..n {
            if !y[j].is_zero() {
                row += t.get(i, j) * &y[j];
            }
        }
        acc += &x[i] * row;
    }
    acc
}

fn axpy(y: &mut [BigInt], a: &BigInt, x: &[BigInt]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

fn unit_rows(n: usize) -> Vec<Vec<BigInt>> {
    IntMatrix::identity(n).to_rows()
}

fn check_square(t: &IntMatrix) -> Result<usize, FormError> {
    if t.is_square() {
        Ok(t.rows())
    } else {
        Err(FormError::NotSquare(t.rows(), t.cols()))
    }
}

fn check_unimodular(t: &IntMatrix) -> Result<(), FormError> {
    let det = t.determinant()?;
    if det.abs().is_one() {
        Ok(())
    } else {
        Err(FormError::NotUnimodular(det))
    }
}

/// Symplectic basis for a skew-symmetric unimodular form.
///
/// Repeatedly takes the first remaining vector `e`, combines the others by an
/// extended-gcd sweep until exactly one of them, `f`, pairs with `e` (to ±1),
/// splits off the hyperbolic pair `(e, f)` and projects the rest onto its
/// orthogonal complement. The pairs are finally laid out as
/// `e_1 … e_s f_1 … f_s`.
pub fn symplectic_basis(t: &IntMatrix) -> Result<FormWitness, FormError> {
    let n = check_square(t)?;
    if !t.is_skew_symmetric() {
        return Err(FormError::NotSkew);
    }
    if n % 2 == 1 {
        return Err(FormError::OddRank(n));
    }
    check_unimodular(t)?;

    let mut rest = unit_rows(n);
    let mut es = Vec::with_capacity(n / 2);
    let mut fs = Vec::with_capacity(n / 2);
    while !rest.is_empty() {
        let e = rest.remove(0);
        let mut vals: Vec<BigInt> = rest.iter().map(|x| pairing(t, &e, x)).collect();
        // Euclid on the pairings ⟨e, x_j⟩ via unimodular row operations.
        loop {
            let nonzero: Vec<usize> = (0..vals.len()).filter(|&j| !vals[j].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let pivot = *nonzero
                .iter()
                .min_by(|&&a, &&b| vals[a].abs().cmp(&vals[b].abs()))
                .expect("nonempty");
            for &j in &nonzero {
                if j == pivot {
                    continue;
                }
                let q = &vals[j] / &vals[pivot];
                let pv = vals[pivot].clone();
                vals[j] -= &q * &pv;
                let src = rest[pivot].clone();
                axpy(&mut rest[j], &-q, &src);
            }
        }
        let Some(fi) = vals.iter().position(|v| !v.is_zero()) else {
            return Err(FormError::NotUnimodular(BigInt::zero()));
        };
        if !vals[fi].abs().is_one() {
            return Err(FormError::NotUnimodular(vals[fi].clone()));
        }
        let mut f = rest.remove(fi);
        if vals[fi].is_negative() {
            f.iter_mut().for_each(|x| *x = -&*x);
        }
        // x ↦ x − ⟨x,f⟩ e + ⟨x,e⟩ f kills both pairings.
        for x in rest.iter_mut() {
            let xf = pairing(t, x, &f);
            let xe = pairing(t, x, &e);
            axpy(x, &-xf, &e);
            axpy(x, &xe, &f);
        }
        es.push(e);
        fs.push(f);
    }
    let s = es.len();
    let q = IntMatrix::from_big_rows(es.into_iter().chain(fs).collect())?;
    let q = if n == 0 { IntMatrix::empty() } else { q };
    FormWitness::new(q, t, standard_symplectic(s))
}

fn is_odd_form(t: &IntMatrix) -> bool {
    (0..t.rows()).any(|i| t.get(i, i).is_odd())
}

/// Checks shared by the symmetric reductions; returns the signature.
fn check_odd_indefinite(t: &IntMatrix) -> Result<i64, FormError> {
    let n = check_square(t)?;
    if !t.is_symmetric() {
        return Err(FormError::NotSymmetric);
    }
    let det = t.determinant()?;
    if !det.abs().is_one() {
        return Err(FormError::PreconditionFailed(format!(
            "form is not unimodular (det {det})"
        )));
    }
    let sig = t.signature()?;
    if n >= 2 {
        if !is_odd_form(t) {
            return Err(FormError::PreconditionFailed(
                "form is even (all diagonal entries even)".into(),
            ));
        }
        if sig.unsigned_abs() as usize == n {
            return Err(FormError::PreconditionFailed(format!(
                "form is definite (rank {n}, signature {sig})"
            )));
        }
    }
    Ok(sig)
}

/// Enumerates nonzero integer vectors up to sign in the order
/// (max-norm, support size, support indices, values), where values are
/// compared in the order `1, -1, 2, -2, …` and the first nonzero coordinate
/// is positive.
struct CandidateOrder {
    dim: usize,
    max_radius: u32,
}

impl CandidateOrder {
    /// Calls `visit` on each candidate until it returns `Some`.
    fn find<T>(&self, mut visit: impl FnMut(&[i64]) -> Option<T>) -> Option<T> {
        let mut v = vec![0i64; self.dim];
        for radius in 1..=self.max_radius as i64 {
            for support in 1..=self.dim {
                let mut idx: Vec<usize> = (0..support).collect();
                loop {
                    if let Some(found) = Self::values(radius, &idx, &mut v, &mut visit) {
                        return Some(found);
                    }
                    if !next_combination(&mut idx, self.dim) {
                        break;
                    }
                }
            }
        }
        None
    }

    fn values<T>(
        radius: i64,
        idx: &[usize],
        v: &mut [i64],
        visit: &mut impl FnMut(&[i64]) -> Option<T>,
    ) -> Option<T> {
        // value codes: 0 ↦ 1, 1 ↦ -1, 2 ↦ 2, 3 ↦ -2, ...; the leading
        // coordinate only takes positive values
        let s = idx.len();
        let span = 2 * radius as usize;
        let decode = |c: usize| -> i64 {
            let mag = (c / 2 + 1) as i64;
            if c.is_multiple_of(2) {
                mag
            } else {
                -mag
            }
        };
        let mut codes = vec![0usize; s];
        loop {
            let lead_ok = codes[0].is_multiple_of(2);
            let hits_radius = codes.iter().any(|&c| (c / 2 + 1) as i64 == radius);
            if lead_ok && hits_radius {
                for (&i, &c) in idx.iter().zip(&codes) {
                    v[i] = decode(c);
                }
                let out = visit(v);
                for &i in idx {
                    v[i] = 0;
                }
                if out.is_some() {
                    return out;
                }
            }
            // increment, last coordinate fastest
            let mut pos = s;
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                codes[pos] += 1;
                if codes[pos] < span {
                    break;
                }
                codes[pos] = 0;
            }
        }
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A unimodular matrix whose first row is the primitive vector `v`.
fn complete_to_basis(v: &[BigInt]) -> IntMatrix {
    let n = v.len();
    let mut w = v.to_vec();
    let mut inv = unit_rows(n);
    // column operations on w; inv tracks their inverse as row operations
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&i| !w[i].is_zero()).collect();
        assert!(!nonzero.is_empty(), "complete_to_basis: zero vector");
        if nonzero.len() == 1 {
            let i = nonzero[0];
            assert!(
                w[i].abs().is_one(),
                "complete_to_basis: vector is not primitive"
            );
            w.swap(0, i);
            inv.swap(0, i);
            if w[0].is_negative() {
                w[0] = -&w[0];
                inv[0].iter_mut().for_each(|x| *x = -&*x);
            }
            break;
        }
        let p = *nonzero
            .iter()
            .min_by(|&&a, &&b| w[a].abs().cmp(&w[b].abs()))
            .expect("nonempty");
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = &w[j] / &w[p];
            let wp = w[p].clone();
            w[j] -= &q * &wp;
            let src = inv[j].clone();
            axpy(&mut inv[p], &q, &src);
        }
    }
    IntMatrix::from_big_rows(inv).expect("square")
}

/// Result of splitting a unit vector off a symmetric form, in the form's own
/// coordinates.
struct Split {
    /// Rows: the unit vector, then a basis of its orthogonal complement.
    basis: IntMatrix,
    norm: i64,
    complement: IntMatrix,
}

fn split_at(t: &IntMatrix, v: &[i64]) -> Split {
    let n = t.rows();
    let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    let norm = pairing(t, &v, &v);
    let completed = complete_to_basis(&v);
    let mut rows = completed.to_rows();
    // norm is ±1, so x − norm·⟨x,v⟩·v is integral and orthogonal to v
    for x in rows.iter_mut().skip(1) {
        let c = pairing(t, x, &v) * &norm;
        axpy(x, &-c, &v);
    }
    let basis = IntMatrix::from_big_rows(rows).expect("square");
    let full = t.congruence(&basis).expect("shapes agree");
    let complement = full.block(1, 1, n - 1, n - 1);
    let norm = if norm.is_positive() { 1 } else { -1 };
    Split {
        basis,
        norm,
        complement,
    }
}

/// Finds the first candidate `v` with `v t v' = ±1` whose orthogonal
/// complement is empty, of rank one, or again odd and indefinite.
fn find_admissible_split(t: &IntMatrix, sig: i64, search: &UnitSearch) -> Result<Split, FormError> {
    let n = t.rows();
    let small: Option<Vec<Vec<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i64::try_from(t.get(i, j)).ok())
                .collect::<Option<Vec<i64>>>()
        })
        .collect();
    let norm_of = |v: &[i64]| -> Option<i64> {
        match &small {
            Some(g) => {
                let mut acc: i128 = 0;
                for i in 0..n {
                    if v[i] == 0 {
                        continue;
                    }
                    let mut row: i128 = 0;
                    for j in 0..n {
                        if v[j] != 0 {
                            row += g[i][j] as i128 * v[j] as i128;
                        }
                    }
                    acc += v[i] as i128 * row;
                }
                (acc.abs() == 1).then_some(acc as i64)
            }
            None => {
                let bv: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
                let nv = pairing(t, &bv, &bv);
                nv.abs()
                    .is_one()
                    .then(|| if nv.is_positive() { 1 } else { -1 })
            }
        }
    };
    let order = CandidateOrder {
        dim: n,
        max_radius: search.max_radius,
    };
    order
        .find(|v| {
            let eps = norm_of(v)?;
            let rest = n - 1;
            if rest >= 2 && (sig - eps).unsigned_abs() as usize >= rest {
                return None;
            }
            let split = split_at(t, v);
            if rest >= 2 && !is_odd_form(&split.complement) {
                return None;
            }
            Some(split)
        })
        .ok_or(FormError::SearchBudgetExceeded(search.max_radius))
}

/// Splits a vector of norm ±1 off an odd indefinite unimodular form, using
/// the default search radius. See [`split_unit_vector_with`].
pub fn split_unit_vector(t: &IntMatrix) -> Result<(Vec<BigInt>, FormWitness), FormError> {
    split_unit_vector_with(t, &UnitSearch::default())
}

/// Splits `t ≅ ⟨±1⟩ ⊞ complement`.
///
/// Returns the vector `v` and a witness whose first row is `v` and whose
/// normal form is `[[v t v']] ⊞ complement`. Candidates are tried in
/// increasing max-norm radius; the first whose complement stays odd and
/// indefinite (or has rank ≤ 1) wins, so repeated splitting never strands an
/// even or definite remainder.
pub fn split_unit_vector_with(
    t: &IntMatrix,
    search: &UnitSearch,
) -> Result<(Vec<BigInt>, FormWitness), FormError> {
    let sig = check_odd_indefinite(t)?;
    if t.rows() == 0 {
        return Err(FormError::PreconditionFailed("form is empty".into()));
    }
    let split = find_admissible_split(t, sig, search)?;
    let v = split.basis.row(0).to_vec();
    let normal = IntMatrix::diagonal(&[split.norm]).block_sum(&split.complement)?;
    let witness = FormWitness::new(split.basis, t, normal)?;
    Ok((v, witness))
}

/// Diagonalizes an odd indefinite unimodular symmetric form with the default
/// search radius. See [`diagonalize_odd_indefinite_with`].
pub fn diagonalize_odd_indefinite(t: &IntMatrix) -> Result<FormWitness, FormError> {
    diagonalize_odd_indefinite_with(t, &UnitSearch::default())
}

/// Brings `t` to `diag(1^u, (-1)^v)` with `u - v = signature(t)`.
///
/// Forms of rank ≤ 1 are accepted when unimodular (`[[±1]]` or empty).
pub fn diagonalize_odd_indefinite_with(
    t: &IntMatrix,
    search: &UnitSearch,
) -> Result<FormWitness, FormError> {
    let mut sig = check_odd_indefinite(t)?;
    let n = t.rows();
    // basis rows of the current complement, in the original coordinates
    let mut basis = IntMatrix::identity(n);
    let mut gram = t.clone();
    let mut plus: Vec<Vec<BigInt>> = Vec::new();
    let mut minus: Vec<Vec<BigInt>> = Vec::new();
    while gram.rows() > 0 {
        let (local, norm, complement) = if gram.rows() == 1 {
            let norm = if gram.get(0, 0).is_positive() { 1 } else { -1 };
            (IntMatrix::identity(1), norm, IntMatrix::empty())
        } else {
            let split = find_admissible_split(&gram, sig, search)?;
            (split.basis, split.norm, split.complement)
        };
        let moved = local.multiply(&basis)?;
        let r = moved.rows();
        let unit = moved.row(0).to_vec();
        if norm > 0 {
            plus.push(unit);
        } else {
            minus.push(unit);
        }
        basis = moved.block(1, 0, r - 1, n);
        gram = complement;
        sig -= norm;
    }
    let (u, v) = (plus.len(), minus.len());
    let q = if n == 0 {
        IntMatrix::empty()
    } else {
        IntMatrix::from_big_rows(plus.into_iter().chain(minus).collect())?
    };
    FormWitness::new(q, t, standard_diagonal(u, v))
}
