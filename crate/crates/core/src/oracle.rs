//! Brute-force search for null-cobordance witnesses of small matrices.
//!
//! This is ground truth for the constructive pipeline and shares none of its
//! code: it enumerates bounded integer vectors directly. A witness `P` for a
//! `2h × 2h` matrix `X` is an integrally invertible matrix whose first `h`
//! rows `v_1 … v_h` satisfy `v_i X v_j' = 0` for all `i, j ≤ h`.
//!
//! Candidates are enumerated in a fixed order, so the returned witness is
//! reproducible: integers are ranked `0, 1, -1, 2, -2, …` and vectors are
//! compared lexicographically under that ranking. The first `h` rows are a
//! strictly increasing list of isotropic primitive vectors whose first
//! nonzero entry is positive; the remaining rows are the first completion (in
//! the same order) with determinant ±1. A search that finds nothing has only
//! exhausted its budget; it is not a proof that no witness exists.

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::cobordism::{verify, SliceCertificate};
use crate::exactmat::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("OddSize: matrix size {0} is odd")]
    OddSize(usize),
    #[error("SizeExceedsBudget: size {size} exceeds the budget's max_size {max}")]
    SizeExceedsBudget { size: usize, max: usize },
    #[error("matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("invalid budget: {0}")]
    BadBudget(String),
    #[error("matrix entry {0} is too large for the search")]
    EntryTooLarge(BigInt),
}

/// Bounds on the brute-force search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_entry: u32,
    max_size: usize,
}

impl SearchBudget {
    pub const SIZE_LIMIT: usize = 6;

    pub fn new(max_entry: u32, max_size: usize) -> Result<Self, OracleError> {
        if max_entry == 0 {
            return Err(OracleError::BadBudget("max_entry must be positive".into()));
        }
        if max_size % 2 == 1 || max_size > Self::SIZE_LIMIT {
            return Err(OracleError::BadBudget(format!(
                "max_size must be even and at most {}, got {max_size}",
                Self::SIZE_LIMIT
            )));
        }
        Ok(SearchBudget {
            max_entry,
            max_size,
        })
    }

    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_entry: 3,
            max_size: 4,
        }
    }
}

/// `0, 1, -1, 2, -2, …, e, -e`.
fn ranked_values(e: i64) -> Vec<i64> {
    std::iter::once(0)
        .chain((1..=e).flat_map(|v| [v, -v]))
        .collect()
}

/// All vectors of length `n` over `values`, lexicographic in value rank.
fn all_vectors(n: usize, values: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

fn form(x: &[Vec<i128>], u: &[i64], v: &[i64]) -> i128 {
    let n = u.len();
    let mut acc = 0i128;
    for i in 0..n {
        if u[i] == 0 {
            continue;
        }
        let mut row = 0i128;
        for j in 0..n {
            row += x[i][j] * v[j] as i128;
        }
        acc += u[i] as i128 * row;
    }
    acc
}

fn det_small(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * prev
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

/// gcd of the maximal minors of a `k × n` row set; 1 iff the rows extend to
/// a unimodular basis.
fn minor_gcd(rows: &[&[i64]]) -> i128 {
    let k = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    if k == 0 {
        return 1;
    }
    let mut cols: Vec<usize> = (0..k).collect();
    let mut g: i128 = 0;
    loop {
        let sub: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c] as i128).collect())
            .collect();
        g = g.gcd(&det_small(&sub));
        if g == 1 || !next_combination(&mut cols, n) {
            return g;
        }
    }
}

fn leading_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

struct Search<'a> {
    x: Vec<Vec<i128>>,
    h: usize,
    isotropic: Vec<&'a [i64]>,
    vectors: &'a [Vec<i64>],
}

impl<'a> Search<'a> {
    fn half(&self, chosen: &mut Vec<&'a [i64]>, start: usize) -> Option<Vec<Vec<i64>>> {
        if chosen.len() == self.h {
            if minor_gcd(chosen) != 1 {
                return None;
            }
            let mut rows = chosen.clone();
            return self.complete(&mut rows);
        }
        for idx in start..self.isotropic.len() {
            let v = self.isotropic[idx];
            if chosen
                .iter()
                .all(|u| form(&self.x, u, v) == 0 && form(&self.x, v, u) == 0)
            {
                chosen.push(v);
                if let Some(p) = self.half(chosen, idx + 1) {
                    return Some(p);
                }
                chosen.pop();
            }
        }
        None
    }

    fn complete(&self, rows: &mut Vec<&'a [i64]>) -> Option<Vec<Vec<i64>>> {
        let n = 2 * self.h;
        if rows.len() == n {
            let m: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| r.iter().map(|&v| v as i128).collect())
                .collect();
            return (det_small(&m).abs() == 1).then(|| rows.iter().map(|r| r.to_vec()).collect());
        }
        for v in self.vectors {
            rows.push(v);
            if minor_gcd(rows) == 1 {
                if let Some(p) = self.complete(rows) {
                    return Some(p);
                }
            }
            rows.pop();
        }
        None
    }
}

/// Searches for an integrally invertible `P` with entries in
/// `[-max_entry, max_entry]` making the upper-left half block of `P X P'`
/// zero. `Ok(None)` means nothing was found within the budget.
pub fn search_null_cobordant(
    x: &IntMatrix,
    budget: &SearchBudget,
) -> Result<Option<IntMatrix>, OracleError> {
    if !x.is_square() {
        return Err(OracleError::NotSquare(x.rows(), x.cols()));
    }
    let n = x.rows();
    if n > budget.max_size {
        return Err(OracleError::SizeExceedsBudget {
            size: n,
            max: budget.max_size,
        });
    }
    if n % 2 == 1 {
        return Err(OracleError::OddSize(n));
    }
    if n == 0 {
        return Ok(Some(IntMatrix::empty()));
    }
    let small: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    i64::try_from(x.get(i, j))
                        .map(i128::from)
                        .map_err(|_| OracleError::EntryTooLarge(x.get(i, j).clone()))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;

    let vectors = all_vectors(n, &ranked_values(budget.max_entry as i64));
    let isotropic: Vec<&[i64]> = vectors
        .iter()
        .filter(|v| leading_positive(v))
        .filter(|v| minor_gcd(&[v.as_slice()]) == 1)
        .filter(|v| form(&small, v, v) == 0)
        .map(Vec::as_slice)
        .collect();
    let search = Search {
        x: small,
        h: n / 2,
        isotropic,
        vectors: &vectors,
    };
    let Some(rows) = search.half(&mut Vec::new(), 0) else {
        return Ok(None);
    };
    let p = IntMatrix::from_rows(&rows).expect("square rows");
    let y = x.congruence(&p).expect("square");
    assert!(
        p.is_integrally_invertible() && y.block(0, 0, n / 2, n / 2).is_zero(),
        "oracle produced an invalid witness"
    );
    Ok(Some(p))
}

/// If `cert` verifies, independently searches for a witness for
/// `target ⊞ stabilizer`; returns whether the two agree. A certificate that
/// fails verification makes no claim, so it agrees vacuously.
pub fn cross_validate(cert: &SliceCertificate, budget: &SearchBudget) -> Result<bool, OracleError> {
    let size = cert.total_size();
    if size > budget.max_size {
        return Err(OracleError::SizeExceedsBudget {
            size,
            max: budget.max_size,
        });
    }
    if verify(cert).is_err() {
        return Ok(true);
    }
    let x = cert
        .target
        .block_sum(&cert.stabilizer)
        .expect("verified certificate has square parts");
    Ok(search_null_cobordant(&x, budget)?.is_some())
}
