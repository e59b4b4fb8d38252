//! Independent helpers shared by the integration tests. Nothing here calls
//! the library's elimination or normal-form code.

#![allow(dead_code)]

use num_rational::Ratio;
use rand::Rng;
use spinslice::exactmat::IntMatrix;

pub fn to_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| i64::try_from(x).expect("small entry"))
                .collect()
        })
        .collect()
}

pub fn from_i64(rows: &[Vec<i64>], n: usize) -> IntMatrix {
    if n == 0 {
        return IntMatrix::empty();
    }
    IntMatrix::from_rows(rows).expect("rectangular")
}

/// Signature by rational congruence diagonalization: pivot on a nonzero
/// diagonal entry, or create one by adding a row/column pair.
pub fn rational_signature(m: &IntMatrix) -> i64 {
    let mut a: Vec<Vec<Ratio<i128>>> = to_i64(m)
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| Ratio::from_integer(x as i128))
                .collect()
        })
        .collect();
    let n = a.len();
    let zero = Ratio::from_integer(0);
    let mut sig = 0;
    for k in 0..n {
        if a[k][k] == zero {
            if let Some(j) = (k + 1..n).find(|&j| a[j][j] != zero) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| a[k][j] != zero) {
                // row_k += row_j, col_k += col_j gives a_kk = 2 a_kj
                for c in 0..n {
                    let v = a[j][c];
                    a[k][c] += v;
                }
                for row in a.iter_mut() {
                    let v = row[j];
                    row[k] += v;
                }
            } else {
                continue;
            }
        }
        let p = a[k][k];
        if p > zero {
            sig += 1;
        } else {
            sig -= 1;
        }
        for i in k + 1..n {
            let f = a[i][k] / p;
            for c in k..n {
                let v = a[k][c];
                a[i][c] -= f * v;
            }
        }
        for i in k + 1..n {
            a[k][i] = zero;
            a[i][k] = zero;
        }
    }
    sig
}

/// Determinant by cofactor expansion; fine for the small sizes used here.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .filter(|&j| m[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * cofactor_det(&minor)
        })
        .sum()
}

/// A random product of elementary row operations with small multipliers,
/// row swaps and sign flips, returned with its inverse.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> (IntMatrix, IntMatrix) {
    let mut w = IntMatrix::identity(n);
    let mut w_inv = IntMatrix::identity(n);
    for _ in 0..steps {
        let mut e = IntMatrix::identity(n);
        let mut e_inv = IntMatrix::identity(n);
        let i = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
                e.set(i, j, c.into());
                e_inv.set(i, j, (-c).into());
            }
            1 if n > 1 => {
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let mut order: Vec<usize> = (0..n).collect();
                order.swap(i, j);
                e = IntMatrix::permutation(&order);
                e_inv = e.clone();
            }
            _ => {
                e.set(i, i, (-1).into());
                e_inv = e.clone();
            }
        }
        w = e.multiply(&w).unwrap();
        w_inv = w_inv.multiply(&e_inv).unwrap();
    }
    (w, w_inv)
}

/// Offsets and sizes of the summands `a = 1..=k-2`, computed from the ranks
/// alone: summand `a` has size `r_a · ρ_{n-a}`.
pub fn summand_offsets(
    k: u32,
    n: u32,
    v_ranks: &[usize],
    m_ranks: &[usize],
) -> Vec<(u32, usize, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for a in 1..=k.saturating_sub(2) {
        let b = n as i64 - a as i64;
        let rho = if b >= 0 && (b as usize) < m_ranks.len() {
            m_ranks[b as usize]
        } else {
            0
        };
        let size = v_ranks[a as usize] * rho;
        out.push((a, offset, size));
        offset += size;
    }
    out
}
