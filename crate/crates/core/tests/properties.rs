//! Property tests for exact matrix algebra and validation.

mod common;

use proptest::prelude::*;
use spinslice::exactmat::IntMatrix;
use spinslice::seifert::{is_epsilon_unimodular, validate_seifert};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-5i64..=5, rows * cols)
        .prop_map(move |v| IntMatrix::from_i64(rows, cols, &v))
}

fn square(max: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max).prop_flat_map(|n| matrix(n, n))
}

fn symmetric(max: usize) -> impl Strategy<Value = IntMatrix> {
    square(max).prop_map(|m| m.add(&m.transpose()).unwrap())
}

fn pair(max: usize) -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    (1..=max).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))
}

proptest! {
    #[test]
    fn transpose_is_an_involution(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn congruences_compose((a, p) in pair(4), q in any::<u64>()) {
        let n = a.rows();
        let q = IntMatrix::from_i64(n, n, &(0..n * n).map(|i| ((q >> (i % 60)) & 3) as i64 - 1).collect::<Vec<_>>());
        let qp = q.multiply(&p).unwrap();
        prop_assert_eq!(a.congruence(&p).unwrap().congruence(&q).unwrap(), a.congruence(&qp).unwrap());
    }

    #[test]
    fn tensor_congruence_factors((a, p) in pair(3), (b, q) in pair(2)) {
        let lhs = a.tensor(&b).congruence(&p.tensor(&q)).unwrap();
        let rhs = a.congruence(&p).unwrap().tensor(&b.congruence(&q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinant_matches_cofactor_expansion(m in square(5)) {
        let expected = common::cofactor_det(&common::to_i64(&m));
        prop_assert_eq!(m.determinant().unwrap(), expected.into());
    }

    #[test]
    fn signature_matches_rational_oracle(m in symmetric(5)) {
        prop_assert_eq!(m.signature().unwrap(), common::rational_signature(&m));
    }

    #[test]
    fn signature_is_invariant_under_unimodular_congruence(m in symmetric(4), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (w, _) = common::random_unimodular(&mut rng, m.rows(), 6);
        prop_assert_eq!(m.congruence(&w).unwrap().signature().unwrap(), m.signature().unwrap());
    }

    #[test]
    fn signature_adds_over_block_sums(a in symmetric(4), b in symmetric(4)) {
        let sum = a.block_sum(&b).unwrap();
        prop_assert_eq!(sum.signature().unwrap(), a.signature().unwrap() + b.signature().unwrap());
    }

    #[test]
    fn validity_is_closed_under_block_sum(
        n in 1u32..5,
        (i, j) in (0usize..3, 0usize..3),
        (s1, s2) in (any::<u64>(), any::<u64>()),
    ) {
        let a = seifert_sample(n, i, s1);
        let b = seifert_sample(n, j, s2);
        prop_assert!(is_epsilon_unimodular(&a, n) && is_epsilon_unimodular(&b, n));
        let sum = a.block_sum(&b).unwrap();
        prop_assert!(validate_seifert(sum, n).is_ok());
    }
}

/// A valid Seifert matrix for `n` moved by a random unimodular congruence.
fn seifert_sample(n: u32, which: usize, seed: u64) -> IntMatrix {
    use rand::SeedableRng;
    use spinslice::corpus;
    let base = match (n % 2, which) {
        (1, 0) => corpus::trefoil(),
        (1, 1) => corpus::figure_eight(),
        (0, 0) => corpus::e8_seifert(),
        _ => corpus::k5_middle(),
    };
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let (w, _) = common::random_unimodular(&mut rng, base.rows(), 5);
    base.congruence(&w).unwrap()
}
