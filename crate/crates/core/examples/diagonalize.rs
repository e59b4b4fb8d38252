//! Diagonalizes odd indefinite unimodular forms, splitting off one unit
//! vector at a time.

use spinslice::corpus;
use spinslice::exactmat::IntMatrix;
use spinslice::quadform::{diagonalize_odd_indefinite, split_unit_vector};

fn main() {
    let t = IntMatrix::diagonal(&[1, -1]);
    let (v, w) = split_unit_vector(&t).unwrap();
    println!(
        "first unit vector of diag(1,-1): {v:?}, split {}",
        w.normal_form()
    );

    let odd_hyperbolic = spinslice::imat![[0, 1], [1, 1]];
    let (v, _) = split_unit_vector(&odd_hyperbolic).unwrap();
    println!("first unit vector of [[0,1],[1,1]]: {v:?}");

    // E8 ⊞ ⟨-1⟩ is odd and indefinite, so it must be diag(1^8, -1)
    let t = corpus::e8_gram()
        .block_sum(&IntMatrix::diagonal(&[-1]))
        .unwrap();
    let w = diagonalize_odd_indefinite(&t).unwrap();
    println!("E8 ⊞ ⟨-1⟩ ≅ {}", w.normal_form());
    println!("witness entries need {} bits", w.bit_size());

    // E8 alone is definite and even: no unit vectors to split off
    match diagonalize_odd_indefinite(&corpus::e8_gram()) {
        Ok(_) => unreachable!("E8 is even"),
        Err(e) => println!("E8 rejected: {e}"),
    }
}
