//! Reduces a scrambled skew-symmetric unimodular form to the standard
//! symplectic form and checks the witness.

use spinslice::imat;
use spinslice::quadform::{standard_symplectic, symplectic_basis};

fn main() {
    let u = imat![[1, 1, 0, 0], [0, 1, 2, 0], [0, 0, 1, -1], [1, 1, 0, 1]];
    let t = standard_symplectic(2).congruence(&u).unwrap();
    println!("T = {t}");

    let w = symplectic_basis(&t).unwrap();
    println!("Q = {}", w.q());
    println!("Q·T·Q' = {}", w.normal_form());
    assert_eq!(t.congruence(w.q()).unwrap(), standard_symplectic(2));
    println!("witness verified ({} bits)", w.bit_size());
}
