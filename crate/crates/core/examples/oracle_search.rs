//! Brute-force witness search, and agreement with constructed certificates.

use spinslice::cobordism::certify_frame_spin;
use spinslice::corpus;
use spinslice::exactmat::IntMatrix;
use spinslice::imat;
use spinslice::oracle::{cross_validate, search_null_cobordant, SearchBudget};

fn main() {
    let budget = SearchBudget::default();
    for x in [
        IntMatrix::diagonal(&[1, -1]),
        imat![[0, 1], [1, 1]],
        IntMatrix::identity(2),
    ] {
        match search_null_cobordant(&x, &budget).unwrap() {
            Some(p) => println!("{x}: witness {p}"),
            None => println!("{x}: unknown within budget"),
        }
    }

    for (name, input) in corpus::all() {
        let cert = certify_frame_spin(&input).unwrap();
        if cert.total_size() <= budget.max_size() {
            println!(
                "{name} (size {}): oracle agrees = {}",
                cert.total_size(),
                cross_validate(&cert, &budget).unwrap()
            );
        }
    }
}
