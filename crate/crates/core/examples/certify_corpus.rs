//! Certifies every corpus input and prints a summary table.

use std::time::Instant;

use spinslice::cobordism::{certify_frame_spin, verify};
use spinslice::corpus;

fn main() {
    let start = Instant::now();
    println!(
        "{:<24} {:>3} {:>3} {:>6} {:>6} {:>5}",
        "input", "k", "m", "size", "stab", "bits"
    );
    for (name, input) in corpus::all() {
        let cert = certify_frame_spin(&input).unwrap();
        verify(&cert).unwrap();
        let d = input.dims();
        println!(
            "{:<24} {:>3} {:>3} {:>6} {:>6} {:>5}",
            name,
            d.k(),
            d.m(),
            cert.target.rows(),
            cert.stabilizer_rank(),
            cert.witness_bits()
        );
    }
    println!("all verified in {:.2?}", start.elapsed());

    let (surface, manifold) = corpus::trefoil_e8_manifold();
    println!(
        "E8 manifold: {}",
        corpus::try_spin(surface, manifold).unwrap_err()
    );
}
