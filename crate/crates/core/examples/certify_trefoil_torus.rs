//! Certifies that the trefoil spun about the torus is null-cobordant and
//! re-checks the certificate.

use spinslice::cobordism::{certify_frame_spin, verify};
use spinslice::corpus;

fn main() {
    let input = corpus::trefoil_torus();
    let cert = certify_frame_spin(&input).unwrap();
    println!("{cert}");
    verify(&cert).unwrap();
    println!("verified");

    let mut tampered = cert.clone();
    let x = tampered.p.get(0, 0) + 1;
    tampered.p.set(0, 0, x);
    println!("tampered: {}", verify(&tampered).unwrap_err());
}
