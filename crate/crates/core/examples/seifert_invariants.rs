//! Seifert matrix validation, symmetrization and the signature residue.

use spinslice::corpus;
use spinslice::seifert::{even_dimensional_slice, signature_residue, validate_seifert, KnotDims};

fn main() {
    for (name, a, n) in [
        ("trefoil", corpus::trefoil(), 1),
        ("figure-eight", corpus::figure_eight(), 1),
        ("E8 knot", corpus::e8_seifert(), 2),
    ] {
        match validate_seifert(a, n) {
            Ok(s) => {
                print!(
                    "{name} (n = {n}, ε = {}): A + εA' = {}",
                    s.epsilon(),
                    s.epsilon_symmetrization()
                );
                match s.levine_signature_residue() {
                    Ok(r) => println!(", residue {r} mod 16"),
                    Err(_) => println!(),
                }
            }
            Err(e) => println!("{name}: {e}"),
        }
    }

    let a = corpus::e8_seifert();
    let pair = a.block_sum(&a.neg()).unwrap();
    println!("E8 ⊞ -E8 residue: {}", signature_residue(&pair, 2).unwrap());

    let dims = KnotDims::new(3, 2).unwrap();
    println!(
        "spinning a classical knot about a surface: k = {}, m = {}, n = {}, ε = {}",
        dims.k(),
        dims.m(),
        dims.n(),
        dims.epsilon()
    );
    println!("knot in S^6: {}", even_dimensional_slice(6));
    println!("knot in S^5: {}", even_dimensional_slice(5));
}
