//! Exact integer matrices: products, congruence, Kronecker products and
//! the invariants used everywhere else.

use spinslice::corpus;
use spinslice::imat;

fn main() {
    let a = imat![[1, 2], [3, 4]];
    let b = imat![[0, 1], [-1, 0]];
    println!("A = {a}");
    println!("B = {b}");
    println!("A·B = {}", a.multiply(&b).unwrap());
    println!("A' = {}", a.transpose());
    println!("det A = {}", a.determinant().unwrap());
    println!("B·A·B' = {}", a.congruence(&b).unwrap());
    println!("trefoil ⊗ B = {}", corpus::trefoil().tensor(&b));
    println!("trefoil ⊞ B = {}", corpus::trefoil().block_sum(&b).unwrap());

    let e8 = corpus::e8_gram();
    let inertia = e8.inertia().unwrap();
    println!(
        "E8: det {}, signature {}, inertia (+{}, -{}, 0x{})",
        e8.determinant().unwrap(),
        e8.signature().unwrap(),
        inertia.positive,
        inertia.negative,
        inertia.zero
    );

    // fraction-free elimination keeps every intermediate an integer
    let big = corpus::e8_gram().scale(1_000_000_007);
    println!(
        "det(10^9+7 · E8) has {} bits",
        big.determinant().unwrap().bits()
    );
}
