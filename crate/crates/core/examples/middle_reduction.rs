//! Moves the middle block of a `k = 5` Seifert matrix to the front,
//! exposing the split `L_mid ⊞ [[0, C], [B, 0]]`.

use spinslice::cobordism::reduce_to_middle;
use spinslice::corpus;
use spinslice::framespin::assemble;

fn main() {
    let input = corpus::k5_s1xs3_s2xs2();
    let (a, layout) = assemble(&input).unwrap();
    print!("{layout}");
    println!("A = {a}");

    let (j, reduced) = reduce_to_middle(&a, &layout).unwrap();
    let (mu, nu) = layout.mu_nu();
    println!("J = {j}");
    println!("J·A·J' = {reduced}");
    let outer = 2 * mu;
    println!("middle {nu}x{nu} = {}", reduced.block(0, 0, nu, nu));
    println!(
        "outer {outer}x{outer} = {}",
        reduced.block(nu, nu, outer, outer)
    );
    println!(
        "off-diagonal blocks zero: {}",
        reduced.block(0, nu, nu, outer).is_zero() && reduced.block(nu, 0, outer, nu).is_zero()
    );
    println!(
        "outer diagonal blocks zero: {}",
        reduced.block(nu, nu, mu, mu).is_zero()
            && reduced.block(nu + mu, nu + mu, mu, mu).is_zero()
    );
}
