//! Assembles the Seifert matrix of a frame-spun knot and prints its block
//! layout. Pass a corpus name to pick an input (default `k5-torus`).

use spinslice::corpus;
use spinslice::framespin::{assemble, middle_block};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "k5-torus".into());
    let Some(input) = corpus::by_name(&name) else {
        eprintln!("unknown corpus input {name:?}; choose one of:");
        for (n, _) in corpus::all() {
            eprintln!("  {n}");
        }
        std::process::exit(1);
    };

    let (a, layout) = assemble(&input).unwrap();
    print!("{layout}");
    println!("A = {a}");
    let eps = input.dims().epsilon();
    let sym = a.add(&eps.apply(&a.transpose())).unwrap();
    println!("det(A + εA') = {}", sym.determinant().unwrap());
    if let Ok(m) = middle_block(&input) {
        println!("middle block = {m}");
    }
}
