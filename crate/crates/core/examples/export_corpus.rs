//! Writes every corpus input, plus a few standalone matrices, as documents
//! under `data/` (or the directory given as the first argument).

use std::path::PathBuf;

use spinslice::corpus;
use spinslice::document::{print_document, print_spin_parts, Document};
use spinslice::exactmat::IntMatrix;

fn main() -> std::io::Result<()> {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"));
    std::fs::create_dir_all(dir.join("spin"))?;

    for (name, input) in corpus::all() {
        let path = dir.join("spin").join(format!("{name}.json"));
        std::fs::write(&path, print_document(&Document::SpinInput(input)))?;
        println!("wrote {}", path.display());
    }

    let extras = [
        (
            "trefoil.seifert.json",
            Document::Seifert {
                n: 1,
                matrix: corpus::trefoil(),
            },
        ),
        (
            "e8.seifert.json",
            Document::Seifert {
                n: 2,
                matrix: corpus::e8_seifert(),
            },
        ),
        (
            "unit.seifert.json",
            Document::Seifert {
                n: 2,
                matrix: spinslice::imat![[1]],
            },
        ),
        (
            "hyperbolic.matrix.json",
            Document::Matrix(corpus::hyperbolic()),
        ),
        (
            "definite.matrix.json",
            Document::Matrix(IntMatrix::identity(2)),
        ),
    ];
    for (file, doc) in extras {
        let path = dir.join(file);
        std::fs::write(&path, print_document(&doc))?;
        println!("wrote {}", path.display());
    }

    let (surface, manifold) = corpus::trefoil_e8_manifold();
    let dims = spinslice::KnotDims::new(surface.k, manifold.m).expect("valid dimensions");
    let path = dir.join("e8-signature.spin.json");
    std::fs::write(
        &path,
        print_spin_parts(
            dims,
            &surface.ranks,
            &manifold.ranks,
            &surface.linking,
            &manifold.forms,
        ),
    )?;
    println!(
        "wrote {} (rejected on purpose: signature 8)",
        path.display()
    );
    Ok(())
}
