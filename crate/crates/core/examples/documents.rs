//! Writing and reading documents, including error reporting.

use spinslice::cobordism::certify_frame_spin;
use spinslice::corpus;
use spinslice::document::{parse_document, print_document, Document};

fn main() {
    let cert = certify_frame_spin(&corpus::trefoil_torus()).unwrap();
    let text = print_document(&Document::Certificate(cert));
    println!("{text}");
    let back = parse_document(&text).unwrap();
    println!("parsed back a {} document", back.kind());

    for bad in [
        "{\"kind\": \"matrix\",\n \"version\": \"1\" \"payload\": []}",
        r#"{"kind": "matrix", "version": "1", "payload": [[1, 2], [3]]}"#,
        r#"{"kind": "spin-input", "version": "1", "payload": {"dims": {"k": 2, "m": 1}}}"#,
    ] {
        println!("{}", parse_document(bad).unwrap_err());
    }
}
