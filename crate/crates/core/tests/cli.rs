//! Runs the `spinslice` binary end to end in a scratch directory.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use spinslice::cobordism::certify_frame_spin;
use spinslice::corpus;
use spinslice::document::{parse_document, print_document, print_spin_parts, Document};
use spinslice::imat;
use spinslice::KnotDims;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinslice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, doc: &Document) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, print_document(doc)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn certify_then_verify_in_a_fresh_process() {
    let dir = tempfile::tempdir().unwrap();
    for (name, input) in corpus::all() {
        let input_path = write(
            dir.path(),
            &format!("{name}.json"),
            &Document::SpinInput(input),
        );
        let cert_path = dir.path().join(format!("{name}.cert"));
        let out = run(&["certify", s(&input_path), "-o", s(&cert_path)]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stderr(&out));
        let text = stdout(&out);
        assert!(text.contains("target size"), "{text}");
        assert!(text.contains("stabilizer rank"), "{text}");
        assert!(text.contains("witness bit-size"), "{text}");
        let out = run(&["verify", s(&cert_path)]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stderr(&out));
    }
}

#[test]
fn certify_to_stdout_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "t.json",
        &Document::SpinInput(corpus::trefoil_torus()),
    );
    let out = run(&["certify", s(&input)]);
    assert_eq!(out.status.code(), Some(0));
    let doc = parse_document(&stdout(&out)).unwrap();
    assert_eq!(doc.kind(), "certificate");
}

#[test]
fn tampered_and_non_unimodular_certificates_fail() {
    let dir = tempfile::tempdir().unwrap();
    let cert = certify_frame_spin(&corpus::trefoil_torus()).unwrap();

    let mut broken = cert.clone();
    broken.p.set(0, 0, 2.into());
    let path = write(dir.path(), "det.cert", &Document::Certificate(broken));
    let out = run(&["verify", s(&path)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("det(p) ≠ ±1"), "{}", stderr(&out));

    // row 0 becomes e_0 + e_1, which pairs nontrivially with row 1 = e_2
    let mut tampered = cert.clone();
    let x = tampered.p.get(0, 1) + 1;
    tampered.p.set(0, 1, x);
    let path = write(
        dir.path(),
        "tampered.cert",
        &Document::Certificate(tampered),
    );
    let out = run(&["verify", s(&path)]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
}

#[test]
fn nonzero_signature_input_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let (surface, manifold) = corpus::trefoil_e8_manifold();
    let text = print_spin_parts(
        KnotDims::new(surface.k, manifold.m).unwrap(),
        &surface.ranks,
        &manifold.ranks,
        &surface.linking,
        &manifold.forms,
    );
    let path = dir.path().join("e8.json");
    std::fs::write(&path, text).unwrap();
    let out = run(&["certify", s(&path)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("NonzeroSignature"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn malformed_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"kind\": \"matrix\", ").unwrap();
    for cmd in [
        "validate",
        "certify",
        "verify",
        "invariants",
        "spin",
        "oracle",
    ] {
        let out = run(&[cmd, s(&path)]);
        assert_eq!(out.status.code(), Some(1), "{cmd}");
        assert!(
            stderr(&out).contains("SyntaxError"),
            "{cmd}: {}",
            stderr(&out)
        );
    }
    let out = run(&["validate", s(&dir.path().join("missing.json"))]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn invariants_reports() {
    let dir = tempfile::tempdir().unwrap();
    let trefoil = write(
        dir.path(),
        "trefoil.json",
        &Document::Seifert {
            n: 1,
            matrix: corpus::trefoil(),
        },
    );
    let out = run(&["invariants", s(&trefoil)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("valid; det(A−A')=1"),
        "{}",
        stdout(&out)
    );

    let unit = write(
        dir.path(),
        "unit.json",
        &Document::Seifert {
            n: 2,
            matrix: imat![[1]],
        },
    );
    let out = run(&["invariants", s(&unit)]);
    assert!(
        stdout(&out).contains("residue 1 mod 16"),
        "{}",
        stdout(&out)
    );

    let spin = write(
        dir.path(),
        "k5.json",
        &Document::SpinInput(corpus::k5_torus()),
    );
    let out = run(&["invariants", s(&spin)]);
    let text = stdout(&out);
    assert!(
        text.contains("[middle]") && text.contains("offset"),
        "{text}"
    );
    let spin = write(
        dir.path(),
        "ss.json",
        &Document::SpinInput(corpus::trefoil_superspin_s2()),
    );
    assert!(stdout(&run(&["invariants", s(&spin)])).contains("[empty]"));
}

#[test]
fn validate_and_spin() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "zero.json",
        &Document::Seifert {
            n: 2,
            matrix: imat![[0]],
        },
    );
    let out = run(&["validate", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("NotUnimodular"));

    let input = write(
        dir.path(),
        "t.json",
        &Document::SpinInput(corpus::trefoil_torus()),
    );
    assert_eq!(run(&["validate", s(&input)]).status.code(), Some(0));
    let out = run(&["spin", s(&input)]);
    assert_eq!(out.status.code(), Some(0));
    match parse_document(&stdout(&out)).unwrap() {
        Document::Seifert { n, matrix } => {
            assert_eq!(n, 2);
            assert_eq!(
                matrix,
                spinslice::assemble(&corpus::trefoil_torus()).unwrap().0
            );
        }
        other => panic!("expected a seifert document, got {}", other.kind()),
    }
}

#[test]
fn oracle_command() {
    let dir = tempfile::tempdir().unwrap();
    let hyp = write(
        dir.path(),
        "h.json",
        &Document::Matrix(imat![[1, 0], [0, -1]]),
    );
    let out = run(&["oracle", s(&hyp), "--max-entry", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("[[1, 1], [0, 1]]"),
        "{}",
        stdout(&out)
    );

    let def = write(
        dir.path(),
        "d.json",
        &Document::Matrix(imat![[1, 0], [0, 1]]),
    );
    let out = run(&["oracle", s(&def)]);
    assert!(stdout(&out).starts_with("unknown"), "{}", stdout(&out));

    let odd = write(dir.path(), "o.json", &Document::Matrix(imat![[1]]));
    assert_eq!(run(&["oracle", s(&odd)]).status.code(), Some(1));
}

#[test]
fn batch_certify_directory() {
    let dir = tempfile::tempdir().unwrap();
    let inputs = dir.path().join("in");
    std::fs::create_dir(&inputs).unwrap();
    for (name, input) in corpus::all().into_iter().take(4) {
        write(
            &inputs,
            &format!("{name}.json"),
            &Document::SpinInput(input),
        );
    }
    std::fs::write(inputs.join("broken.json"), "[").unwrap();
    let out_dir = dir.path().join("out");
    let out = run(&["certify", s(&inputs), "-o", s(&out_dir)]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert_eq!(text.matches("certified:").count(), 4, "{text}");
    assert!(text.contains("broken.json: FAILED"));
    assert_eq!(std::fs::read_dir(&out_dir).unwrap().count(), 4);
}
