//! JSON interchange documents.
//!
//! Every file is an envelope `{"kind": …, "version": "1", "payload": …}`.
//! Matrices are row-major arrays of integer arrays; an integer outside the
//! `i64` range is written as a decimal string. Printing is deterministic and
//! `parse_document(print_document(d)) == d`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::cobordism::SliceCertificate;
use crate::exactmat::IntMatrix;
use crate::framespin::{SpinError, SpinInput};
use crate::seifert::KnotDims;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("SyntaxError at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("SchemaError in `{field}`: {message}")]
    Schema { field: String, message: String },
    #[error(transparent)]
    Spin(#[from] SpinError),
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Schema {
        field: field.into(),
        message: message.into(),
    }
}

/// A parsed document. Seifert payloads are kept as given so that invalid
/// matrices can still be inspected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Matrix(IntMatrix),
    Seifert { n: u32, matrix: IntMatrix },
    SpinInput(SpinInput),
    Certificate(SliceCertificate),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Matrix(_) => "matrix",
            Document::Seifert { .. } => "seifert",
            Document::SpinInput(_) => "spin-input",
            Document::Certificate(_) => "certificate",
        }
    }
}

pub fn parse_document(text: &str) -> Result<Document, DocumentError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let env = value
        .as_object()
        .ok_or_else(|| schema("$", "document must be a JSON object"))?;
    let kind = env
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("kind", "missing or not a string"))?;
    let version = env
        .get("version")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("version", "missing or not a string"))?;
    if version != FORMAT_VERSION {
        return Err(schema(
            "version",
            format!("unsupported version {version:?}, expected {FORMAT_VERSION:?}"),
        ));
    }
    let payload = env
        .get("payload")
        .ok_or_else(|| schema("payload", "missing"))?;
    match kind {
        "matrix" => Ok(Document::Matrix(matrix(payload, "payload")?)),
        "seifert" => {
            let p = object(payload, "payload")?;
            Ok(Document::Seifert {
                n: small(field(p, "payload", "n")?, "payload.n")?,
                matrix: matrix(field(p, "payload", "matrix")?, "payload.matrix")?,
            })
        }
        "spin-input" => Ok(Document::SpinInput(spin_input(payload)?)),
        "certificate" => Ok(Document::Certificate(certificate(payload)?)),
        other => Err(schema("kind", format!("unknown kind {other:?}"))),
    }
}

pub fn print_document(doc: &Document) -> String {
    let payload = match doc {
        Document::Matrix(m) => matrix_value(m),
        Document::Seifert { n, matrix } => json!({"n": n, "matrix": matrix_value(matrix)}),
        Document::SpinInput(s) => spin_input_value(s),
        Document::Certificate(c) => json!({
            "target": matrix_value(&c.target),
            "stabilizer": matrix_value(&c.stabilizer),
            "stabilizer_witness": matrix_value(&c.stabilizer_witness),
            "p": matrix_value(&c.p),
            "half": c.half,
        }),
    };
    let env = json!({"kind": doc.kind(), "version": FORMAT_VERSION, "payload": payload});
    render(&env)
}

/// Pretty-prints with arrays of scalars kept on one line, so each matrix row
/// is a line of text.
fn render(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalars serialize"));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(key).expect("strings serialize"));
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("scalars serialize")),
    }
}

fn integer_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

/// Rows as arrays; a `0×c` or `r×0` matrix keeps its shape through
/// `{"rows": r, "cols": c}`.
fn matrix_value(m: &IntMatrix) -> Value {
    if m.rows() == 0 || m.cols() == 0 {
        if m.rows() == 0 && m.cols() == 0 {
            return json!([]);
        }
        return json!({"rows": m.rows(), "cols": m.cols()});
    }
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(integer_value).collect()))
            .collect(),
    )
}

fn spin_input_value(s: &SpinInput) -> Value {
    spin_parts_value(
        s.dims(),
        s.v_ranks(),
        s.m_ranks(),
        s.linking(),
        s.intersection(),
    )
}

/// Prints a spin-input document from raw parts without validating them, so
/// that inputs the parser will reject can still be written.
pub fn print_spin_parts(
    dims: KnotDims,
    v_ranks: &[usize],
    m_ranks: &[usize],
    linking: &BTreeMap<u32, IntMatrix>,
    intersection: &BTreeMap<u32, IntMatrix>,
) -> String {
    let env = json!({
        "kind": "spin-input",
        "version": FORMAT_VERSION,
        "payload": spin_parts_value(dims, v_ranks, m_ranks, linking, intersection),
    });
    render(&env)
}

fn spin_parts_value(
    d: KnotDims,
    v_ranks: &[usize],
    m_ranks: &[usize],
    linking: &BTreeMap<u32, IntMatrix>,
    intersection: &BTreeMap<u32, IntMatrix>,
) -> Value {
    let pairings = |map: &BTreeMap<u32, IntMatrix>| {
        Value::Object(
            map.iter()
                .map(|(i, m)| (i.to_string(), matrix_value(m)))
                .collect::<Map<_, _>>(),
        )
    };
    json!({
        "dims": {"k": d.k(), "m": d.m(), "n": d.n()},
        "v_ranks": v_ranks,
        "m_ranks": m_ranks,
        "linking": pairings(linking),
        "intersection": pairings(intersection),
    })
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, DocumentError> {
    v.as_object()
        .ok_or_else(|| schema(path, "expected an object"))
}

fn field<'a>(
    obj: &'a Map<String, Value>,
    path: &str,
    name: &str,
) -> Result<&'a Value, DocumentError> {
    obj.get(name)
        .ok_or_else(|| schema(format!("{path}.{name}"), "missing"))
}

fn integer(v: &Value, path: &str) -> Result<BigInt, DocumentError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(i.into())
            } else if let Some(u) = n.as_u64() {
                Ok(u.into())
            } else {
                Err(schema(
                    path,
                    "expected an integer (write large values as strings)",
                ))
            }
        }
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| schema(path, format!("{s:?} is not a decimal integer"))),
        _ => Err(schema(path, "expected an integer")),
    }
}

fn small<T: TryFrom<u64>>(v: &Value, path: &str) -> Result<T, DocumentError> {
    v.as_u64()
        .and_then(|u| T::try_from(u).ok())
        .ok_or_else(|| schema(path, "expected a small non-negative integer"))
}

fn matrix(v: &Value, path: &str) -> Result<IntMatrix, DocumentError> {
    if let Some(obj) = v.as_object() {
        let rows: usize = small(field(obj, path, "rows")?, &format!("{path}.rows"))?;
        let cols: usize = small(field(obj, path, "cols")?, &format!("{path}.cols"))?;
        if rows * cols != 0 {
            return Err(schema(path, "shape-only matrices must have no entries"));
        }
        return Ok(IntMatrix::zeros(rows, cols));
    }
    let rows = v
        .as_array()
        .ok_or_else(|| schema(path, "expected an array of rows"))?;
    let mut data = Vec::new();
    let mut cols = None;
    for (i, row) in rows.iter().enumerate() {
        let rpath = format!("{path}[{i}]");
        let row = row
            .as_array()
            .ok_or_else(|| schema(&rpath, "expected an array of integers"))?;
        if *cols.get_or_insert(row.len()) != row.len() {
            return Err(schema(&rpath, "rows have different lengths"));
        }
        for (j, x) in row.iter().enumerate() {
            data.push(integer(x, &format!("{rpath}[{j}]"))?);
        }
    }
    let cols = cols.unwrap_or(0);
    if !rows.is_empty() && cols == 0 {
        return Err(schema(path, "rows must not be empty"));
    }
    IntMatrix::new(rows.len(), cols, data).map_err(|e| schema(path, e.to_string()))
}

fn ranks(v: &Value, path: &str) -> Result<Vec<usize>, DocumentError> {
    v.as_array()
        .ok_or_else(|| schema(path, "expected an array"))?
        .iter()
        .enumerate()
        .map(|(i, x)| small(x, &format!("{path}[{i}]")))
        .collect()
}

fn pairings(v: &Value, path: &str) -> Result<BTreeMap<u32, IntMatrix>, DocumentError> {
    object(v, path)?
        .iter()
        .map(|(key, m)| {
            let kpath = format!("{path}.{key}");
            let index = key
                .parse::<u32>()
                .map_err(|_| schema(&kpath, "keys must be non-negative integers"))?;
            Ok((index, matrix(m, &kpath)?))
        })
        .collect()
}

fn spin_input(v: &Value) -> Result<SpinInput, DocumentError> {
    let p = object(v, "payload")?;
    let d = object(field(p, "payload", "dims")?, "payload.dims")?;
    let k: u32 = small(field(d, "payload.dims", "k")?, "payload.dims.k")?;
    let m: u32 = small(field(d, "payload.dims", "m")?, "payload.dims.m")?;
    if k < 3 {
        return Err(schema("payload.dims.k", format!("k ≥ 3 required, got {k}")));
    }
    if m < 1 {
        return Err(schema("payload.dims.m", format!("m ≥ 1 required, got {m}")));
    }
    let dims = match d.get("n") {
        Some(n) => KnotDims::with_n(k, m, small(n, "payload.dims.n")?),
        None => KnotDims::new(k, m),
    }
    .map_err(|e| schema("payload.dims", e.to_string()))?;
    Ok(SpinInput::new(
        dims,
        ranks(field(p, "payload", "v_ranks")?, "payload.v_ranks")?,
        ranks(field(p, "payload", "m_ranks")?, "payload.m_ranks")?,
        pairings(field(p, "payload", "linking")?, "payload.linking")?,
        pairings(field(p, "payload", "intersection")?, "payload.intersection")?,
    )?)
}

fn certificate(v: &Value) -> Result<SliceCertificate, DocumentError> {
    let p = object(v, "payload")?;
    let get = |name: &str| matrix(field(p, "payload", name)?, &format!("payload.{name}"));
    Ok(SliceCertificate {
        target: get("target")?,
        stabilizer: get("stabilizer")?,
        stabilizer_witness: get("stabilizer_witness")?,
        p: get("p")?,
        half: small(field(p, "payload", "half")?, "payload.half")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobordism::certify_frame_spin;
    use crate::corpus;
    use crate::imat;

    fn wrap(kind: &str, payload: &str) -> String {
        format!(r#"{{"kind": "{kind}", "version": "1", "payload": {payload}}}"#)
    }

    #[test]
    fn minimal_matrix_document() {
        let doc = parse_document(&wrap("matrix", "[[0,1],[-1,0]]")).unwrap();
        assert_eq!(doc, Document::Matrix(imat![[0, 1], [-1, 0]]));
        assert_eq!(doc.kind(), "matrix");
    }

    #[test]
    fn corpus_spin_inputs_round_trip() {
        for (name, input) in corpus::all() {
            let doc = Document::SpinInput(input);
            let text = print_document(&doc);
            assert_eq!(parse_document(&text).unwrap(), doc, "{name}");
        }
    }

    #[test]
    fn certificate_round_trip() {
        let cert = certify_frame_spin(&corpus::trefoil_torus()).unwrap();
        let doc = Document::Certificate(cert);
        assert_eq!(parse_document(&print_document(&doc)).unwrap(), doc);
    }

    #[test]
    fn big_integers_are_strings() {
        let big: BigInt = BigInt::from(i64::MAX) * 1000;
        let m = IntMatrix::new(1, 1, vec![big.clone()]).unwrap();
        let text = print_document(&Document::Matrix(m.clone()));
        assert!(text.contains(&format!("\"{big}\"")));
        assert_eq!(parse_document(&text).unwrap(), Document::Matrix(m));
    }

    #[test]
    fn degenerate_shapes_survive() {
        for m in [
            IntMatrix::empty(),
            IntMatrix::zeros(0, 3),
            IntMatrix::zeros(2, 0),
        ] {
            let doc = Document::Matrix(m);
            assert_eq!(parse_document(&print_document(&doc)).unwrap(), doc);
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_document("{\n  \"kind\": \"matrix\",\n  oops\n}").unwrap_err();
        match err {
            DocumentError::Syntax { line, column, .. } => assert_eq!((line, column), (3, 3)),
            other => panic!("expected SyntaxError, got {other:?}"),
        }
    }

    #[test]
    fn schema_errors_name_the_field() {
        let cases = [
            (wrap("matrix", "[[1,2],[3]]"), "payload[1]"),
            (wrap("matrix", "[[1.5]]"), "payload[0][0]"),
            (wrap("tensor", "[]"), "kind"),
            (
                r#"{"kind": "matrix", "version": "2", "payload": []}"#.to_string(),
                "version",
            ),
            (wrap("seifert", r#"{"matrix": [[1]]}"#), "payload.n"),
            (
                wrap(
                    "spin-input",
                    r#"{"dims": {"k": 2, "m": 1}, "v_ranks": [1, 0], "m_ranks": [1, 1],
                        "linking": {}, "intersection": {}}"#,
                ),
                "payload.dims.k",
            ),
        ];
        for (text, expected) in cases {
            match parse_document(&text) {
                Err(DocumentError::Schema { field, .. }) => assert_eq!(field, expected, "{text}"),
                other => panic!("{text}: expected SchemaError, got {other:?}"),
            }
        }
    }

    #[test]
    fn unchecked_parts_are_rejected_on_parse() {
        let (surface, manifold) = corpus::trefoil_e8_manifold();
        let text = print_spin_parts(
            KnotDims::new(surface.k, manifold.m).unwrap(),
            &surface.ranks,
            &manifold.ranks,
            &surface.linking,
            &manifold.forms,
        );
        assert_eq!(
            parse_document(&text),
            Err(DocumentError::Spin(SpinError::NonzeroSignature(8)))
        );
    }

    #[test]
    fn semantic_errors_pass_through() {
        let mut input = spin_input_value(&corpus::trefoil_torus());
        input["dims"] = json!({"k": 3, "m": 4, "n": 3});
        input["m_ranks"] = json!([1, 0, 0, 0, 1]);
        let err = parse_document(&wrap("spin-input", &input.to_string())).unwrap_err();
        assert!(matches!(err, DocumentError::Spin(_)), "{err:?}");
    }
}
