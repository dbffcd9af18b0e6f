//! JSON files for algebras, bimodules and linear maps.
//!
//! Scalars are strings `"p"` or `"p/q"`. The writer emits a canonical layout
//! (fixed key order, two-space indentation, innermost arrays on one line), so
//! saving a loaded canonical file reproduces it byte for byte.
//!
//! ```text
//! {"kind": "hom-algebra", "dim": n, "labels": [...]?, "mul": [[[..]]], "alpha": [[..]]}
//! {"kind": "hom-bimodule", "algebra": {..} | "path", "mdim": m, "alphaV": [[..]], "rhoL": [[[..]]], "rhoR": [[[..]]]}
//! {"kind": "linear-map", "rows": r, "cols": c, "entries": [[..]]}
//! ```

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

use crate::algebra::HomAlgebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3};
use crate::scalar::Scalar;

/// Anything that can be stored in a file or named in the corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Algebra(HomAlgebra),
    Bimodule(Bimodule),
    Map(Matrix),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "hom-algebra",
            Object::Bimodule(_) => "hom-bimodule",
            Object::Map(_) => "linear-map",
        }
    }
}

type Nested2 = Vec<Vec<Scalar>>;
type Nested3 = Vec<Vec<Vec<Scalar>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    #[allow(dead_code)]
    kind: String,
    dim: usize,
    mul: Nested3,
    alpha: Nested2,
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BimoduleDoc {
    #[allow(dead_code)]
    kind: String,
    algebra: Value,
    mdim: usize,
    #[serde(rename = "alphaV")]
    alpha_v: Nested2,
    #[serde(rename = "rhoL")]
    rho_l: Nested3,
    #[serde(rename = "rhoR")]
    rho_r: Nested3,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDoc {
    #[allow(dead_code)]
    kind: String,
    rows: usize,
    cols: usize,
    entries: Nested2,
}

fn format_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn check_len(field: &str, found: usize, expected: usize) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(format_err(format!("{field} has length {found}, expected {expected}")))
    }
}

fn matrix_from(field: &str, rows: usize, cols: usize, data: Nested2) -> Result<Matrix> {
    check_len(field, data.len(), rows)?;
    for (i, row) in data.iter().enumerate() {
        check_len(&format!("{field}[{i}]"), row.len(), cols)?;
    }
    Matrix::from_rows_sized(rows, cols, data)
}

fn tensor_from(field: &str, dims: [usize; 3], data: Nested3) -> Result<Tensor3> {
    check_len(field, data.len(), dims[0])?;
    for (i, slab) in data.iter().enumerate() {
        check_len(&format!("{field}[{i}]"), slab.len(), dims[1])?;
        for (j, fiber) in slab.iter().enumerate() {
            check_len(&format!("{field}[{i}][{j}]"), fiber.len(), dims[2])?;
        }
    }
    Tensor3::from_nested(dims, data)
}

fn parse_doc<T: for<'de> Deserialize<'de>>(value: Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| format_err(e.to_string()))
}

fn algebra_from_value(value: Value) -> Result<HomAlgebra> {
    let doc: AlgebraDoc = parse_doc(value)?;
    let n = doc.dim;
    let mul = tensor_from("mul", [n, n, n], doc.mul)?;
    let alpha = matrix_from("alpha", n, n, doc.alpha)?;
    let a = HomAlgebra::new(mul, alpha)?;
    match doc.labels {
        Some(labels) => {
            check_len("labels", labels.len(), n)?;
            a.with_labels(labels)
        }
        None => Ok(a),
    }
}

fn object_from_value(value: Value, base: Option<&Path>) -> Result<Object> {
    let kind = value
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| format_err("missing string field \"kind\""))?
        .to_string();
    match kind.as_str() {
        "hom-algebra" => algebra_from_value(value).map(Object::Algebra),
        "hom-bimodule" => {
            let doc: BimoduleDoc = parse_doc(value)?;
            let parent = match doc.algebra {
                Value::String(path) => {
                    let path = match base {
                        Some(dir) => dir.join(path),
                        None => PathBuf::from(path),
                    };
                    match load(&path)? {
                        Object::Algebra(a) => a,
                        other => return Err(format_err(format!("algebra file {} holds a {}", path.display(), other.kind()))),
                    }
                }
                inline @ Value::Object(_) => {
                    if inline.get("kind").and_then(Value::as_str) != Some("hom-algebra") {
                        return Err(format_err("algebra: inline document must have kind \"hom-algebra\""));
                    }
                    algebra_from_value(inline).map_err(|e| match e {
                        Error::Format(m) => format_err(format!("algebra: {m}")),
                        other => other,
                    })?
                }
                _ => return Err(format_err("algebra must be an inline document or a path")),
            };
            let (n, m) = (parent.dim(), doc.mdim);
            let alpha_v = matrix_from("alphaV", m, m, doc.alpha_v)?;
            let rho_l = tensor_from("rhoL", [n, m, m], doc.rho_l)?;
            let rho_r = tensor_from("rhoR", [m, n, m], doc.rho_r)?;
            Bimodule::new(parent, alpha_v, rho_l, rho_r).map(Object::Bimodule)
        }
        "linear-map" => {
            let doc: MapDoc = parse_doc(value)?;
            matrix_from("entries", doc.rows, doc.cols, doc.entries).map(Object::Map)
        }
        other => Err(format_err(format!("unknown kind {other:?}"))),
    }
}

/// Parses a document. Relative algebra paths inside bimodule documents are
/// resolved against `base`.
pub fn from_json_str(text: &str, base: Option<&Path>) -> Result<Object> {
    let value: Value = serde_json::from_str(text).map_err(|e| format_err(e.to_string()))?;
    object_from_value(value, base)
}

pub fn load(path: &Path) -> Result<Object> {
    let text = std::fs::read_to_string(path)?;
    from_json_str(&text, path.parent()).map_err(|e| match e {
        Error::Format(m) => Error::Format(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn save(object: &Object, path: &Path) -> Result<()> {
    std::fs::write(path, to_canonical_json(object))?;
    Ok(())
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn inline_row(row: &[Scalar]) -> String {
    let items: Vec<String> = row.iter().map(|s| quoted(&s.to_string())).collect();
    format!("[{}]", items.join(", "))
}

fn write_matrix(out: &mut String, rows: &[Vec<Scalar>], indent: usize) {
    if rows.is_empty() {
        out.push_str("[]");
        return;
    }
    out.push_str("[\n");
    for (i, row) in rows.iter().enumerate() {
        let _ = write!(out, "{:indent$}{}", "", inline_row(row), indent = indent + 2);
        out.push_str(if i + 1 < rows.len() { ",\n" } else { "\n" });
    }
    let _ = write!(out, "{:indent$}]", "");
}

fn write_tensor(out: &mut String, t: &Tensor3, indent: usize) {
    let nested = t.to_nested();
    if nested.is_empty() {
        out.push_str("[]");
        return;
    }
    out.push_str("[\n");
    for (i, slab) in nested.iter().enumerate() {
        let _ = write!(out, "{:w$}", "", w = indent + 2);
        write_matrix(out, slab, indent + 2);
        out.push_str(if i + 1 < nested.len() { ",\n" } else { "\n" });
    }
    let _ = write!(out, "{:indent$}]", "");
}

type FieldWriter<'a> = Box<dyn Fn(&mut String) + 'a>;

/// Writes `"key": value` fields produced by the closures, one per line.
fn write_object(out: &mut String, indent: usize, fields: Vec<(&str, FieldWriter<'_>)>) {
    out.push_str("{\n");
    let count = fields.len();
    for (i, (key, value)) in fields.into_iter().enumerate() {
        let _ = write!(out, "{:w$}{}: ", "", quoted(key), w = indent + 2);
        value(out);
        out.push_str(if i + 1 < count { ",\n" } else { "\n" });
    }
    let _ = write!(out, "{:indent$}}}", "");
}

fn write_algebra(out: &mut String, a: &HomAlgebra, indent: usize) {
    let mut fields: Vec<(&str, FieldWriter<'_>)> = vec![
        ("kind", Box::new(|o: &mut String| o.push_str(&quoted("hom-algebra")))),
        ("dim", Box::new(move |o: &mut String| o.push_str(&a.dim().to_string()))),
    ];
    if let Some(labels) = a.labels() {
        fields.push((
            "labels",
            Box::new(move |o: &mut String| {
                let items: Vec<String> = labels.iter().map(|l| quoted(l)).collect();
                let _ = write!(o, "[{}]", items.join(", "));
            }),
        ));
    }
    fields.push(("mul", Box::new(move |o: &mut String| write_tensor(o, a.mul(), indent + 2))));
    fields.push(("alpha", Box::new(move |o: &mut String| write_matrix(o, &a.alpha().to_rows(), indent + 2))));
    write_object(out, indent, fields);
}

/// Canonical JSON text of an object, ending with a newline.
pub fn to_canonical_json(object: &Object) -> String {
    let mut out = String::new();
    match object {
        Object::Algebra(a) => write_algebra(&mut out, a, 0),
        Object::Bimodule(v) => write_object(
            &mut out,
            0,
            vec![
                ("kind", Box::new(|o: &mut String| o.push_str(&quoted("hom-bimodule")))),
                ("algebra", Box::new(|o: &mut String| write_algebra(o, v.parent(), 2))),
                ("mdim", Box::new(|o: &mut String| o.push_str(&v.mdim().to_string()))),
                ("alphaV", Box::new(|o: &mut String| write_matrix(o, &v.alpha_v().to_rows(), 2))),
                ("rhoL", Box::new(|o: &mut String| write_tensor(o, v.rho_l(), 2))),
                ("rhoR", Box::new(|o: &mut String| write_tensor(o, v.rho_r(), 2))),
            ],
        ),
        Object::Map(m) => write_object(
            &mut out,
            0,
            vec![
                ("kind", Box::new(|o: &mut String| o.push_str(&quoted("linear-map")))),
                ("rows", Box::new(|o: &mut String| o.push_str(&m.rows().to_string()))),
                ("cols", Box::new(|o: &mut String| o.push_str(&m.cols().to_string()))),
                ("entries", Box::new(|o: &mut String| write_matrix(o, &m.to_rows(), 2))),
            ],
        ),
    }
    out.push('\n');
    out
}
