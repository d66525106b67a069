//! JSON encoding shared by the command-line front end.
//!
//! Floats are written with 17 significant digits (`{:.16e}`), complex
//! numbers as `[re, im]`. Tensor triples are 1-based and canonical
//! (`j < k < l` for `f`, `j ≤ k ≤ l` for `d`); plain vectors are 0-based
//! arrays.

use std::io;

use num_complex::Complex64;
use serde_json::ser::Formatter;
use serde_json::{json, Value};

use crate::algebra::identities;
use crate::algebra::{AlgebraCoords, ComplexCoords};
use crate::matrix::CMatrix;
use crate::SuN;

/// Compact formatter that prints every `f64` with 17 significant digits.
#[derive(Debug, Default, Clone, Copy)]
pub struct PreciseFormatter;

impl Formatter for PreciseFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.write_f64(writer, value as f64)
    }
}

/// Serializes `value` with [`PreciseFormatter`].
pub fn to_string(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, PreciseFormatter);
    serde::Serialize::serialize(value, &mut ser).expect("serializing a Value cannot fail");
    // the formatter only emits ASCII
    String::from_utf8(out).expect("ascii output")
}

pub fn complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn complex_list(zs: &[Complex64]) -> Value {
    Value::Array(zs.iter().map(|z| complex(*z)).collect())
}

pub fn real_list(xs: &[f64]) -> Value {
    json!(xs)
}

pub fn coords(c: &AlgebraCoords) -> Value {
    real_list(c.values())
}

/// `(scalar, vector)` of a linearized element.
pub fn complex_coords(c: &ComplexCoords) -> (Value, Value) {
    (complex(c.scalar), complex_list(c.values()))
}

/// Flat row-major list of `[re, im]` pairs.
pub fn matrix(m: &CMatrix) -> Value {
    let mut out = Vec::with_capacity(m.len());
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            out.push(complex(m[(r, c)]));
        }
    }
    Value::Array(out)
}

/// Parts of the basis document to include.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emit {
    F,
    D,
    Generators,
    All,
}

/// `{"n", "f", "d", "generators", "checks"}` with the sections selected by
/// `emit`; unselected sections are omitted.
pub fn basis_document(su: &SuN, emit: Emit) -> Value {
    let t = &su.tensors;
    let triples = |entries: Vec<((usize, usize, usize), f64)>| {
        Value::Array(
            entries
                .into_iter()
                .map(|((j, k, l), v)| json!([j + 1, k + 1, l + 1, v]))
                .collect(),
        )
    };
    let mut doc = serde_json::Map::new();
    doc.insert("n".into(), json!(su.n()));
    if matches!(emit, Emit::F | Emit::All) {
        doc.insert("f".into(), triples(t.f_entries().collect()));
    }
    if matches!(emit, Emit::D | Emit::All) {
        doc.insert("d".into(), triples(t.d_entries().collect()));
    }
    if matches!(emit, Emit::Generators | Emit::All) {
        doc.insert(
            "generators".into(),
            Value::Array(su.basis.generators().iter().map(matrix).collect()),
        );
    }
    let jacobi = identities::jacobi_ff_residual(t).max(identities::jacobi_fd_residual(t));
    doc.insert(
        "checks".into(),
        json!({
            "jacobi_residual": jacobi,
            "orthonormality_defect": identities::orthonormality_defect(&su.basis),
            "commutator_residual": identities::commutator_residual(&su.basis, t),
            "anticommutator_residual": identities::anticommutator_residual(&su.basis, t),
        }),
    );
    Value::Object(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        let s = to_string(&json!({"x": 0.1, "k": 3, "z": complex(Complex64::new(1.0, -0.5))}));
        assert_eq!(
            s,
            r#"{"k":3,"x":1.0000000000000001e-1,"z":[1.0000000000000000e0,-5.0000000000000000e-1]}"#
        );
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["x"].as_f64(), Some(0.1));
    }

    #[test]
    fn su2_document() {
        let doc = basis_document(&SuN::new(2).unwrap(), Emit::All);
        assert_eq!(doc["d"].as_array().unwrap().len(), 0);
        assert_eq!(doc["f"], json!([[1, 2, 3, 1.0]]));
        assert_eq!(doc["generators"].as_array().unwrap().len(), 3);
        assert_eq!(
            doc["generators"][1],
            json!([[0.0, 0.0], [0.0, -1.0], [0.0, 1.0], [0.0, 0.0]])
        );
    }

    #[test]
    fn selector_omits_sections() {
        let doc = basis_document(&SuN::new(3).unwrap(), Emit::F);
        assert!(doc.get("d").is_none() && doc.get("generators").is_none());
        assert!(doc["checks"]["jacobi_residual"].as_f64().unwrap() < 1e-12);
    }
}
