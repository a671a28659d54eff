//! The spec-file format: a single JSON document describing either an
//! abstract spec (prime, exponent, pole and zero pairs) or a concrete
//! defining equation over an explicit finite field.
//!
//! ```json
//! {"mode": "abstract", "p": 2, "n": 3,
//!  "poles": [[1,1],[1,1],[1,1]], "zeros": [[1,1],[1,1]]}
//! ```
//!
//! ```json
//! {"mode": "concrete",
//!  "field": {"p": 2, "k": 3, "modulus": [1,1,0,1]},
//!  "alpha": [1],
//!  "L": [[1],[1],[1]],
//!  "numerator": [{"poly": [[0],[1]], "mult": 2}],
//!  "denominator": [{"poly": [[0,1],[1]], "mult": 1}]}
//! ```
//!
//! Field elements are little-endian base-`p` digit lists in the power basis
//! of the modulus; polynomials are lists of elements, low degree first.
//! All integers are base 10.  The canonical serialization sorts keys,
//! strips whitespace and trims trailing zero digits, so parsing followed by
//! serialization is the identity on canonical documents.

use serde_json::{json, Map, Value};

use super::field::FiniteField;
use super::poly::FieldPoly;
use super::validate::ConcreteSpec;
use crate::model::{build_spec, FieldSpec};
use crate::{Error, Result};

/// Abstract input: the combinatorial datum before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractSpec {
    pub p: i64,
    pub n: u32,
    pub poles: Vec<(i64, i64)>,
    pub zeros: Vec<(i64, i64)>,
}

impl AbstractSpec {
    pub fn build(&self) -> Result<FieldSpec> {
        build_spec(self.p, self.n, &self.poles, &self.zeros)
    }
}

/// A parsed spec file, in either mode.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecDocument {
    Abstract(AbstractSpec),
    Concrete(ConcreteSpec),
}

fn get<'v>(obj: &'v Map<String, Value>, key: &str) -> Result<&'v Value> {
    obj.get(key).ok_or_else(|| Error::SchemaError(key.to_string()))
}

fn as_object<'v>(value: &'v Value, key: &str) -> Result<&'v Map<String, Value>> {
    value.as_object().ok_or_else(|| Error::SchemaError(key.to_string()))
}

fn as_i64(value: &Value, key: &str) -> Result<i64> {
    value.as_i64().ok_or_else(|| Error::SchemaError(key.to_string()))
}

fn as_array<'v>(value: &'v Value, key: &str) -> Result<&'v Vec<Value>> {
    value.as_array().ok_or_else(|| Error::SchemaError(key.to_string()))
}

fn int_list(value: &Value, key: &str) -> Result<Vec<i64>> {
    as_array(value, key)?.iter().map(|v| as_i64(v, key)).collect()
}

fn pair_list(value: &Value, key: &str) -> Result<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    for (idx, item) in as_array(value, key)?.iter().enumerate() {
        let label = format!("{key}[{idx}]");
        let pair = item.as_array().ok_or_else(|| Error::SchemaError(label.clone()))?;
        if pair.len() != 2 {
            return Err(Error::SchemaError(label));
        }
        out.push((as_i64(&pair[0], &label)?, as_i64(&pair[1], &label)?));
    }
    Ok(out)
}

fn digit_rows(value: &Value, key: &str) -> Result<Vec<Vec<i64>>> {
    as_array(value, key)?
        .iter()
        .enumerate()
        .map(|(idx, row)| int_list(row, &format!("{key}[{idx}]")))
        .collect()
}

fn factor_list(field: &FiniteField, value: &Value, key: &str) -> Result<Vec<(FieldPoly, i64)>> {
    let mut out = Vec::new();
    for (idx, item) in as_array(value, key)?.iter().enumerate() {
        let label = format!("{key}[{idx}]");
        let obj = as_object(item, &label)?;
        let rows = digit_rows(
            get(obj, "poly").map_err(|_| Error::SchemaError(format!("{label}.poly")))?,
            &format!("{label}.poly"),
        )?;
        let poly = FieldPoly::from_digit_rows(field, &rows)
            .map_err(|_| Error::SchemaError(format!("{label}.poly")))?;
        let mult = as_i64(
            get(obj, "mult").map_err(|_| Error::SchemaError(format!("{label}.mult")))?,
            &format!("{label}.mult"),
        )?;
        out.push((poly, mult));
    }
    Ok(out)
}

/// Parses a spec file.  Malformed JSON yields [`Error::SyntaxError`] with
/// position information; a structurally valid document with a missing or
/// mistyped field yields [`Error::SchemaError`] naming the field.
pub fn parse_spec_file(text: &str) -> Result<SpecDocument> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::SyntaxError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = as_object(&value, "document")?;
    let mode = get(obj, "mode")?.as_str().ok_or_else(|| Error::SchemaError("mode".into()))?;
    match mode {
        "abstract" => {
            let p = as_i64(get(obj, "p")?, "p")?;
            let n = as_i64(get(obj, "n")?, "n")?;
            if n < 0 || n > u32::MAX as i64 {
                return Err(Error::SchemaError("n".into()));
            }
            let poles = pair_list(get(obj, "poles")?, "poles")?;
            let zeros = pair_list(get(obj, "zeros")?, "zeros")?;
            Ok(SpecDocument::Abstract(AbstractSpec { p, n: n as u32, poles, zeros }))
        }
        "concrete" => {
            let field_obj = as_object(get(obj, "field")?, "field")?;
            let p = as_i64(
                get(field_obj, "p").map_err(|_| Error::SchemaError("field.p".into()))?,
                "field.p",
            )?;
            let k = as_i64(
                get(field_obj, "k").map_err(|_| Error::SchemaError("field.k".into()))?,
                "field.k",
            )?;
            if k < 1 {
                return Err(Error::SchemaError("field.k".into()));
            }
            let modulus = int_list(
                get(field_obj, "modulus")
                    .map_err(|_| Error::SchemaError("field.modulus".into()))?,
                "field.modulus",
            )?;
            let field = FiniteField::new(p, k as usize, &modulus)?;

            let alpha = field
                .element(&int_list(get(obj, "alpha")?, "alpha")?)
                .map_err(|_| Error::SchemaError("alpha".into()))?;
            let l_rows = digit_rows(get(obj, "L")?, "L")?;
            if l_rows.is_empty() {
                return Err(Error::SchemaError("L".into()));
            }
            let l_coeffs = l_rows
                .iter()
                .map(|row| field.element(row))
                .collect::<Result<Vec<_>>>()
                .map_err(|_| Error::SchemaError("L".into()))?;
            let numerator = factor_list(&field, get(obj, "numerator")?, "numerator")?;
            let denominator = factor_list(&field, get(obj, "denominator")?, "denominator")?;
            Ok(SpecDocument::Concrete(ConcreteSpec {
                field,
                alpha,
                l_coeffs,
                numerator,
                denominator,
            }))
        }
        _ => Err(Error::SchemaError("mode".into())),
    }
}

/// Canonical JSON for a document: sorted keys, no whitespace, digits
/// normalized and trimmed.  `canonical_spec_json(parse(text))` is a fixed
/// point of parse-then-serialize.
pub fn canonical_spec_json(doc: &SpecDocument) -> String {
    let value = match doc {
        SpecDocument::Abstract(a) => json!({
            "mode": "abstract",
            "p": a.p,
            "n": a.n,
            "poles": a.poles.iter().map(|&(m, d)| json!([m, d])).collect::<Vec<_>>(),
            "zeros": a.zeros.iter().map(|&(m, e)| json!([m, e])).collect::<Vec<_>>(),
        }),
        SpecDocument::Concrete(c) => {
            let poly_json = |poly: &FieldPoly| {
                poly.coeffs().iter().map(|el| json!(el.trimmed_digits())).collect::<Vec<_>>()
            };
            let factors_json = |factors: &[(FieldPoly, i64)]| {
                factors
                    .iter()
                    .map(|(poly, mult)| json!({"poly": poly_json(poly), "mult": mult}))
                    .collect::<Vec<_>>()
            };
            json!({
                "mode": "concrete",
                "field": {
                    "p": c.field.p(),
                    "k": c.field.extension_degree(),
                    "modulus": c.field.modulus(),
                },
                "alpha": c.alpha.trimmed_digits(),
                "L": c.l_coeffs.iter().map(|el| json!(el.trimmed_digits())).collect::<Vec<_>>(),
                "numerator": factors_json(&c.numerator),
                "denominator": factors_json(&c.denominator),
            })
        }
    };
    // serde_json maps are sorted by key and compact by default.
    value.to_string()
}
