//! JSON rendering of scalars, weights and elements.
//!
//! Generator indices are 1-based in every external format, matching the
//! text rendering of elements.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qgc_core::center::ToralPart;
use qgc_core::linalg::Matrix;
use qgc_core::qgroup::{Element, Word};
use qgc_core::rootdata::Weight;
use qgc_core::scalars::{LaurentBi, Scalar};
use serde_json::{json, Value};

/// How scalars are rendered: structured for `--format json`, canonical
/// strings for text reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Json,
    Text,
}

fn int(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => json!(x),
        None => json!(c.to_string()),
    }
}

fn poly(terms: &[(BigInt, i32, i32)]) -> Value {
    Value::Array(terms.iter().map(|(c, a, b)| json!([int(c), a, b])).collect())
}

pub fn scalar(x: &Scalar, style: Style) -> Value {
    match style {
        Style::Text => json!(x.to_string()),
        Style::Json => {
            let (num, den) = x.json_parts();
            json!({"num": poly(&num), "den": poly(&den)})
        }
    }
}

fn parse_int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

fn parse_poly(v: &Value) -> Option<LaurentBi> {
    let mut terms = Vec::new();
    for t in v.as_array()? {
        let t = t.as_array()?;
        if t.len() != 3 {
            return None;
        }
        let a = i32::try_from(t[1].as_i64()?).ok()?;
        let b = i32::try_from(t[2].as_i64()?).ok()?;
        terms.push(((a, b), parse_int(&t[0])?));
    }
    Some(LaurentBi::from_terms(terms))
}

/// Inverse of [`scalar`] in the JSON style.
pub fn parse_scalar(v: &Value) -> Option<Scalar> {
    let num = parse_poly(v.get("num")?)?;
    let den = parse_poly(v.get("den")?)?;
    Scalar::from_parts(num, den).ok()
}

pub fn weight(w: &Weight) -> Value {
    json!(w.0)
}

pub fn word(w: &Word) -> Value {
    Value::Array(w.iter().map(|x| json!(*x as u32 + 1)).collect())
}

pub fn word_text(w: &Word) -> String {
    let parts: Vec<String> = w.iter().map(|x| (x + 1).to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn element(x: &Element, style: Style) -> Value {
    Value::Array(
        x.iter()
            .map(|(t, c)| {
                json!({
                    "f": word(&t.f),
                    "eta": t.t.eta,
                    "phi": t.t.phi,
                    "e": word(&t.e),
                    "coeff": scalar(c, style),
                })
            })
            .collect(),
    )
}

pub fn toral_part(t: &ToralPart, style: Style) -> Value {
    Value::Array(
        t.iter()
            .map(|(m, c)| json!({"eta": m.eta, "phi": m.phi, "coeff": scalar(c, style)}))
            .collect(),
    )
}

pub fn matrix(m: &Matrix, style: Style) -> Value {
    Value::Array(
        (0..m.rows)
            .map(|i| Value::Array((0..m.cols).map(|j| scalar(m.get(i, j), style)).collect()))
            .collect(),
    )
}
