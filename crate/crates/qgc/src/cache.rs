//! Optional on-disk memoisation of graded bases, enabled by `QGC_CACHE_DIR`.
//!
//! One file per rank under a versioned subdirectory; deleting it is always safe.

use std::fs;
use std::path::{Path, PathBuf};

use qgc_core::linalg::SparseRow;
use qgc_core::qgroup::{GradedBasis, QuantumGroup, Side};
use serde_json::{json, Value};

use crate::render::{parse_scalar, scalar, Style};

pub const ENV: &str = "QGC_CACHE_DIR";
pub const VERSION: u32 = 1;

pub fn file(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("v{VERSION}")).join(format!("bases-n{n}.json"))
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::E => "E",
        Side::F => "F",
    }
}

pub fn to_json(q: &QuantumGroup) -> Value {
    let bases: Vec<Value> = q
        .built_bases()
        .iter()
        .map(|b| {
            let rows: Vec<Value> = b
                .ideal_export()
                .iter()
                .map(|r| Value::Array(r.iter().map(|(c, x)| json!([c, scalar(x, Style::Json)])).collect()))
                .collect();
            json!({"side": side_name(b.side), "nu": b.nu, "rows": rows})
        })
        .collect();
    json!({"version": VERSION, "n": q.rank(), "bases": bases})
}

fn parse_basis(v: &Value) -> Option<GradedBasis> {
    let side = match v.get("side")?.as_str()? {
        "E" => Side::E,
        "F" => Side::F,
        _ => return None,
    };
    let nu: Vec<i32> = v
        .get("nu")?
        .as_array()?
        .iter()
        .map(|x| x.as_i64().and_then(|x| i32::try_from(x).ok()))
        .collect::<Option<_>>()?;
    let mut rows = Vec::new();
    for r in v.get("rows")?.as_array()? {
        let mut row = SparseRow::new();
        for entry in r.as_array()? {
            let col = usize::try_from(entry.get(0)?.as_u64()?).ok()?;
            row.insert(col, parse_scalar(entry.get(1)?)?);
        }
        rows.push(row);
    }
    GradedBasis::from_ideal(side, &nu, rows).ok()
}

/// Installs every basis found in `doc`; returns how many were loaded.
pub fn from_json(q: &QuantumGroup, doc: &Value) -> Result<usize, String> {
    if doc.get("version").and_then(Value::as_u64) != Some(VERSION as u64) {
        return Err("cache version mismatch".into());
    }
    if doc.get("n").and_then(Value::as_u64) != Some(q.rank() as u64) {
        return Err("cache rank mismatch".into());
    }
    let list = doc.get("bases").and_then(Value::as_array).ok_or("malformed cache")?;
    let mut count = 0;
    for v in list {
        let b = parse_basis(v).ok_or("malformed basis entry")?;
        q.preload_basis(b).map_err(|e| e.to_string())?;
        count += 1;
    }
    Ok(count)
}

pub fn load(q: &QuantumGroup, dir: &Path) -> Result<usize, String> {
    let path = file(dir, q.rank());
    if !path.exists() {
        return Ok(0);
    }
    let text = fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    from_json(q, &doc)
}

/// Writes all bases built so far, via a temporary file and a rename.
pub fn store(q: &QuantumGroup, dir: &Path) -> Result<(), String> {
    let path = file(dir, q.rank());
    let parent = path.parent().expect("versioned subdirectory");
    fs::create_dir_all(parent).map_err(|e| e.to_string())?;
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_string(&to_json(q)).expect("serializable")).map_err(|e| e.to_string())?;
    fs::rename(&tmp, &path).map_err(|e| e.to_string())
}
