//! Reports: a status plus a JSON payload.

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Value,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Value => "value",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Fail => 1,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub status: Status,
    pub payload: Value,
}

impl Report {
    pub fn value(command: &'static str, payload: Value) -> Self {
        Report { command, status: Status::Value, payload }
    }

    pub fn check(command: &'static str, ok: bool, payload: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Report { command, status, payload }
    }

    /// A module error surfaced as a failed report.
    pub fn error(command: &'static str, e: &qgc_core::Error) -> Self {
        Report {
            command,
            status: Status::Fail,
            payload: json!({"error": format!("{e:?}"), "message": e.to_string()}),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "status": self.status.as_str(),
            "payload": self.payload,
        })
    }

    /// Compact JSON followed by a newline; byte-identical for identical input.
    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    /// One `key: value` line per payload field.
    pub fn render_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.status.as_str());
        let empty = Map::new();
        let fields = self.payload.as_object().unwrap_or(&empty);
        for (k, v) in fields {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
        out
    }
}
