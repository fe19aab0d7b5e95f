use serde_json::{json, Value};

use crate::error::Error;

pub const SCHEMA: &str = "kolchin-report/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::MalformedPath(_)
        | Error::Domain(_)
        | Error::GraphMismatch
        | Error::IndexOutOfRange { .. } => EXIT_INPUT,
        Error::SearchExhausted { .. } => EXIT_EXHAUSTED,
        Error::NotAbelian(_) | Error::PropertyViolation { .. } | Error::Internal { .. } => EXIT_VIOLATION,
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::MalformedPath(_) => "malformed-path",
        Error::Domain(_) => "domain",
        Error::GraphMismatch => "graph-mismatch",
        Error::IndexOutOfRange { .. } => "index-out-of-range",
        Error::SearchExhausted { .. } => "search-exhausted",
        Error::NotAbelian(_) => "not-abelian",
        Error::PropertyViolation { .. } => "property-violation",
        Error::Internal { .. } => "internal",
    }
}

pub fn error_json(e: &Error) -> Value {
    let mut v = json!({
        "kind": error_kind(e),
        "message": e.to_string(),
    });
    match e {
        Error::Parse { line, col, .. } => {
            v["line"] = json!(line);
            v["col"] = json!(col);
        }
        Error::SearchExhausted { stratum, bound } => {
            v["stratum"] = json!(stratum);
            v["bound"] = json!(bound);
        }
        Error::NotAbelian(w) => v["witness"] = json!(w),
        Error::PropertyViolation { witness, .. } | Error::Internal { witness, .. } => v["witness"] = json!(witness),
        _ => {}
    }
    v
}

/// The versioned envelope shared by every command.
pub fn envelope(command: &str, exit: i32, result: Option<Value>, error: Option<Value>) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "status": match exit {
            EXIT_OK => "ok",
            EXIT_INPUT => "input-error",
            EXIT_EXHAUSTED => "search-exhausted",
            _ => "violation",
        },
        "exit_code": exit,
        "result": result,
        "error": error,
    })
}

pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}
