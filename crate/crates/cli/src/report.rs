//! JSON rendering. Exact values carry both the surd literal and a float;
//! object keys come out sorted, so output is byte-stable.

use lineword::{CfExpansion, Line3, Surd};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

pub fn exact(x: &Surd) -> Value {
    json!({ "exact": x.to_string(), "float": x.to_f64() })
}

pub fn direction(line: &Line3) -> Value {
    json!([exact(line.dx()), exact(line.dy()), exact(line.dz())])
}

pub fn expansion(cf: &CfExpansion) -> Value {
    json!({
        "quotients": cf.quotients,
        "complete": cf.complete,
        "value": cf.value().map(|v| exact(&v)),
        "cylinder": cf.cylinder().map(|(lo, hi)| json!([exact(&lo), exact(&hi)])),
    })
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Adds the version fields and prints.
pub fn emit(command: &str, body: Value) {
    let mut map = match body {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    map.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    map.insert("command".into(), json!(command));
    let text = serde_json::to_string_pretty(&Value::Object(map)).expect("values serialize");
    output(&text);
    output("\n");
}

/// Writes to stdout; a closed pipe ends the process quietly.
pub fn output(text: &str) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().lock().write_all(text.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("lineword: cannot write output: {e}");
        std::process::exit(2);
    }
}
