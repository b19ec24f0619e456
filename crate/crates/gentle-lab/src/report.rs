//! Structured reports for the command line: a deterministic JSON tree with
//! sorted keys, no floating point anywhere, byte-stable for golden-file
//! tests.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn input_digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Wrap a result tree with the command id, input digest, and tool version.
pub fn make_report(command: &str, input: Option<&str>, result: Value) -> Value {
    json!({
        "command": command,
        "input_sha256": input.map(input_digest),
        "result": result,
        "tool_version": env!("CARGO_PKG_VERSION"),
    })
}

/// Serialize byte-stably: keys are already sorted (the map type is ordered),
/// two-space indentation, trailing newline.
pub fn to_stable_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_and_sorted() {
        let r = make_report("info", Some("vertices: 1\n"), json!({"b": 1, "a": 2}));
        let s = to_stable_string(&r);
        assert_eq!(s, to_stable_string(&r));
        // Keys come out sorted regardless of insertion order.
        let a = s.find("\"a\"").unwrap();
        let b = s.find("\"b\"").unwrap();
        assert!(a < b);
    }
}
