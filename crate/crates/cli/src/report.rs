//! The JSON envelope written by `--json`.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 over every input file, each prefixed by its byte length.
    pub input_digest: Option<String>,
    pub parameters: BTreeMap<String, Value>,
    pub results: Value,
    pub version: &'static str,
}

impl RunReport {
    pub fn new(command: &str, inputs: &[Vec<u8>], parameters: BTreeMap<String, Value>, results: Value) -> Self {
        RunReport {
            command: command.to_string(),
            input_digest: digest(inputs),
            parameters,
            results,
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

pub fn digest(inputs: &[Vec<u8>]) -> Option<String> {
    if inputs.is_empty() {
        return None;
    }
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    Some(format!("sha256:{}", hex::encode(h.finalize())))
}

/// Sorted keys, two-space indent, trailing LF.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = sort_keys(serde_json::to_value(value).expect("reports serialize"));
    let mut out = serde_json::to_string_pretty(&v).expect("values serialize");
    out.push('\n');
    out
}

/// Rebuilds every object with keys inserted in sorted order, which holds
/// whichever map backs `serde_json::Map`.
fn sort_keys(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, sort_keys(v))).collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sort_keys).collect()),
        other => other,
    }
}
