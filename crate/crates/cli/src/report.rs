//! Structured run reports: command echo, input digest, outputs, and named
//! checks with witnesses on failure.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub outputs: serde_json::Value,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(command: String, input_digest: String) -> RunReport {
        RunReport {
            command,
            input_digest,
            outputs: serde_json::Value::Object(serde_json::Map::new()),
            checks: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: serde_json::Value) {
        self.outputs
            .as_object_mut()
            .expect("outputs is an object")
            .insert(key.to_string(), value);
    }

    pub fn check(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            witness: if pass { None } else { witness },
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Human-readable rendering: outputs first, then one line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        render_value(&mut out, "", &self.outputs);
        for check in &self.checks {
            if check.pass {
                out.push_str(&format!("check {}: pass\n", check.name));
            } else {
                let witness = check.witness.as_deref().unwrap_or("no witness");
                out.push_str(&format!("check {}: FAIL ({witness})\n", check.name));
            }
        }
        out
    }
}

fn render_value(out: &mut String, prefix: &str, value: &serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                render_value(out, &key, v);
            }
        }
        serde_json::Value::Array(items)
            if items.iter().all(|v| !v.is_object() && !v.is_array()) =>
        {
            let rendered: Vec<String> = items.iter().map(render_scalar).collect();
            out.push_str(&format!("{prefix}: [{}]\n", rendered.join(", ")));
        }
        serde_json::Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                render_value(out, &format!("{prefix}[{i}]"), v);
            }
        }
        scalar => {
            out.push_str(&format!("{prefix}: {}\n", render_scalar(scalar)));
        }
    }
}

fn render_scalar(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Hex SHA-256 of raw bytes; the `inputs digest` of every report.
pub fn digest_bytes(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}
