//! Run manifests embedded in every emitted artifact.
//!
//! JSON outputs carry the manifest as a `manifest` field; text outputs
//! (edge lists, CSVs) carry it as a single `# manifest: {...}` comment line.
//! With `--stable-output` the timestamp is omitted, making reruns
//! byte-identical.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

type ParamMap = BTreeMap<String, String>;

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub params: ParamMap,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp_unix: Option<u64>,
}

impl RunManifest {
    pub fn new(stable: bool, subcommand: &'static str, seed: Option<u64>) -> RunManifest {
        let timestamp_unix = if stable {
            None
        } else {
            Some(
                SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
            )
        };
        RunManifest {
            tool: "fragility",
            version: env!("CARGO_PKG_VERSION"),
            subcommand,
            seed,
            params: ParamMap::new(),
            outputs: Vec::new(),
            timestamp_unix,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<String>) -> RunManifest {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn output(mut self, path: &Path) -> RunManifest {
        self.outputs.push(path.display().to_string());
        self
    }

    /// One-line form for `#`-comment embedding.
    pub fn comment(&self) -> String {
        format!(
            "manifest: {}",
            serde_json::to_string(self).expect("manifest serializes")
        )
    }
}
