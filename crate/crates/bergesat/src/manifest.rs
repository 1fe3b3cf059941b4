//! Run manifests: one JSON record per CLI invocation for reproducibility.

use crate::error::Result;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    /// path -> sha256 of each input file, sorted by path.
    pub input_digests: Vec<(String, String)>,
    pub seed: u64,
    pub node_budget: u64,
    pub outcome: serde_json::Value,
    /// Excluded from determinism comparisons.
    pub wall_time_ms: u128,
}

impl RunManifest {
    /// Serialization with the timing field zeroed, for byte-for-byte
    /// comparison of repeated runs.
    pub fn deterministic_json(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_ms = 0;
        serde_json::to_string_pretty(&copy).expect("manifest serializes")
    }
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(format!("{:x}", hasher.finalize()))
}
