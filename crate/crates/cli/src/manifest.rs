use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Provenance block attached to every `--json` output. Apart from
/// `wall_time_ms`, identical inputs and seed give an identical manifest.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub args: Value,
    pub seed: Option<u64>,
    pub version: &'static str,
    pub inputs: Vec<InputDigest>,
    pub wall_time_ms: f64,
}

/// Collects input digests while a subcommand runs.
#[derive(Debug, Default)]
pub struct Inputs {
    digests: Vec<InputDigest>,
}

impl Inputs {
    /// Reads a file and records its SHA-256.
    pub fn read(&mut self, path: &Path) -> std::io::Result<Vec<u8>> {
        let bytes = fs::read(path)?;
        self.digests.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        Ok(bytes)
    }

    pub fn into_manifest(self, subcommand: &str, args: Value, seed: Option<u64>, started: Instant) -> RunManifest {
        RunManifest {
            subcommand: subcommand.to_string(),
            args,
            seed,
            version: env!("CARGO_PKG_VERSION"),
            inputs: self.digests,
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }
}
