//! Run manifests: content digests of inputs and outputs, wall time, and a
//! pass/fail summary, written next to the first output (or into the working
//! directory for output-less commands).

use anyhow::Context;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Serialize)]
struct RunManifest {
    command: String,
    parameters: String,
    inputs: BTreeMap<String, String>,
    outputs: BTreeMap<String, String>,
    wall_ms: u128,
    pass: bool,
    summary: Vec<String>,
}

pub struct ManifestBuilder {
    command: String,
    parameters: String,
    inputs: BTreeMap<String, String>,
    outputs: BTreeMap<String, String>,
    summary: Vec<String>,
    started: Instant,
}

impl ManifestBuilder {
    pub fn new(command: &str, parameters: String) -> Self {
        ManifestBuilder {
            command: command.to_string(),
            parameters,
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            summary: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn input(&mut self, path: &Path) -> anyhow::Result<()> {
        self.inputs
            .insert(path.display().to_string(), digest(path)?);
        Ok(())
    }

    pub fn output(&mut self, path: &Path) -> anyhow::Result<()> {
        self.outputs
            .insert(path.display().to_string(), digest(path)?);
        Ok(())
    }

    pub fn summary(&mut self, line: String) {
        self.summary.push(line);
    }

    pub fn summaries(&mut self, lines: Vec<String>) {
        self.summary.extend(lines);
    }

    /// Writes the manifest next to `anchor` when given, otherwise as
    /// `<command>.manifest.json` in the working directory.
    pub fn finish(self, anchor: Option<&Path>, pass: bool) -> anyhow::Result<PathBuf> {
        let manifest = RunManifest {
            command: self.command.clone(),
            parameters: self.parameters,
            inputs: self.inputs,
            outputs: self.outputs,
            wall_ms: self.started.elapsed().as_millis(),
            pass,
            summary: self.summary,
        };
        let path = match anchor {
            Some(p) => {
                let mut s = p.as_os_str().to_owned();
                s.push(".manifest.json");
                PathBuf::from(s)
            }
            None => PathBuf::from(format!(
                "{}.manifest.json",
                self.command.replace(' ', "-")
            )),
        };
        std::fs::write(&path, serde_json::to_string_pretty(&manifest)?)
            .with_context(|| path.display().to_string())?;
        Ok(path)
    }
}

/// sha256 of the file contents, lowercase hex.
fn digest(path: &Path) -> anyhow::Result<String> {
    let bytes = std::fs::read(path).with_context(|| path.display().to_string())?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(hex::encode(hasher.finalize()))
}
