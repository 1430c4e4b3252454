//! Content-addressed JSON results: one file per key, named by the SHA-256 of the key.

use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub struct Cache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    version: String,
    value: serde_json::Value,
}

impl Cache {
    pub fn new(dir: PathBuf) -> Self {
        Cache { dir }
    }

    fn path(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(format!("{}|{key}", env!("CARGO_PKG_VERSION")).as_bytes());
        let name: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{name}.json"))
    }

    /// A stored value, if present and written for the same key and version.
    pub fn get(&self, key: &str) -> Option<serde_json::Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let e: Entry = serde_json::from_str(&text).ok()?;
        (e.key == key && e.version == env!("CARGO_PKG_VERSION")).then_some(e.value)
    }

    pub fn put(&self, key: &str, value: &serde_json::Value) -> Result<()> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let e = Entry { key: key.into(), version: env!("CARGO_PKG_VERSION").into(), value: value.clone() };
        let path = self.path(key);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&e)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}
