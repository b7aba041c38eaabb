//! On-disk cache of computed artifacts.
//!
//! Each entry lives in its own file named by the SHA-256 of its key and holds
//! the payload together with the payload's SHA-256. Entries whose checksum
//! does not match are ignored and rewritten.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::format::{matrix_json, parse_matrix_json};
use crate::transition::{build_matrix, LabelOrder, LabeledIntMatrix, MatrixKind};

pub const CACHE_DIR_ENV: &str = "COMPOUND_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".compound-cache";

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    /// Artifact kind, e.g. `"A"` or `"block-2-1"`.
    pub kind: String,
    pub n: usize,
    pub order: LabelOrder,
}

impl CacheKey {
    pub fn new(kind: impl Into<String>, n: usize, order: LabelOrder) -> Self {
        Self { kind: kind.into(), n, order }
    }

    fn address(&self) -> String {
        let text = serde_json::to_string(self).expect("keys always serialize");
        hex_digest(text.as_bytes())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub payload: String,
    pub checksum: String,
}

impl CacheEntry {
    pub fn new(key: CacheKey, payload: String) -> Self {
        let checksum = hex_digest(payload.as_bytes());
        Self { key, payload, checksum }
    }

    pub fn is_intact(&self) -> bool {
        self.checksum == hex_digest(self.payload.as_bytes())
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// `$COMPOUND_CACHE_DIR`, or `./.compound-cache`.
    pub fn from_env() -> Self {
        let dir =
            std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        Self::new(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.address()))
    }

    /// The stored payload, if present, readable and intact.
    pub fn get(&self, key: &CacheKey) -> Option<String> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == *key && entry.is_intact()).then_some(entry.payload)
    }

    pub fn put(&self, key: &CacheKey, payload: &str) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry::new(key.clone(), payload.to_string());
        // write then rename so readers never see a partial file
        let path = self.path(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    pub fn get_or_compute(&self, key: &CacheKey, compute: impl FnOnce() -> Result<String>) -> Result<String> {
        if let Some(hit) = self.get(key) {
            return Ok(hit);
        }
        let payload = compute()?;
        self.put(key, &payload)?;
        Ok(payload)
    }
}

/// A matrix, read from the cache when given one and present there.
pub fn cached_matrix(cache: Option<&Cache>, kind: MatrixKind, n: usize, order: LabelOrder) -> Result<LabeledIntMatrix> {
    let Some(cache) = cache else {
        return build_matrix(kind, n, order);
    };
    let key = CacheKey::new(kind.key(), n, order);
    let payload = cache.get_or_compute(&key, || matrix_json(&build_matrix(kind, n, order)?, None))?;
    parse_matrix_json(&payload)
}
