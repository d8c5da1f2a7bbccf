//! On-disk cache of fitted Hilbert data, keyed by a hash of the tool version,
//! the filtration's canonical encoding and the engine caps.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use hilbfilt::hilbert::fit_hilbert_data;
use hilbfilt::rng::SplitMix64;
use hilbfilt::{Analysis, GoodFiltration, HilbertConfig, HilbertData, Result, XiVector};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// One hit in this many is recomputed and compared.
const SPOT_CHECK_ONE_IN: u64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CacheEntry {
    pub key: String,
    pub tool_version: String,
    pub hilbert: HilbertData,
}

pub struct Cache {
    dir: Option<PathBuf>,
    /// Recompute on every hit instead of spot-checking.
    verify_all: bool,
    rng: SplitMix64,
}

impl Cache {
    /// `HILBFILT_CACHE_DIR`, else `~/.cache/hilbfilt`; disabled when neither
    /// resolves or `enabled` is false.
    pub fn from_env(enabled: bool) -> Self {
        let dir = enabled
            .then(|| {
                std::env::var_os("HILBFILT_CACHE_DIR")
                    .map(PathBuf::from)
                    .or_else(|| {
                        std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache/hilbfilt"))
                    })
            })
            .flatten();
        let verify_all = std::env::var_os("HILBFILT_CACHE_VERIFY").is_some_and(|v| v == "1");
        let seed = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_nanos() as u64);
        Self {
            dir,
            verify_all,
            rng: SplitMix64::new(seed),
        }
    }

    pub fn key(f: &GoodFiltration, cfg: &HilbertConfig) -> String {
        let mut h = Sha256::new();
        h.update(TOOL_VERSION.as_bytes());
        h.update(b"\nhilbert\n");
        h.update(f.canonical_encoding().as_bytes());
        h.update(format!("\nhorizon_cap={};box_cap={}", cfg.horizon_cap, cfg.box_cap).as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    fn load(&self, key: &str) -> Option<HilbertData> {
        let text = fs::read_to_string(self.path(key)?).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == key && entry.tool_version == TOOL_VERSION).then_some(entry.hilbert)
    }

    fn store(&self, key: &str, hilbert: &HilbertData) {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.path(key)) else {
            return;
        };
        let entry = CacheEntry {
            key: key.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            hilbert: hilbert.clone(),
        };
        // A cache that cannot be written is not an error for the caller.
        let _ = fs::create_dir_all(dir).and_then(|()| {
            let tmp = dir.join(format!(".{key}.{}.tmp", std::process::id()));
            let mut file = fs::File::create(&tmp)?;
            file.write_all(
                serde_json::to_string(&entry)
                    .expect("entry serializes")
                    .as_bytes(),
            )?;
            fs::rename(&tmp, &path)
        });
    }

    pub fn hilbert(&mut self, f: &GoodFiltration, cfg: &HilbertConfig) -> Result<HilbertData> {
        let key = Self::key(f, cfg);
        if let Some(hit) = self.load(&key) {
            if !self.verify_all && self.rng.below(SPOT_CHECK_ONE_IN) != 0 {
                return Ok(hit);
            }
            let fresh = fit_hilbert_data(f, cfg)?;
            if fresh != hit {
                eprintln!("warning: stale cache entry {key} replaced");
                self.store(&key, &fresh);
            }
            return Ok(fresh);
        }
        let fresh = fit_hilbert_data(f, cfg)?;
        self.store(&key, &fresh);
        Ok(fresh)
    }

    pub fn analysis(&mut self, f: GoodFiltration, cfg: &HilbertConfig) -> Result<Analysis> {
        let hilbert = self.hilbert(&f, cfg)?;
        let xi = XiVector::from_coefficients(&hilbert.coefficients)?;
        Ok(Analysis {
            filtration: f,
            hilbert,
            xi,
        })
    }
}
