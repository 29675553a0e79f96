//! On-disk cache of exact solver results.
//!
//! Entries are keyed by the exact labeled graph and mode, not by
//! isomorphism class. Every hit is re-verified from its certificate before
//! it is returned; an entry that fails is deleted and reported as a miss.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cert::Certificate;
use crate::graph::Graph;
use crate::labeling::Mode;
use crate::solver::SolveStatus;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "LATLAB_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    /// `mode|p|u-v,u-v,...`, the text the file name hashes.
    pub key: String,
    pub mode: Mode,
    pub status: SolveStatus,
    pub value: usize,
    pub lower: usize,
    pub certificate: Certificate,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

#[derive(Debug)]
pub enum Lookup {
    Hit(CacheEntry),
    Miss,
    /// An entry existed but failed re-verification and was removed.
    Discarded(String),
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

pub fn key_text(g: &Graph, mode: Mode) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{mode}|{}|{}", g.order(), edges.join(","))
}

fn key_hash(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// The cache named by `LATLAB_CACHE_DIR`, if set and usable.
    pub fn from_env() -> Option<io::Result<Self>> {
        std::env::var_os(CACHE_ENV)
            .filter(|d| !d.is_empty())
            .map(Cache::open)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", key_hash(key)))
    }

    pub fn lookup(&self, g: &Graph, mode: Mode) -> Lookup {
        let key = key_text(g, mode);
        let path = self.path_for(&key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(_) => return Lookup::Miss,
        };
        match check_entry(&text, g, &key, mode) {
            Ok(entry) => Lookup::Hit(entry),
            Err(reason) => {
                let _ = fs::remove_file(&path);
                Lookup::Discarded(reason)
            }
        }
    }

    /// Stores an exact result. The file is written next to its final name
    /// and renamed into place so readers never see a partial entry.
    pub fn store(&self, g: &Graph, mode: Mode, value: usize, lower: usize, certificate: Certificate) -> io::Result<()> {
        let key = key_text(g, mode);
        let entry = CacheEntry {
            key: key.clone(),
            mode,
            status: SolveStatus::Exact,
            value,
            lower,
            certificate,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        let path = self.path_for(&key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string_pretty(&entry).expect("entry serializes"))?;
        fs::rename(&tmp, &path)
    }
}

fn check_entry(text: &str, g: &Graph, key: &str, mode: Mode) -> Result<CacheEntry, String> {
    let entry: CacheEntry = serde_json::from_str(text).map_err(|e| format!("unreadable entry: {e}"))?;
    if entry.key != key || entry.mode != mode || entry.status != SolveStatus::Exact {
        return Err("entry does not match the requested graph and mode".into());
    }
    let cert = &entry.certificate;
    if cert.mode != mode || cert.graph().map_err(|e| e.to_string())?.edges() != g.edges() || cert.graph.p != g.order() {
        return Err("certificate is for a different graph".into());
    }
    let problems = cert.integrity_problems().map_err(|e| e.to_string())?;
    if !problems.is_empty() {
        return Err(problems.join("; "));
    }
    if cert.distinct != entry.value {
        return Err(format!(
            "certificate has {} distinct weights, entry claims {}",
            cert.distinct, entry.value
        ));
    }
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::labeling::{Labeling, TotalLabeling};

    fn p2() -> (Graph, Certificate) {
        let g = generate(FamilySpec::Path(2)).unwrap();
        let f = TotalLabeling {
            vertex_labels: vec![1, 3],
            edge_labels: vec![2],
        };
        let c = Certificate::new(&g, &Labeling::Total(f), "test");
        (g, c)
    }

    #[test]
    fn store_then_hit() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let (g, c) = p2();
        assert!(matches!(cache.lookup(&g, Mode::Total), Lookup::Miss));
        cache.store(&g, Mode::Total, 2, 2, c).unwrap();
        match cache.lookup(&g, Mode::Total) {
            Lookup::Hit(e) => assert_eq!(e.value, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(cache.lookup(&g, Mode::Edge), Lookup::Miss));
    }

    #[test]
    fn tampered_entry_is_discarded() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let (g, mut c) = p2();
        c.labels.vertex_labels = vec![2, 3];
        cache.store(&g, Mode::Total, 2, 2, c).unwrap();
        assert!(matches!(cache.lookup(&g, Mode::Total), Lookup::Discarded(_)));
        assert!(matches!(cache.lookup(&g, Mode::Total), Lookup::Miss));
    }

    #[test]
    fn wrong_value_is_discarded() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let (g, c) = p2();
        cache.store(&g, Mode::Total, 1, 1, c).unwrap();
        assert!(matches!(cache.lookup(&g, Mode::Total), Lookup::Discarded(_)));
    }

    #[test]
    fn keys_distinguish_labeled_graphs() {
        let a = Graph::new(3, [(0, 1)]).unwrap();
        let b = Graph::new(3, [(1, 2)]).unwrap();
        assert_ne!(key_text(&a, Mode::Total), key_text(&b, Mode::Total));
        assert_ne!(key_text(&a, Mode::Total), key_text(&a, Mode::Edge));
        assert_eq!(key_text(&a, Mode::Edge), "edge|3|0-1");
    }
}
