//! On-disk cache: `census/n{k}.g6` files with a versioned manifest, plus
//! graph6 files for searched witnesses under `witnesses/`.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use super::census::TriangulationCensus;
use super::OracleError;
use crate::graph::Graph;

pub const CACHE_ENV: &str = "PLANAR_TURAN_CACHE";
pub const CACHE_VERSION: u32 = 1;
const DEFAULT_DIR: &str = ".planar-turan-cache";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusCache {
    root: PathBuf,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct Manifest {
    version: u32,
    generator: String,
    counts: BTreeMap<usize, usize>,
}

/// `$PLANAR_TURAN_CACHE`, or `.planar-turan-cache` in the working directory.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR))
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> OracleError {
    OracleError::Io(format!("{}: {e}", path.display()))
}

/// Writes via a temporary sibling and a rename so readers never observe a
/// partial file.
fn write_atomic(path: &Path, contents: &str) -> Result<(), OracleError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    }
    static SEQ: AtomicU64 = AtomicU64::new(0);
    let seq = SEQ.fetch_add(1, Ordering::Relaxed);
    let tmp = path.with_extension(format!("tmp{}-{seq}", std::process::id()));
    let mut f = fs::File::create(&tmp).map_err(|e| io_err(&tmp, e))?;
    f.write_all(contents.as_bytes()).map_err(|e| io_err(&tmp, e))?;
    f.sync_all().map_err(|e| io_err(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| io_err(path, e))
}

impl CensusCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        CensusCache { root: root.into() }
    }

    pub fn default_location() -> Self {
        CensusCache::new(default_cache_dir())
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn census_path(&self, n: usize) -> PathBuf {
        self.root.join("census").join(format!("n{n}.g6"))
    }

    fn manifest_path(&self) -> PathBuf {
        self.root.join("census").join("manifest.json")
    }

    fn witness_path(&self, id: &str) -> PathBuf {
        self.root.join("witnesses").join(format!("{id}.g6"))
    }

    fn manifest(&self) -> Result<Manifest, OracleError> {
        let path = self.manifest_path();
        match fs::read_to_string(&path) {
            Ok(text) => serde_json::from_str(&text).map_err(|e| io_err(&path, e)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Manifest {
                version: CACHE_VERSION,
                ..Manifest::default()
            }),
            Err(e) => Err(io_err(&path, e)),
        }
    }

    /// The cached census, or `None` when absent or written by another
    /// generator version.
    pub fn load(&self, n: usize) -> Result<Option<TriangulationCensus>, OracleError> {
        let manifest = self.manifest()?;
        if manifest.version != CACHE_VERSION {
            return Ok(None);
        }
        let Some(&count) = manifest.counts.get(&n) else {
            return Ok(None);
        };
        let path = self.census_path(n);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(io_err(&path, e)),
        };
        let mut codes = std::collections::BTreeSet::new();
        for line in text.lines().filter(|l| !l.is_empty()) {
            let g = Graph::from_graph6(line).map_err(|e| io_err(&path, e))?;
            if g.n() != n {
                return Err(io_err(&path, format!("graph on {} vertices in census {n}", g.n())));
            }
            codes.insert(g.canonical_code());
        }
        if codes.len() != count {
            return Err(io_err(
                &path,
                format!("manifest records {count} classes, file has {}", codes.len()),
            ));
        }
        Ok(Some(TriangulationCensus::from_codes(n, codes)))
    }

    pub fn store(&self, census: &TriangulationCensus) -> Result<(), OracleError> {
        let mut text = String::new();
        for g in census.graphs() {
            text.push_str(&g.to_graph6());
            text.push('\n');
        }
        write_atomic(&self.census_path(census.n()), &text)?;
        let mut manifest = self.manifest()?;
        if manifest.version != CACHE_VERSION {
            manifest = Manifest::default();
        }
        manifest.version = CACHE_VERSION;
        manifest.generator = "vertex-splitting".into();
        manifest.counts.insert(census.n(), census.len());
        let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        write_atomic(&self.manifest_path(), &json)
    }

    pub fn load_witness(&self, id: &str) -> Result<Option<Graph>, OracleError> {
        let path = self.witness_path(id);
        match fs::read_to_string(&path) {
            Ok(t) => Graph::from_graph6(t.trim()).map(Some).map_err(|e| io_err(&path, e)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(io_err(&path, e)),
        }
    }

    pub fn store_witness(&self, id: &str, g: &Graph) -> Result<(), OracleError> {
        write_atomic(&self.witness_path(id), &format!("{}\n", g.to_graph6()))
    }
}
