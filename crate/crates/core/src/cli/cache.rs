//! On-disk table cache: one JSON file per `(variant, k)`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::numbers::Count;
use crate::oracle::Variant;

pub const CACHE_ENV: &str = "PSEUDOKNOT_CACHE";

pub type Entries = BTreeMap<(usize, Option<usize>), Count>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub n: usize,
    pub l: Option<usize>,
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub k: usize,
    pub variant: String,
    pub entries: Vec<CacheEntry>,
}

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// The flag wins over the environment variable; neither means no cache.
    pub fn from_flag_or_env(flag: Option<PathBuf>, env: Option<OsString>) -> Option<Self> {
        flag.or_else(|| env.filter(|v| !v.is_empty()).map(PathBuf::from))
            .map(TableCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, k: usize, variant: Variant) -> PathBuf {
        self.dir.join(format!("{}-k{k}.json", variant.name()))
    }

    /// Reads stored entries. A missing file is an empty cache; an unreadable
    /// or mismatched one is reported on `stderr` and treated as empty.
    pub fn load(&self, k: usize, variant: Variant, stderr: &mut dyn Write) -> Entries {
        let path = self.path(k, variant);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Entries::new(),
            Err(e) => {
                let _ = writeln!(stderr, "warning: ignoring cache {}: {e}", path.display());
                return Entries::new();
            }
        };
        match parse(&text, k, variant) {
            Ok(entries) => entries,
            Err(reason) => {
                let _ = writeln!(stderr, "warning: ignoring cache {}: {reason}", path.display());
                Entries::new()
            }
        }
    }

    /// Writes all entries through a temporary file and a rename.
    pub fn store(&self, k: usize, variant: Variant, entries: &Entries) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let file = CacheFile {
            k,
            variant: variant.name().to_string(),
            entries: entries
                .iter()
                .map(|(&(n, l), c)| CacheEntry {
                    n,
                    l,
                    count: c.to_string(),
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&file).map_err(io::Error::other)?;
        text.push('\n');
        let path = self.path(k, variant);
        let tmp = self
            .dir
            .join(format!(".{}-k{k}.json.{}.tmp", variant.name(), std::process::id()));
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}

fn parse(text: &str, k: usize, variant: Variant) -> Result<Entries, String> {
    let file: CacheFile = serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
    if file.k != k || file.variant != variant.name() {
        return Err(format!(
            "holds {} k={} but {} k={k} was expected",
            file.variant,
            file.k,
            variant.name()
        ));
    }
    let mut out = Entries::new();
    for e in file.entries {
        let count: Count = e.count.parse().map_err(|_| format!("bad count {:?}", e.count))?;
        if count.sign() == num_bigint::Sign::Minus {
            return Err(format!("negative count {count}"));
        }
        out.insert((e.n, e.l), count);
    }
    Ok(out)
}
