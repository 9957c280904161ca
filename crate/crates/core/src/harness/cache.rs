//! Append-only JSONL store of computed polynomials, keyed by the unoriented
//! canonical diagram code and the invariant kind.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::diagram::LinkDiagram;

/// Environment variable naming the cache file.
pub const CACHE_ENV: &str = "KNOTSPAN_CACHE";

#[derive(Serialize, Deserialize)]
struct Record {
    code: String,
    kind: String,
    value: String,
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: HashMap<(String, String), String>,
    skipped: usize,
}

/// Text key for a diagram; independent of labelling and orientation.
pub fn diagram_key(d: &LinkDiagram) -> String {
    let code = d.ports().canonical_code();
    let parts: Vec<String> = code.iter().map(u32::to_string).collect();
    parts.join(".")
}

impl Cache {
    /// Loads the file if it exists. Unparseable lines are skipped with a
    /// warning; later records win over earlier ones.
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = Self { path, entries: HashMap::new(), skipped: 0 };
        let file = match File::open(&cache.path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e),
        };
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<Record>(&line) {
                Ok(r) => {
                    cache.entries.insert((r.code, r.kind), r.value);
                }
                Err(e) => {
                    log::warn!("{}:{}: skipping corrupt cache line: {e}", cache.path.display(), i + 1);
                    cache.skipped += 1;
                }
            }
        }
        Ok(cache)
    }

    pub fn from_env() -> io::Result<Option<Self>> {
        std::env::var_os(CACHE_ENV).map(Self::open).transpose()
    }

    pub fn skipped_lines(&self) -> usize {
        self.skipped
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, code: &str, kind: &str) -> Option<&str> {
        self.entries.get(&(code.to_string(), kind.to_string())).map(String::as_str)
    }

    /// Records the value in memory and appends it to the file in a single
    /// write, so concurrent appenders never interleave within a line.
    pub fn put(&mut self, code: &str, kind: &str, value: &str) -> io::Result<()> {
        let record = Record { code: code.to_string(), kind: kind.to_string(), value: value.to_string() };
        let mut line = serde_json::to_string(&record).map_err(io::Error::other)?;
        line.push('\n');
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.write_all(line.as_bytes())?;
        self.entries.insert((record.code, record.kind), record.value);
        Ok(())
    }
}
