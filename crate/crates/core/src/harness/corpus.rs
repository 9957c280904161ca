//! Corpus files: one diagram per line, `NAME [c=INT] [alt=0|1] [qa=0|1] : PD`.

use std::path::Path;

use thiserror::Error;

use crate::diagram::{parse_pd, DiagramError, LinkDiagram};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub pd: LinkDiagram,
    /// Table crossing number of the link, when the file declares it.
    pub declared_crossings: Option<usize>,
    pub declared_alternating: Option<bool>,
    pub declared_quasi_alternating: Option<bool>,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, pd: LinkDiagram) -> Self {
        Self {
            name: name.into(),
            pd,
            declared_crossings: None,
            declared_alternating: None,
            declared_quasi_alternating: None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LineError {
    #[error("missing ` : ` separator")]
    MissingSeparator,
    #[error("missing name")]
    MissingName,
    #[error("bad annotation `{0}`")]
    Annotation(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    /// 1-based line numbers of rejected lines, with the reason.
    pub rejected: Vec<(usize, LineError)>,
}

pub fn parse_line(line: &str) -> Result<CorpusEntry, LineError> {
    let (head, pd) = line.split_once(':').ok_or(LineError::MissingSeparator)?;
    let mut words = head.split_whitespace();
    let name = words.next().ok_or(LineError::MissingName)?;
    let mut entry = CorpusEntry::new(name, parse_pd(pd)?);
    for w in words {
        let bad = || LineError::Annotation(w.to_string());
        let (key, value) = w.split_once('=').ok_or_else(bad)?;
        let flag = || match value {
            "0" => Ok(false),
            "1" => Ok(true),
            _ => Err(bad()),
        };
        match key {
            "c" => entry.declared_crossings = Some(value.parse().map_err(|_| bad())?),
            "alt" => entry.declared_alternating = Some(flag()?),
            "qa" => entry.declared_quasi_alternating = Some(flag()?),
            _ => return Err(bad()),
        }
    }
    Ok(entry)
}

pub fn parse_corpus(text: &str) -> Corpus {
    let mut corpus = Corpus::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_line(line) {
            Ok(e) => corpus.entries.push(e),
            Err(e) => corpus.rejected.push((i + 1, e)),
        }
    }
    corpus
}

pub fn ingest(path: impl AsRef<Path>) -> Result<Corpus, CorpusError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| CorpusError::Io { path: path.display().to_string(), source })?;
    let corpus = parse_corpus(&text);
    for (line, err) in &corpus.rejected {
        log::warn!("{}:{line}: {err}", path.display());
    }
    Ok(corpus)
}
