//! Corpus files: one expression per line with an optional `# tag,tag`
//! suffix. Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};

use goedelsim_core::syntax::{is_sentence, parse};
use goedelsim_core::Expr;

/// Tags a corpus entry may carry.
pub const TAGS: [&str; 4] = ["deviant", "diag-item", "independent", "refutable-demo"];

/// The corpus shipped with the binary.
pub const BASE: &str = include_str!("../corpus/base.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub expr: Expr,
    pub tags: BTreeSet<String>,
}

impl Entry {
    pub fn has(&self, tag: &str) -> bool {
        self.tags.contains(tag)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<Entry>,
    pub source: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CorpusError {
    Io { path: PathBuf, source: std::io::Error },
    Parse { line: usize, message: String },
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::Io { path, source } => write!(f, "cannot read {}: {source}", path.display()),
            CorpusError::Parse { line, message } => write!(f, "corpus line {line}: {message}"),
        }
    }
}

impl std::error::Error for CorpusError {}

impl Corpus {
    pub fn parse(text: &str) -> Result<Corpus, CorpusError> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (body, tags) = match line.split_once('#') {
                Some((b, t)) => (b.trim(), t.trim()),
                None => (line, ""),
            };
            let err = |message: String| CorpusError::Parse { line: i + 1, message };
            let expr = parse(body).map_err(|e| err(e.to_string()))?;
            let mut set = BTreeSet::new();
            for t in tags.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                if !TAGS.contains(&t) {
                    return Err(err(format!("unknown tag {t:?}")));
                }
                set.insert(t.to_string());
            }
            entries.push(Entry { expr, tags: set });
        }
        Ok(Corpus { entries, source: None })
    }

    pub fn base() -> Corpus {
        Corpus::parse(BASE).expect("shipped corpus parses")
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn exprs(&self) -> Vec<Expr> {
        self.entries.iter().map(|e| e.expr.clone()).collect()
    }

    pub fn sentences(&self) -> Vec<Expr> {
        self.entries.iter().map(|e| e.expr.clone()).filter(is_sentence).collect()
    }

    pub fn tagged(&self, tag: &str) -> Vec<Expr> {
        self.entries.iter().filter(|e| e.has(tag)).map(|e| e.expr.clone()).collect()
    }
}

pub fn load_corpus(path: &Path) -> Result<Corpus, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })?;
    let mut c = Corpus::parse(&text)?;
    c.source = Some(path.to_path_buf());
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_and_tags() {
        let c = Corpus::parse("(= 0 0)\n\n# comment\n(forall (v 0) (= (v 0) 0)) # refutable-demo\n").unwrap();
        assert_eq!(c.entries.len(), 2);
        assert!(c.entries[0].tags.is_empty());
        assert!(c.entries[1].has("refutable-demo"));
        assert!(Corpus::parse("").unwrap().is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        match Corpus::parse("(= 0 0)\n(= 0\n") {
            Err(CorpusError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(Corpus::parse("0 # nonsense"), Err(CorpusError::Parse { line: 1, .. })));
    }

    #[test]
    fn base_corpus_loads() {
        let c = Corpus::base();
        assert!(c.entries.len() >= 40);
        assert!(!c.tagged("independent").is_empty());
    }
}
