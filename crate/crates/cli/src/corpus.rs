//! The bundled corpus of four-dimensional associative algebra classes.
//!
//! Fifty-eight definition files (one per isomorphism class, named
//! `As4_1` .. `As4_58`) are embedded into the binary together with an
//! index recording the reference dimensions of the derivation algebra
//! and the centroid for each class. The reference dimensions are
//! metadata used for comparison in reports; they are never fed into any
//! computation. A corpus can also be loaded from a directory on disk
//! (the `--corpus` flag or the `ALGKIT_CORPUS_DIR` environment
//! variable), which is expected to contain an `index.json` and the
//! definition files it references.

use std::fmt;
use std::fs;
use std::path::Path;

use algkit_core::{parse_algebra_with_params, ParseError, Rat, StructureConstants};
use serde::Deserialize;

/// One corpus entry: a named algebra definition plus the reference
/// dimensions its computed invariants are compared against.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// Class label, e.g. `"As4_7"`.
    pub name: String,
    /// Definition text in the algebra definition grammar.
    pub definition: String,
    /// Reference dimension of Der(A) for this class.
    pub expected_dim_der: usize,
    /// Reference dimension of the centroid for this class.
    pub expected_dim_centroid: usize,
}

impl CorpusEntry {
    /// Parses the definition at its default parameter binding.
    pub fn parse(&self) -> Result<StructureConstants, ParseError> {
        self.parse_with_params(&[])
    }

    /// Parses the definition with parameter overrides applied.
    pub fn parse_with_params(
        &self,
        overrides: &[(String, Rat)],
    ) -> Result<StructureConstants, ParseError> {
        let mut sc = parse_algebra_with_params(&self.definition, overrides)?;
        sc.set_name(self.name.clone());
        Ok(sc)
    }
}

/// Errors raised while loading a corpus from disk.
#[derive(Debug)]
pub enum CorpusError {
    /// The index file could not be read or decoded.
    Index { path: String, message: String },
    /// A definition file named by the index is missing or unreadable.
    Data { entry: String, message: String },
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::Index { path, message } => {
                write!(f, "corpus index {path}: {message}")
            }
            CorpusError::Data { entry, message } => {
                write!(f, "corpus entry {entry}: {message}")
            }
        }
    }
}

impl std::error::Error for CorpusError {}

/// One row of `index.json`.
#[derive(Debug, Deserialize)]
struct IndexRow {
    name: String,
    file: String,
    expected_dim_der: usize,
    expected_dim_centroid: usize,
}

/// The embedded index file.
const INDEX_JSON: &str = include_str!("../data/index.json");

/// The embedded definition files, in class order.
const CORPUS_FILES: &[(&str, &str)] = &[
    ("As4_1", include_str!("../data/As4_1.alg")),
    ("As4_2", include_str!("../data/As4_2.alg")),
    ("As4_3", include_str!("../data/As4_3.alg")),
    ("As4_4", include_str!("../data/As4_4.alg")),
    ("As4_5", include_str!("../data/As4_5.alg")),
    ("As4_6", include_str!("../data/As4_6.alg")),
    ("As4_7", include_str!("../data/As4_7.alg")),
    ("As4_8", include_str!("../data/As4_8.alg")),
    ("As4_9", include_str!("../data/As4_9.alg")),
    ("As4_10", include_str!("../data/As4_10.alg")),
    ("As4_11", include_str!("../data/As4_11.alg")),
    ("As4_12", include_str!("../data/As4_12.alg")),
    ("As4_13", include_str!("../data/As4_13.alg")),
    ("As4_14", include_str!("../data/As4_14.alg")),
    ("As4_15", include_str!("../data/As4_15.alg")),
    ("As4_16", include_str!("../data/As4_16.alg")),
    ("As4_17", include_str!("../data/As4_17.alg")),
    ("As4_18", include_str!("../data/As4_18.alg")),
    ("As4_19", include_str!("../data/As4_19.alg")),
    ("As4_20", include_str!("../data/As4_20.alg")),
    ("As4_21", include_str!("../data/As4_21.alg")),
    ("As4_22", include_str!("../data/As4_22.alg")),
    ("As4_23", include_str!("../data/As4_23.alg")),
    ("As4_24", include_str!("../data/As4_24.alg")),
    ("As4_25", include_str!("../data/As4_25.alg")),
    ("As4_26", include_str!("../data/As4_26.alg")),
    ("As4_27", include_str!("../data/As4_27.alg")),
    ("As4_28", include_str!("../data/As4_28.alg")),
    ("As4_29", include_str!("../data/As4_29.alg")),
    ("As4_30", include_str!("../data/As4_30.alg")),
    ("As4_31", include_str!("../data/As4_31.alg")),
    ("As4_32", include_str!("../data/As4_32.alg")),
    ("As4_33", include_str!("../data/As4_33.alg")),
    ("As4_34", include_str!("../data/As4_34.alg")),
    ("As4_35", include_str!("../data/As4_35.alg")),
    ("As4_36", include_str!("../data/As4_36.alg")),
    ("As4_37", include_str!("../data/As4_37.alg")),
    ("As4_38", include_str!("../data/As4_38.alg")),
    ("As4_39", include_str!("../data/As4_39.alg")),
    ("As4_40", include_str!("../data/As4_40.alg")),
    ("As4_41", include_str!("../data/As4_41.alg")),
    ("As4_42", include_str!("../data/As4_42.alg")),
    ("As4_43", include_str!("../data/As4_43.alg")),
    ("As4_44", include_str!("../data/As4_44.alg")),
    ("As4_45", include_str!("../data/As4_45.alg")),
    ("As4_46", include_str!("../data/As4_46.alg")),
    ("As4_47", include_str!("../data/As4_47.alg")),
    ("As4_48", include_str!("../data/As4_48.alg")),
    ("As4_49", include_str!("../data/As4_49.alg")),
    ("As4_50", include_str!("../data/As4_50.alg")),
    ("As4_51", include_str!("../data/As4_51.alg")),
    ("As4_52", include_str!("../data/As4_52.alg")),
    ("As4_53", include_str!("../data/As4_53.alg")),
    ("As4_54", include_str!("../data/As4_54.alg")),
    ("As4_55", include_str!("../data/As4_55.alg")),
    ("As4_56", include_str!("../data/As4_56.alg")),
    ("As4_57", include_str!("../data/As4_57.alg")),
    ("As4_58", include_str!("../data/As4_58.alg")),
];

/// Returns the corpus embedded in the binary, in class order.
///
/// The embedded data is fixed at build time; a malformed index here is a
/// packaging defect, so this panics rather than returning an error.
pub fn bundled_corpus() -> Vec<CorpusEntry> {
    let rows: Vec<IndexRow> =
        serde_json::from_str(INDEX_JSON).expect("embedded corpus index is valid JSON");
    assert_eq!(
        rows.len(),
        CORPUS_FILES.len(),
        "embedded corpus index and data files disagree"
    );
    rows.iter()
        .zip(CORPUS_FILES.iter())
        .map(|(row, (name, text))| {
            assert_eq!(&row.name, name, "embedded corpus index order mismatch");
            CorpusEntry {
                name: row.name.clone(),
                definition: (*text).to_string(),
                expected_dim_der: row.expected_dim_der,
                expected_dim_centroid: row.expected_dim_centroid,
            }
        })
        .collect()
}

/// Loads a corpus from a directory containing `index.json` and the
/// definition files it references. Entry order follows the index.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let index_path = dir.join("index.json");
    let index_text = fs::read_to_string(&index_path).map_err(|e| CorpusError::Index {
        path: index_path.display().to_string(),
        message: e.to_string(),
    })?;
    let rows: Vec<IndexRow> =
        serde_json::from_str(&index_text).map_err(|e| CorpusError::Index {
            path: index_path.display().to_string(),
            message: e.to_string(),
        })?;
    let mut entries = Vec::with_capacity(rows.len());
    for row in rows {
        let data_path = dir.join(&row.file);
        let definition = fs::read_to_string(&data_path).map_err(|e| CorpusError::Data {
            entry: row.name.clone(),
            message: format!("{}: {}", data_path.display(), e),
        })?;
        entries.push(CorpusEntry {
            name: row.name,
            definition,
            expected_dim_der: row.expected_dim_der,
            expected_dim_centroid: row.expected_dim_centroid,
        });
    }
    Ok(entries)
}

/// Resolves which corpus to use: an explicit directory wins, then the
/// `ALGKIT_CORPUS_DIR` environment variable, then the bundled corpus.
pub fn resolve_corpus(explicit: Option<&Path>) -> Result<Vec<CorpusEntry>, CorpusError> {
    if let Some(dir) = explicit {
        return load_corpus_dir(dir);
    }
    if let Ok(dir) = std::env::var("ALGKIT_CORPUS_DIR") {
        if !dir.is_empty() {
            return load_corpus_dir(Path::new(&dir));
        }
    }
    Ok(bundled_corpus())
}

/// Finds an entry by class name.
pub fn find_entry<'a>(entries: &'a [CorpusEntry], name: &str) -> Option<&'a CorpusEntry> {
    entries.iter().find(|e| e.name == name)
}
