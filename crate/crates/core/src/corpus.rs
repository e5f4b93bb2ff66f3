//! The bundled verification corpus and its integrity manifest.
//!
//! The corpus files are compiled into the binary. A run may read them from a
//! directory instead, in which case every file is hashed against the
//! compiled-in manifest before it is parsed.

use crate::input::{parse_module, parse_structure, InputError, Loaded, Structure};
use crate::module::FiniteModule;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub const MANIFEST_JSON: &str = include_str!("../corpus/MANIFEST.json");

macro_rules! embedded {
    ($($file:literal),* $(,)?) => {
        &[$(($file, include_str!(concat!("../corpus/", $file)))),*]
    };
}

const EMBEDDED: &[(&str, &str)] = embedded!(
    "chain2.json",
    "chain3.json",
    "boolean_square.json",
    "m3.json",
    "n5.json",
    "z12_ideals.json",
    "chain3_top_idempotent.json",
    "broken_product.json",
    "m12.json",
    "m4.json",
    "m2_2.json",
    "m2_3.json",
    "m2_4.json",
    "m2_2_2.json",
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Structure,
    Module,
    /// A structure file that must fail validation.
    Rejected,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub file: String,
    pub kind: EntryKind,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub files: Vec<ManifestEntry>,
    /// Check names a verification run must contain.
    pub required_checks: Vec<String>,
}

pub fn manifest() -> Manifest {
    serde_json::from_str(MANIFEST_JSON).expect("bundled manifest parses")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    Embedded,
    Dir(PathBuf),
}

#[derive(Debug, Clone, Serialize)]
pub struct IntegrityIssue {
    pub file: String,
    pub problem: String,
}

#[derive(Debug)]
pub struct Corpus {
    pub source: CorpusSource,
    pub structures: Vec<Loaded<Structure>>,
    pub modules: Vec<Loaded<FiniteModule>>,
    /// Files expected to be rejected, with the parse result.
    pub rejected: Vec<(String, Result<Loaded<Structure>, InputError>)>,
    pub issues: Vec<IntegrityIssue>,
}

impl Corpus {
    pub fn structure(&self, name: &str) -> Option<&Structure> {
        self.structures.iter().find(|s| s.name == name).map(|s| &s.value)
    }

    pub fn module(&self, name: &str) -> Option<&FiniteModule> {
        self.modules.iter().find(|m| m.name == name).map(|m| &m.value)
    }
}

fn fetch(source: &CorpusSource, file: &str) -> Result<String, String> {
    match source {
        CorpusSource::Embedded => EMBEDDED
            .iter()
            .find(|(f, _)| *f == file)
            .map(|(_, t)| t.to_string())
            .ok_or_else(|| "not bundled".to_string()),
        CorpusSource::Dir(dir) => std::fs::read_to_string(dir.join(file)).map_err(|e| e.to_string()),
    }
}

/// Loads every manifest entry. Hash mismatches, unreadable files and parse
/// failures become integrity issues; the run decides what to do with them.
pub fn load_corpus(source: CorpusSource) -> Corpus {
    let m = manifest();
    let mut corpus = Corpus {
        source: source.clone(),
        structures: Vec::new(),
        modules: Vec::new(),
        rejected: Vec::new(),
        issues: Vec::new(),
    };
    for entry in &m.files {
        let issue = |problem: String| IntegrityIssue {
            file: entry.file.clone(),
            problem,
        };
        let text = match fetch(&source, &entry.file) {
            Ok(t) => t,
            Err(e) => {
                corpus.issues.push(issue(format!("unreadable: {e}")));
                continue;
            }
        };
        let digest = sha256_hex(text.as_bytes());
        if digest != entry.sha256 {
            corpus.issues.push(issue(format!("sha256 {digest}, manifest has {}", entry.sha256)));
        }
        let origin = match &source {
            CorpusSource::Embedded => format!("corpus/{}", entry.file),
            CorpusSource::Dir(d) => Path::new(d).join(&entry.file).display().to_string(),
        };
        match entry.kind {
            EntryKind::Structure => match parse_structure(&text, &origin) {
                Ok(s) => corpus.structures.push(s),
                Err(e) => corpus.issues.push(issue(e.to_string())),
            },
            EntryKind::Module => match parse_module(&text, &origin) {
                Ok(s) => corpus.modules.push(s),
                Err(e) => corpus.issues.push(issue(e.to_string())),
            },
            EntryKind::Rejected => corpus.rejected.push((entry.file.clone(), parse_structure(&text, &origin))),
        }
    }
    corpus
}
