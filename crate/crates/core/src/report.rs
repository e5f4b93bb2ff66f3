//! Witness values shared by the law reports.

use serde::Serialize;
use std::fmt;

/// A tuple of elements that violates (or, for findings, exhibits) a law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub law: String,
    pub indices: Vec<usize>,
    pub names: Vec<String>,
}

impl Witness {
    pub fn new(law: impl Into<String>, indices: Vec<usize>, names: Vec<String>) -> Self {
        Witness {
            law: law.into(),
            indices,
            names,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.law, self.names.join(", "))
    }
}

/// Banner attached to every report that quantifies directed-set laws.
pub const FINITE_RESIDUE_BANNER: &str = "finite carrier: directed sets attain their joins, so directed \
     product laws reduce to per-argument monotonicity (meet-continuity is automatic) and the frame law to \
     binary distributivity";
