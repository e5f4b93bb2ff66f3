//! JSON input files.
//!
//! A structure file describes a lattice and optionally a product:
//!
//! ```json
//! {
//!   "name": "z12_ideals",
//!   "elements": ["0", "(6)", "(4)", "(3)", "(2)", "R"],
//!   "covers": [["0", "(6)"], ["0", "(4)"], ["(6)", "(3)"], ["(6)", "(2)"], ["(4)", "(2)"], ["(3)", "R"], ["(2)", "R"]],
//!   "product": [["0", "0", "0", "0", "0", "0"], ...],
//!   "unit": "R",
//!   "subset_B": ["0", "(6)", "(4)", "(3)", "(2)", "R"]
//! }
//! ```
//!
//! Exactly one of `covers` and `leq` is given; both are lists of `[lo, hi]`
//! pairs and are closed transitively. `product` is a row-major matrix of
//! element names with `product[a][b] = a·b`. `unit` asserts a two-sided unit,
//! `left_unit` / `right_unit` assert one side. `unit`, `left_unit`,
//! `right_unit` and `subset_B` require `product`.
//!
//! A module file gives a finite abelian group:
//!
//! ```json
//! { "name": "z2_z4", "invariant_factors": [2, 4] }
//! { "name": "z2_z3", "cyclic_factors": [2, 3] }
//! ```
//!
//! Unknown fields are rejected in both formats.

use crate::lattice::{FiniteLattice, LatticeError};
use crate::module::{FiniteModule, ModuleError};
use crate::quantale::{QqOptions, QuantaleError, QuasiQuantale};
use serde::Deserialize;
use std::collections::HashMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{origin}: {source}")]
    Io { origin: String, source: std::io::Error },
    #[error("{origin}: {message}")]
    Syntax { origin: String, message: String },
    #[error("{origin}: field `{field}`: {message}")]
    Field {
        origin: String,
        field: String,
        message: String,
    },
    #[error("{origin}: {source}")]
    Lattice { origin: String, source: LatticeError },
    #[error("{origin}: field `product`: {source}")]
    Quantale { origin: String, source: QuantaleError },
    #[error("{origin}: {source}")]
    Module { origin: String, source: ModuleError },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default)]
    pub name: Option<String>,
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Option<Vec<[String; 2]>>,
    #[serde(default)]
    pub leq: Option<Vec<[String; 2]>>,
    #[serde(default)]
    pub product: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub unit: Option<String>,
    #[serde(default)]
    pub left_unit: Option<String>,
    #[serde(default)]
    pub right_unit: Option<String>,
    #[serde(default, rename = "subset_B")]
    pub subset_b: Option<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub invariant_factors: Option<Vec<u64>>,
    #[serde(default)]
    pub cyclic_factors: Option<Vec<u64>>,
}

/// A parsed structure file: a bare lattice, or a lattice with a validated product.
#[derive(Debug, Clone)]
pub enum Structure {
    Lattice(FiniteLattice),
    Quantale(QuasiQuantale),
}

impl Structure {
    pub fn lattice(&self) -> &FiniteLattice {
        match self {
            Structure::Lattice(l) => l,
            Structure::Quantale(q) => q.lattice(),
        }
    }

    /// The quasi-quantale, with `∧` as product for a bare lattice.
    pub fn into_quantale(self) -> QuasiQuantale {
        match self {
            Structure::Lattice(l) => QuasiQuantale::with_meet(l),
            Structure::Quantale(q) => q,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Loaded<T> {
    pub name: String,
    pub value: T,
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        origin: path.display().to_string(),
        source,
    })
}

fn default_name(origin: &str) -> String {
    Path::new(origin)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| origin.to_string())
}

pub fn load_structure(path: &Path) -> Result<Loaded<Structure>, InputError> {
    parse_structure(&read(path)?, &path.display().to_string())
}

pub fn load_module(path: &Path) -> Result<Loaded<FiniteModule>, InputError> {
    parse_module(&read(path)?, &path.display().to_string())
}

pub fn parse_structure(text: &str, origin: &str) -> Result<Loaded<Structure>, InputError> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        origin: origin.into(),
        message: e.to_string(),
    })?;
    let field_err = |field: String, message: String| InputError::Field {
        origin: origin.into(),
        field,
        message,
    };
    let index: HashMap<&str, usize> =
        file.elements.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let lookup = |field: String, name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| field_err(field, format!("unknown element `{name}`")))
    };

    let (key, pairs) = match (&file.covers, &file.leq) {
        (Some(p), None) => ("covers", p),
        (None, Some(p)) => ("leq", p),
        (Some(_), Some(_)) => return Err(field_err("leq".into(), "give either `covers` or `leq`, not both".into())),
        (None, None) => return Err(field_err("covers".into(), "missing order: give `covers` or `leq`".into())),
    };
    let mut idx_pairs = Vec::with_capacity(pairs.len());
    for (i, [lo, hi]) in pairs.iter().enumerate() {
        idx_pairs.push((lookup(format!("{key}[{i}]"), lo)?, lookup(format!("{key}[{i}]"), hi)?));
    }
    let lattice = FiniteLattice::from_pairs(file.elements.clone(), &idx_pairs).map_err(|source| {
        InputError::Lattice {
            origin: origin.into(),
            source,
        }
    })?;
    let name = file.name.clone().unwrap_or_else(|| default_name(origin));

    let Some(rows) = &file.product else {
        for (field, present) in [
            ("unit", file.unit.is_some()),
            ("left_unit", file.left_unit.is_some()),
            ("right_unit", file.right_unit.is_some()),
            ("subset_B", file.subset_b.is_some()),
        ] {
            if present {
                return Err(field_err(field.into(), "requires `product`".into()));
            }
        }
        return Ok(Loaded {
            name,
            value: Structure::Lattice(lattice),
        });
    };
    let n = lattice.len();
    if rows.len() != n {
        return Err(field_err("product".into(), format!("{} rows, expected {n}", rows.len())));
    }
    let mut table = Vec::with_capacity(n * n);
    for (a, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(field_err(format!("product[{a}]"), format!("{} entries, expected {n}", row.len())));
        }
        for (b, v) in row.iter().enumerate() {
            table.push(lookup(format!("product[{a}][{b}]"), v)?);
        }
    }
    let unit = file.unit.as_deref().map(|u| lookup("unit".into(), u)).transpose()?;
    let left = file.left_unit.as_deref().map(|u| lookup("left_unit".into(), u)).transpose()?;
    let right = file.right_unit.as_deref().map(|u| lookup("right_unit".into(), u)).transpose()?;
    let sub_b = match &file.subset_b {
        None => None,
        Some(names) => {
            let mut mask = 0u64;
            for (i, s) in names.iter().enumerate() {
                mask |= 1 << lookup(format!("subset_B[{i}]"), s)?;
            }
            Some(mask)
        }
    };
    let opts = QqOptions {
        expect_left_unit: left.or(unit),
        expect_right_unit: right.or(unit),
        sub_b,
    };
    let q = QuasiQuantale::new(lattice, table, opts).map_err(|source| InputError::Quantale {
        origin: origin.into(),
        source,
    })?;
    Ok(Loaded {
        name,
        value: Structure::Quantale(q),
    })
}

pub fn parse_module(text: &str, origin: &str) -> Result<Loaded<FiniteModule>, InputError> {
    let file: ModuleFile = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        origin: origin.into(),
        message: e.to_string(),
    })?;
    let module = match (&file.invariant_factors, &file.cyclic_factors) {
        (Some(f), None) => FiniteModule::new(f),
        (None, Some(c)) => FiniteModule::from_cyclic_factors(c),
        (Some(_), Some(_)) => {
            return Err(InputError::Field {
                origin: origin.into(),
                field: "cyclic_factors".into(),
                message: "give either `invariant_factors` or `cyclic_factors`, not both".into(),
            })
        }
        (None, None) => {
            return Err(InputError::Field {
                origin: origin.into(),
                field: "invariant_factors".into(),
                message: "missing factors: give `invariant_factors` or `cyclic_factors`".into(),
            })
        }
    }
    .map_err(|source| InputError::Module {
        origin: origin.into(),
        source,
    })?;
    Ok(Loaded {
        name: file.name.unwrap_or_else(|| default_name(origin)),
        value: module,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_from_covers() {
        let s = parse_structure(r#"{"elements":["0","1"],"covers":[["0","1"]]}"#, "two.json").unwrap();
        assert_eq!(s.name, "two");
        let l = s.value.lattice();
        assert_eq!((l.bottom(), l.top()), (0, 1));
    }

    #[test]
    fn bowtie_has_no_bounds() {
        let text = r#"{"elements":["a","b","c","d"],"covers":[["a","c"],["a","d"],["b","c"],["b","d"]]}"#;
        let err = parse_structure(text, "bowtie.json").unwrap_err();
        assert!(matches!(err, InputError::Lattice { source: LatticeError::NoBounds(_), .. }), "{err}");
    }

    #[test]
    fn errors_cite_file_and_field() {
        let text = r#"{"elements":["0","1"],"covers":[["0","x"]]}"#;
        let msg = parse_structure(text, "f.json").unwrap_err().to_string();
        assert!(msg.contains("f.json") && msg.contains("covers[0]") && msg.contains("`x`"), "{msg}");
        let text = r#"{"elements":["0","1"],"covers":[["0","1"]],"colour":"red"}"#;
        let msg = parse_structure(text, "g.json").unwrap_err().to_string();
        assert!(msg.contains("g.json") && msg.contains("colour"), "{msg}");
        let text = r#"{"elements":["0","1"],"covers":[["0","1"]],"unit":"1"}"#;
        let msg = parse_structure(text, "h.json").unwrap_err().to_string();
        assert!(msg.contains("`unit`"), "{msg}");
        let text = r#"{"elements":["0","1"],"covers":[["0","1"]],"product":[["0","0"],["0"]]}"#;
        let msg = parse_structure(text, "p.json").unwrap_err().to_string();
        assert!(msg.contains("product[1]"), "{msg}");
    }

    #[test]
    fn product_with_unit() {
        let text = r#"{"elements":["0","1"],"covers":[["0","1"]],
            "product":[["0","0"],["0","1"]],"unit":"1","subset_B":["0","1"]}"#;
        let q = parse_structure(text, "b.json").unwrap().value.into_quantale();
        assert_eq!(q.left_unit(), Some(1));
        assert_eq!(q.sub_b(), Some(0b11));
        let bad = r#"{"elements":["0","1"],"covers":[["0","1"]],"product":[["0","0"],["0","1"]],"unit":"0"}"#;
        assert!(matches!(
            parse_structure(bad, "b.json").unwrap_err(),
            InputError::Quantale { source: QuantaleError::UnitMismatch(..), .. }
        ));
    }

    #[test]
    fn module_files() {
        let m = parse_module(r#"{"cyclic_factors":[2,3]}"#, "m23.json").unwrap();
        assert_eq!(m.value.factors(), &[6]);
        assert_eq!(m.name, "m23");
        let err = parse_module(r#"{"invariant_factors":[2,3]}"#, "x.json").unwrap_err();
        assert!(matches!(err, InputError::Module { source: ModuleError::NotDivisibilityChain(_), .. }));
        assert!(parse_module(r#"{"factors":[2]}"#, "x.json").is_err());
        assert!(parse_module(r#"{}"#, "x.json").unwrap_err().to_string().contains("invariant_factors"));
    }
}
