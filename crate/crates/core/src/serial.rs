//! The `fincat/1` JSON interchange format for categories.
//!
//! Output is canonical: fixed key order, triples sorted by `(g, f)`, scalar
//! arrays on one line, two-space indentation and a trailing newline. Saving a
//! loaded document therefore reproduces it byte-for-byte once it has been
//! through one save.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::category::{FinCategory, Mor, Obj};
use crate::error::FinCatError;
use crate::report::ValidationReport;

pub const FORMAT_TAG: &str = "fincat/1";

#[derive(Debug, Error)]
pub enum SerialError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported format tag {0:?} (expected \"fincat/1\")")]
    Format(String),

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error(transparent)]
    Category(#[from] FinCatError),

    #[error("category axioms violated: {0}")]
    Invalid(ValidationReport),
}

impl From<serde_json::Error> for SerialError {
    fn from(e: serde_json::Error) -> Self {
        SerialError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectsSection {
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub id: Mor,
    pub src: Obj,
    pub dst: Obj,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDocument {
    pub format: String,
    pub objects: ObjectsSection,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: Vec<Mor>,
    /// `[g, f, g∘f]` for every composable pair.
    pub composition: Vec<[Mor; 3]>,
}

impl CategoryDocument {
    pub fn from_category(c: &FinCategory) -> Self {
        let morphisms = c
            .morphisms()
            .map(|f| MorphismEntry {
                id: f,
                src: c.src(f),
                dst: c.dst(f),
                name: c.morphism_names()[f].clone(),
            })
            .collect();
        let mut composition: Vec<[Mor; 3]> = c
            .composable_pairs()
            .map(|(g, f)| [g, f, c.composite(g, f).expect("composable pair")])
            .collect();
        composition.sort_unstable();
        CategoryDocument {
            format: FORMAT_TAG.into(),
            objects: ObjectsSection {
                count: c.object_count(),
                names: c.object_names().map(<[String]>::to_vec),
            },
            morphisms,
            identities: c.identities().to_vec(),
            composition,
        }
    }

    /// Builds the category without checking the axioms. Structural problems
    /// (bad indices, missing or extra triples) are still errors.
    pub fn to_category_unchecked(&self) -> Result<FinCategory, SerialError> {
        if self.format != FORMAT_TAG {
            return Err(SerialError::Format(self.format.clone()));
        }
        for (i, m) in self.morphisms.iter().enumerate() {
            if m.id != i {
                return Err(SerialError::Malformed(format!(
                    "morphism at position {i} has id {} (ids must be 0, 1, 2, ... in order)",
                    m.id
                )));
            }
        }
        let ends: Vec<(Obj, Obj)> = self.morphisms.iter().map(|m| (m.src, m.dst)).collect();
        let triples = self.composition.iter().map(|t| (t[0], t[1], t[2]));
        let mut c = FinCategory::from_triples(self.objects.count, &ends, self.identities.clone(), triples)?;
        if let Some(names) = &self.objects.names {
            c = c.with_object_names(names.clone())?;
        }
        if self.morphisms.iter().any(|m| m.name.is_some()) {
            c = c.with_morphism_names(self.morphisms.iter().map(|m| m.name.clone()).collect())?;
        }
        Ok(c)
    }

    pub fn to_category(&self) -> Result<FinCategory, SerialError> {
        let c = self.to_category_unchecked()?;
        let report = c.validate();
        if !report.ok {
            return Err(SerialError::Invalid(report));
        }
        Ok(c)
    }
}

pub fn category_to_string(c: &FinCategory) -> String {
    let value = serde_json::to_value(CategoryDocument::from_category(c)).expect("document serializes");
    let mut out = String::new();
    write_canonical(&value, 0, &mut out);
    out.push('\n');
    out
}

pub fn parse_document(text: &str) -> Result<CategoryDocument, SerialError> {
    Ok(serde_json::from_str(text)?)
}

/// Parses and validates a category.
pub fn category_from_str(text: &str) -> Result<FinCategory, SerialError> {
    parse_document(text)?.to_category()
}

pub fn category_from_str_unchecked(text: &str) -> Result<FinCategory, SerialError> {
    parse_document(text)?.to_category_unchecked()
}

fn read(path: &Path) -> Result<String, SerialError> {
    fs::read_to_string(path).map_err(|source| SerialError::Read {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_category(path: impl AsRef<Path>) -> Result<FinCategory, SerialError> {
    category_from_str(&read(path.as_ref())?)
}

pub fn load_category_unchecked(path: impl AsRef<Path>) -> Result<FinCategory, SerialError> {
    category_from_str_unchecked(&read(path.as_ref())?)
}

pub fn save_category(c: &FinCategory, path: impl AsRef<Path>) -> Result<(), SerialError> {
    let path = path.as_ref();
    fs::write(path, category_to_string(c)).map_err(|source| SerialError::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// Renders JSON with arrays of scalars kept on one line.
pub fn write_canonical(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                write_canonical(val, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, val) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_canonical(val, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            out.push('[');
            for (i, val) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&val.to_string());
            }
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::{gen_bool_matrix, gen_chain, gen_m3};

    #[test]
    fn m3_round_trip_preserves_tables_and_names() {
        let c = gen_m3();
        let text = category_to_string(&c);
        let back = category_from_str(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.object_by_name("⊤"), c.object_by_name("⊤"));
        assert_eq!(category_to_string(&back), text);
    }

    #[test]
    fn composition_lines_are_compact() {
        let text = category_to_string(&gen_chain(2).unwrap());
        assert!(text.contains("\"format\": \"fincat/1\""));
        assert!(text.contains("[0, 0, 0]"));
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn missing_triple_names_the_pair() {
        let c = gen_chain(2).unwrap();
        let mut doc = CategoryDocument::from_category(&c);
        let removed = doc.composition.pop().unwrap();
        let err = doc.to_category().unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains(&format!("({}, {})", removed[0], removed[1])),
            "{msg}"
        );
    }

    #[test]
    fn parse_error_has_position() {
        let err = category_from_str("{\n  \"format\": \"fincat/1\",\n  oops\n}").unwrap_err();
        match err {
            SerialError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_tag_and_bad_ids_are_rejected() {
        let c = gen_chain(1).unwrap();
        let mut doc = CategoryDocument::from_category(&c);
        doc.format = "fincat/0".into();
        assert!(matches!(doc.to_category(), Err(SerialError::Format(_))));
        let mut doc = CategoryDocument::from_category(&gen_chain(2).unwrap());
        doc.morphisms.swap(0, 1);
        assert!(matches!(doc.to_category(), Err(SerialError::Malformed(_))));
    }

    #[test]
    fn axiom_violation_is_reported() {
        let c = gen_bool_matrix(1).unwrap();
        let (g, f) = c.composable_pairs().find(|&(g, f)| !c.is_identity(g) && c.hom_size(c.src(f), c.dst(g)) > 1).unwrap();
        let h = c.composite(g, f).unwrap();
        let other = c.hom(c.src(f), c.dst(g)).iter().copied().find(|&m| m != h).unwrap();
        let broken = c.with_composite(g, f, other).unwrap();
        match category_from_str(&category_to_string(&broken)) {
            Err(SerialError::Invalid(r)) => assert!(!r.ok),
            other => panic!("unexpected {other:?}"),
        }
        assert!(category_from_str_unchecked(&category_to_string(&broken)).is_ok());
    }
}
