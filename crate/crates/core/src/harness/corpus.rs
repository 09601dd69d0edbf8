//! Named corpus members and manifests.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::category::FinCategory;
use crate::error::FinCatError;
use crate::harness::generators::*;
use crate::serial::{load_category_unchecked, SerialError};

/// A generator family with its parameters, or a category file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CorpusSpec {
    Terminal,
    Chain { n: usize },
    BooleanAlgebra { k: usize },
    DivisorLattice { n: usize },
    M3,
    N5,
    BoolMatrix { n: usize },
    Poset { spec: PosetSpec },
    CyclicGroup { n: usize },
    BooleanMonoid,
    /// Loaded without axiom checks so that the suite can report violations.
    File { path: PathBuf },
}

impl CorpusSpec {
    /// Builds the member. Generated categories are valid by construction;
    /// files are only checked structurally.
    pub fn build(&self) -> Result<FinCategory, SerialError> {
        let c = match self {
            CorpusSpec::Terminal => gen_terminal(),
            CorpusSpec::Chain { n } => gen_chain(*n)?,
            CorpusSpec::BooleanAlgebra { k } => gen_boolean_algebra(*k)?,
            CorpusSpec::DivisorLattice { n } => gen_divisor_lattice(*n)?,
            CorpusSpec::M3 => gen_m3(),
            CorpusSpec::N5 => gen_n5(),
            CorpusSpec::BoolMatrix { n } => gen_bool_matrix(*n)?,
            CorpusSpec::Poset { spec } => gen_poset_from_covers(spec)?,
            CorpusSpec::CyclicGroup { n } => gen_cyclic_group(*n)?,
            CorpusSpec::BooleanMonoid => gen_boolean_monoid(),
            CorpusSpec::File { path } => return load_category_unchecked(path),
        };
        Ok(c)
    }

    /// Lattice-shaped members, whose products and coproducts are meets and
    /// joins.
    pub fn is_poset(&self) -> bool {
        matches!(
            self,
            CorpusSpec::Terminal
                | CorpusSpec::Chain { .. }
                | CorpusSpec::BooleanAlgebra { .. }
                | CorpusSpec::DivisorLattice { .. }
                | CorpusSpec::M3
                | CorpusSpec::N5
                | CorpusSpec::Poset { .. }
        )
    }

    /// Parses the command-line form: a family name and its positional
    /// parameters, such as `chain 3` or `bool-matrix 2`.
    pub fn from_args(family: &str, params: &[String]) -> Result<CorpusSpec, FinCatError> {
        let num = |i: usize| -> Result<usize, FinCatError> {
            let raw = params
                .get(i)
                .ok_or_else(|| FinCatError::InvalidParameter(format!("{family} needs a numeric parameter")))?;
            raw.parse()
                .map_err(|_| FinCatError::InvalidParameter(format!("{raw:?} is not a non-negative integer")))
        };
        let expect = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(FinCatError::InvalidParameter(format!(
                    "{family} takes {n} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match family {
            "terminal" => CorpusSpec::Terminal,
            "m3" => CorpusSpec::M3,
            "n5" => CorpusSpec::N5,
            "boolean-monoid" => CorpusSpec::BooleanMonoid,
            "chain" => CorpusSpec::Chain { n: num(0)? },
            "boolean-algebra" => CorpusSpec::BooleanAlgebra { k: num(0)? },
            "divisor-lattice" => CorpusSpec::DivisorLattice { n: num(0)? },
            "bool-matrix" => CorpusSpec::BoolMatrix { n: num(0)? },
            "cyclic-group" => CorpusSpec::CyclicGroup { n: num(0)? },
            "poset" => {
                expect(1)?;
                let spec: PosetSpec = serde_json::from_str(&params[0])
                    .map_err(|e| FinCatError::InvalidParameter(format!("poset spec: {e}")))?;
                return Ok(CorpusSpec::Poset { spec });
            }
            other => return Err(FinCatError::InvalidParameter(format!("unknown family {other:?}"))),
        };
        let arity = match spec {
            CorpusSpec::Terminal | CorpusSpec::M3 | CorpusSpec::N5 | CorpusSpec::BooleanMonoid => 0,
            _ => 1,
        };
        expect(arity)?;
        Ok(spec)
    }

    fn resolve_against(self, dir: &Path) -> CorpusSpec {
        match self {
            CorpusSpec::File { path } if path.is_relative() => CorpusSpec::File { path: dir.join(path) },
            other => other,
        }
    }
}

pub const FAMILIES: &[&str] = &[
    "terminal",
    "chain",
    "boolean-algebra",
    "divisor-lattice",
    "m3",
    "n5",
    "bool-matrix",
    "poset",
    "cyclic-group",
    "boolean-monoid",
];

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Terminal => write!(f, "terminal"),
            CorpusSpec::Chain { n } => write!(f, "chain({n})"),
            CorpusSpec::BooleanAlgebra { k } => write!(f, "boolean-algebra({k})"),
            CorpusSpec::DivisorLattice { n } => write!(f, "divisor-lattice({n})"),
            CorpusSpec::M3 => write!(f, "m3"),
            CorpusSpec::N5 => write!(f, "n5"),
            CorpusSpec::BoolMatrix { n } => write!(f, "bool-matrix({n})"),
            CorpusSpec::Poset { spec } => write!(f, "poset({} elements)", spec.size),
            CorpusSpec::CyclicGroup { n } => write!(f, "cyclic-group({n})"),
            CorpusSpec::BooleanMonoid => write!(f, "boolean-monoid"),
            CorpusSpec::File { path } => write!(f, "file({})", path.display()),
        }
    }
}

/// Chains of length 1 to 3, the Boolean algebras on one and two generators,
/// the divisors of 12, M3, N5, the terminal category and Boolean matrices up
/// to rank 2.
pub fn default_corpus() -> Vec<CorpusSpec> {
    vec![
        CorpusSpec::Chain { n: 1 },
        CorpusSpec::Chain { n: 2 },
        CorpusSpec::Chain { n: 3 },
        CorpusSpec::BooleanAlgebra { k: 1 },
        CorpusSpec::BooleanAlgebra { k: 2 },
        CorpusSpec::DivisorLattice { n: 12 },
        CorpusSpec::M3,
        CorpusSpec::N5,
        CorpusSpec::Terminal,
        CorpusSpec::BoolMatrix { n: 2 },
    ]
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ManifestDocument {
    List(Vec<CorpusSpec>),
    Wrapped { corpus: Vec<CorpusSpec> },
}

/// Reads a manifest: either a JSON array of specs or `{"corpus": [...]}`.
/// Relative file paths are resolved against the manifest's directory.
pub fn load_manifest(path: impl AsRef<Path>) -> Result<Vec<CorpusSpec>, SerialError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| SerialError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let doc: ManifestDocument = serde_json::from_str(&text)?;
    let specs = match doc {
        ManifestDocument::List(v) | ManifestDocument::Wrapped { corpus: v } => v,
    };
    let dir = path.parent().unwrap_or(Path::new("."));
    Ok(specs.into_iter().map(|s| s.resolve_against(dir)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_json_shape() {
        let s = CorpusSpec::Chain { n: 3 };
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"family":"chain","n":3}"#);
        let back: CorpusSpec = serde_json::from_str(r#"{"family":"m3"}"#).unwrap();
        assert_eq!(back, CorpusSpec::M3);
        let poset: CorpusSpec =
            serde_json::from_str(r#"{"family":"poset","spec":{"size":2,"covers":[[0,1]]}}"#).unwrap();
        assert_eq!(poset.build().unwrap().morphism_count(), 3);
    }

    #[test]
    fn default_corpus_builds() {
        let corpus = default_corpus();
        assert_eq!(corpus.len(), 10);
        for s in &corpus {
            let c = s.build().unwrap();
            assert!(c.validate().ok, "{s}");
        }
    }

    #[test]
    fn args_parse() {
        assert_eq!(CorpusSpec::from_args("chain", &["4".into()]).unwrap(), CorpusSpec::Chain { n: 4 });
        assert!(CorpusSpec::from_args("chain", &[]).is_err());
        assert!(CorpusSpec::from_args("m3", &["1".into()]).is_err());
        assert!(CorpusSpec::from_args("nope", &[]).is_err());
        assert!(CorpusSpec::from_args("chain", &["99".into()]).unwrap().build().is_err());
    }
}
