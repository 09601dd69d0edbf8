use thiserror::Error;

use crate::category::{Mor, Obj};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinCatError {
    #[error("{kind} index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        kind: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("morphisms {g} and {f} are not composable (dst {f} != src {g})")]
    NotComposable { g: Mor, f: Mor },

    #[error("composition table has no entry for the composable pair ({g}, {f})")]
    MissingComposite { g: Mor, f: Mor },

    #[error("composition table has two entries for the pair ({g}, {f})")]
    DuplicateComposite { g: Mor, f: Mor },

    #[error("composition table has an entry for the non-composable pair ({g}, {f})")]
    UnexpectedComposite { g: Mor, f: Mor },

    #[error("category mismatch: {0}")]
    CategoryMismatch(String),

    #[error("{what}: component {morphism} has type {found:?}, expected {expected:?}")]
    ComponentType {
        what: String,
        morphism: Mor,
        expected: (Obj, Obj),
        found: (Obj, Obj),
    },

    #[error("limit absent: {0}")]
    LimitAbsent(String),

    #[error("no zero object: initial and terminal objects do not coincide")]
    NoZeroStructure,

    #[error("mediating morphism for ({f}, {g}) is missing or not unique; witness is corrupt")]
    CorruptWitness { f: Mor, g: Mor },

    #[error("product of an empty list of categories")]
    EmptyProduct,

    #[error("monoidal structure has no braiding")]
    BraidingAbsent,

    #[error("{family}: parameter {value} exceeds bound {max}")]
    BoundExceeded {
        family: &'static str,
        value: usize,
        max: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid structure: {0}")]
    Invalid(String),
}

pub type Result<T, E = FinCatError> = std::result::Result<T, E>;
