//! Finite categories with explicit composition tables, the limit and monoidal
//! machinery needed to state comparison theorems about them, and a harness
//! that checks those theorems on generated examples.

pub mod category;
pub mod constructions;
pub mod error;
pub mod functor;
pub mod harness;
pub mod limits;
pub mod monoidal;
pub mod report;
pub mod search;
pub mod serial;

pub use category::{FinCategory, Mor, Obj};
pub use constructions::{product_category, slice_category, Product};
pub use error::{FinCatError, Result};
pub use functor::{FunctorData, NatTransformData};
pub use report::{TheoremId, TheoremReport, ValidationReport, Verdict};
