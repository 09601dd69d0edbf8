//! Corpus generators and the theorem-verification suite.

pub mod corpus;
pub mod generators;
pub mod suite;
pub mod verifiers;
