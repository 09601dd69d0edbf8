//! Monoidal structures, monoidal functors and transformations, and the
//! strength theorem with its coproduct corollary.

mod functor;
mod structure;
mod theorems;

pub use functor::{
    classify_monoidal_functor, compose_monoidal_functors, product_lax_functor, product_monoidal_functor,
    tensor_strong_monoidal, validate_monoidal_functor, validate_monoidal_nat, MonoidalFunctorData, MonoidalKind,
    MonoidalNatData, NatCheckMode,
};
pub use structure::{
    cartesian_monoidal, cocartesian_monoidal, commutative_monoid_monoidal, product_monoidal, validate_braiding,
    validate_monoidal, MonoidalStructure,
};
pub use theorems::{
    check_coproduct_preservation, check_strength_theorem, coproduct_comparison, coproduct_comparison_functors,
    find_monoidal_iso, ComparisonFunctors, StrengthSetting,
};
