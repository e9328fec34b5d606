//! Numeric tolerances and default budgets, kept in one place.
//!
//! The exact modules (words, matrices, coset tables) have no tolerances; only
//! the floating-point reflection representation in [`crate::triangle`] does.

/// Residual allowed for a single constructed isometry, e.g. `X^2 = I` or
/// `M^T J M = J` right after building a reflection.
pub const CONSTRUCTION: f64 = 1e-9;

/// Residual allowed after composing products (relation powers, longitude
/// images, commutators).
pub const COMPOSED: f64 = 1e-7;

/// A translation length must exceed this to count as nontrivial.
pub const MIN_TRANSLATION: f64 = 1e-3;

/// Default ι-application depth for meridian and pair enumeration.
pub const DEFAULT_DEPTH: usize = 2;

/// Default maximal permutation degree for homomorphism search.
pub const DEFAULT_DEGREE: usize = 6;

/// Default coset ceiling for Todd–Coxeter.
pub const DEFAULT_COSET_CEILING: usize = 1_000_000;

/// Default step budget for the bounded relator rewriter.
pub const DEFAULT_REWRITE_BUDGET: usize = 20_000;
