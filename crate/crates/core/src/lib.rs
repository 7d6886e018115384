//! Exact structure-constant algebras and Novikov structures on Lie algebras.
//!
//! The crate is organised around a handful of layers:
//!
//! - [`scalar`]: exact rationals, the only scalar type used anywhere.
//! - [`algebra`]: sparse structure-constant algebras, vectors and multiplication operators.
//! - [`checks`]: the defining identities (Lie, left-symmetric, Novikov, compatibility,
//!   operator identity) verified exhaustively on basis tuples.
//! - [`subspace`] and [`series`]: echelonized subspaces, ideals, centers, central and
//!   derived series, quotients.
//! - [`lemmas`]: the ideal-theoretic consequences of the Novikov identities, as checks.
//! - [`constructions`]: factories for every algebra family shipped with the engine.
//! - [`solver`]: the nonexistence prover with replayable certificates.
//!
//! All indices in the Rust API are zero-based. Interchange documents and certificates use
//! one-based indices.

pub mod algebra;
pub mod checks;
pub mod constructions;
pub mod error;
pub mod lemmas;
mod par;
pub mod scalar;
pub mod series;
pub mod solver;
pub mod subspace;

pub use algebra::{Algebra, AlgebraBuilder, NovikovStructure, Operator, Vector};
pub use checks::{CheckKind, CheckReport, Witness};
pub use error::{Error, Result};
pub use scalar::Rational;
pub use subspace::Subspace;
