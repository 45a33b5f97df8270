//! Exact computations for finite-dimensional Hom-Lie superalgebras.
//!
//! An algebra is given by structure constants over the rationals
//! ([`AlgebraSpec`]). From it the crate solves for the spaces of twisted
//! derivations, generalized derivations, quasiderivations, centroids,
//! quasicentroids and central derivations ([`solve_space`]), checks the
//! structural relations among them ([`theorems`]), and builds the
//! `t`-truncated extension in which quasiderivations become derivations
//! ([`extension`]). All arithmetic is exact.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod extension;
pub mod format;
pub mod linalg;
pub mod maps;
pub mod report;
pub mod spaces;
pub mod theorems;

pub use algebra::{AlgebraSpec, BracketEntry, Parity, ValidationReport};
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Subspace};
pub use maps::GradedMap;
pub use spaces::{decompose_generalized, solve_space, MapSpace, Mode, SpaceCache, SpaceKind};
pub use extension::{build_extended, phi, ExtendedAlgebra};
pub use report::{Check, CheckReport, Status, Witness};
