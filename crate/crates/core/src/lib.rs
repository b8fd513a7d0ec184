//! Catalan and shifted matroids, computed exactly.
//!
//! The crate builds the Catalan matroid on Dyck-path up-step sets and the
//! shifted matroids `SM(s_1, …, s_n)`, computes Tutte polynomials three
//! independent ways, and checks every closed-form description against
//! brute-force matroid oracles.

pub mod catalan;
pub mod complexes;
pub mod error;
pub mod matroid;
pub mod par;
pub mod paths;
pub mod representation;
pub mod sets;
pub mod tutte;
pub mod verify;

pub use error::{Error, Limits, Result};
pub use matroid::{BasisFamily, RankTable};
pub use paths::StepSet;
pub use sets::ElementSet;
