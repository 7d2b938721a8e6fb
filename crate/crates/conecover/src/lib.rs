//! Fundamental groups of Galois covers of cones over stick curves.
//!
//! The pipeline builds the braid monodromy factorization of the branch curve,
//! reads off the van Kampen presentation of G and G1, and decides G1 ≅ S_k by
//! coset enumeration together with the edge homomorphism onto S_k.

pub mod braid;
pub mod cli;
pub mod engine;
pub mod error;
pub mod free_group;
pub mod invariants;
pub mod monodromy;
pub mod van_kampen;

pub use error::{Error, Result};
