//! Finitely presented group machinery: permutations, coset enumeration,
//! Tietze simplification, abelianization and the verification pipeline.

mod abelian;
mod coset;
mod permutation;
mod tietze;
mod verify;

pub use abelian::{abelianization, relation_matrix, smith_diagonal};
pub use coset::{enumerate, todd_coxeter, Enumerated, Overflow, Strategy};
pub use permutation::{group_order, Permutation, StabilizerChain};
pub use tietze::{tietze_simplify, tietze_simplify_with, TietzeOptions};
pub use verify::{
    edge_homomorphism, image_order, verify_homomorphism, verify_simply_connected, verify_with, GeneratorMap,
    VerificationReport, VerifyOptions, DEFAULT_MAX_COSETS, MAX_COSETS_ENV, SCHEMA_VERSION,
};
