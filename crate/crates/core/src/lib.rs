//! Exact construction and analysis of finite-dimensional representations of
//! the q-Onsager algebra.
//!
//! Representations are obtained by pulling back tensor products of
//! evaluation modules of the `U_q(sl2)` loop algebra along the embedding
//! `z ↦ x(s) + t k(s) + t⁻¹ k(s)⁻¹`, `z* ↦ y(s) + t⁻¹ k(s) + t k(s)⁻¹`.
//! Everything is computed over the rationals, so every relation, rank and
//! subspace comparison is decided exactly.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line live in the `qonsager` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod error;
pub mod linalg;
pub mod loop_module;
pub mod onsager;
pub mod qstrings;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{DeformationParameter, Scalar};
