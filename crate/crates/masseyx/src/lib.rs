//! Secret sharing from linear codes, with exact arithmetic end to end.
//!
//! A secret of length `l` over GF(q) is embedded as the first `l`
//! coordinates of a codeword of an `[l+n, k, d]` code with `d > l`; the
//! remaining `n` coordinates are the participant shares. This crate
//! implements the dealer and reconstructor, classifies participant groups,
//! enumerates minimal access groups through the dual code, and computes the
//! joint weight enumerator machinery that counts access groups of each size.
//!
//! Start with the runnable examples (`cargo run -p masseyx --example <name>`):
//!
//! - `deal_and_reconstruct` — share a secret and rebuild it from a group
//! - `classify_groups` — full / partial / no-information classification
//! - `access_structure` — minimal access groups, histogram, and size bounds
//! - `weight_hierarchy` — generalized Hamming weights behind the bounds
//! - `biweight_enumerator` — 2-fold joint weight enumerator of a code
//! - `secret_polynomial` — the access-group counting polynomial Z
//! - `certified_counts` — extension enumerators and certified exact counts
//! - `code_files` — the plain-text matrix file format
//!
//! The same operations are scriptable through the `masseyx` binary; see the
//! README for the subcommand list.

pub mod access;
pub mod catalog;
pub mod cli;
pub mod code;
pub mod enumpoly;
pub mod error;
pub mod gf;
pub mod io;
mod linalg;
pub mod reproduce;
pub mod scheme;

pub use code::{Codeword, LinearCode, DEFAULT_CAP};
pub use error::{Error, Result};
pub use gf::{make_field, FieldElement, FieldSpec};
