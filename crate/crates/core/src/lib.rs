//! Symbol-weight codes over `Z_q`.
//!
//! The symbol weight of a word is the largest number of times any single
//! symbol occurs in it. This crate computes the exact and asymptotic sizes of
//! the constant symbol-weight space `SW(n,q,r)` and the bounded space
//! `SW(n,q,<=r)`, evaluates upper and lower bounds on the largest codes with a
//! given minimum distance inside them, and builds explicit constant
//! symbol-weight codes, most notably subcodes of Reed-Solomon codes.
//!
//! Every desk-scale claim can be cross-checked with the brute-force searches
//! in [`codes`] and [`compositions`].
//!
//! Heavy loops (word scans, clique search, construction audits) run on rayon
//! when the `parallel` feature is enabled; [`Exec::Sequential`] forces the
//! single-threaded path.

pub mod arith;
pub mod bounds;
pub mod clique;
pub mod codes;
pub mod compositions;
mod config;
mod error;
pub mod field;
pub mod spaces;

pub use config::{Config, Exec};
pub use error::{Error, Result};

/// Arbitrary-precision non-negative integer used for every exact count.
pub type Count = num_bigint::BigUint;
