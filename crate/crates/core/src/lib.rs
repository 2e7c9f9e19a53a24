//! Classification of trace-Hermitian self-dual additive codes over GF(9).
//!
//! A self-dual additive code of length `n` is a GF(3)-linear subgroup of
//! GF(9)^n with `3^n` codewords that equals its own dual under the Hermitian
//! trace inner product. Every such code is equivalent to one generated by
//! `Γ + ωI`, where `Γ` is the adjacency matrix of a 3-weighted graph; this crate
//! classifies codes up to equivalence by lengthening graphs and canonizing a
//! colored digraph whose automorphisms are exactly those of the code.
//!
//! Module map:
//! - [`galois`]: GF(3), GF(9), the trace inner product and Sp2(3).
//! - [`code`]: packed codewords, generator matrices, weights and distances.
//! - [`standard_form`]: weighted graphs and the reduction to `Γ + ωI`.
//! - [`canon`]: canonical labeling of vertex-colored digraphs.
//! - [`equivalence`]: equivalence graphs, canonical codes and `|Aut|`.
//! - [`classify`]: the classification loop, census tables and mass checks.
//! - [`db`]: the class database file format.
//! - [`cli`]: the `sdac9` command-line front end.

pub mod canon;
pub mod classify;
pub mod cli;
pub mod code;
pub mod db;
pub mod equivalence;
pub mod error;
pub mod galois;
pub mod standard_form;

pub use error::{Error, Result};
