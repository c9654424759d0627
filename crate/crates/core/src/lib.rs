//! Link groups and link-homotopy invariants of torus-covering T²-links.
//!
//! A torus-covering T²-link `S_m(a, b)` is determined by a pair of commuting
//! `m`-braids. This crate computes its components, directional linking
//! numbers, double and triple linking numbers, peripheral data and link group,
//! and decides abelianness of the group by Knuth–Bendix completion.

pub mod artin;
pub mod braid;
pub mod constructions;
pub mod error;
pub mod group;
pub mod lattice;
pub mod linking;
pub mod report;
pub mod tables;

pub use error::{Error, Result};
