//! Matchings by inverses on finite regular semigroups.
//!
//! A permutation matching of a semigroup `S` is a bijection `f: S → S` with
//! `f(a)` an inverse of `a` for every `a`; an involution matching also has
//! `f ∘ f = id`. This crate decides and constructs such matchings by reducing
//! them to factor problems on the graph of inverses and its bipartite double
//! cover, and ships the transformation monoids, Rees matrix semigroups and
//! small catalog instances the constructions are exercised on.

pub mod constructions;
pub mod engine;
pub mod error;
pub mod format;
pub mod graphs;
pub mod green;
pub mod matchers;
pub mod report;
pub mod semigroup;
pub mod suites;
pub mod transform;

pub use error::{Error, Result};
pub use semigroup::{ElementId, Semigroup};
