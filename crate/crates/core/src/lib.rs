//! Exact root systems, root polytopes and their polars.
//!
//! The crate builds every finite irreducible crystallographic root system in
//! Bourbaki numbering with exact rational data, and decides for each type
//! whether the polar of its root polytope is a zonotope: explicit generators
//! and subset-sum certificates where it is, explicit facet-cutting
//! hyperplanes where it is not.
//!
//! Module map:
//! - [`exactlin`]: rationals, vectors, fraction-free solving.
//! - [`lp`]: exact phase-one simplex.
//! - [`rootsys`]: root systems, weights, coweights, alcove vertices.
//! - [`weyl`]: reflections, words, inversion sets, orbits.
//! - [`polytopes`]: the polar polytope, standard facets, the arrangement.
//! - [`zonotopes`]: support functions, containment, certificates.
//! - [`verifier`]: case-by-case reports.

pub mod error;
pub mod exactlin;
pub mod lp;
pub mod polytopes;
pub mod rootsys;
pub mod verifier;
pub mod weyl;
pub mod zonotopes;

pub use error::{Error, Result};
pub use exactlin::{Rational, RationalMatrix, RationalVector};
pub use rootsys::{build_root_system, DualKind, Family, RootSystem, TypeLabel};

pub use weyl::{Letter, Orbit, WeylWord};
