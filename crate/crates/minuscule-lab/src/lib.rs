//! Exact-arithmetic computational Lie theory for minuscule weights.
//!
//! The crate builds root-system data for all finite simple (and semisimple)
//! types with exact integer/rational arithmetic, enumerates Weyl orbits of
//! minuscule weights with their principal grading, and verifies a family of
//! combinatorial identities around the Dynkin polynomial
//!
//! ```text
//! D(q) = sum over weights q^(grading)  =  product over positive roots
//!        (1 - q^<rho+lambda, coroot>) / (1 - q^<rho, coroot>)
//! ```
//!
//! its even-exponent variant, the q = -1 fixed-point count under the longest
//! Weyl element, the degree-multiset form over reflection-group degrees, and
//! the Satake-diagram bookkeeping of adapted real forms.
//!
//! Node numbering follows Bourbaki throughout; see the README for diagram
//! conventions. Library APIs index nodes from 0; the CLI and all rendered
//! output use 1-based Bourbaki labels.
//!
//! Everything is a pure function over immutable values; all values are safe
//! to share across threads.

pub mod error;
pub mod minuscule;
pub mod polyarith;
pub mod realforms;
pub mod report;
pub mod rootsys;
pub mod verify;
pub mod weyl;

mod ratmat;

pub use error::{Error, Result};
pub use minuscule::GradedOrbit;
pub use polyarith::{CycloRatio, IntPoly};
pub use rootsys::{RootSystem, SemisimpleType, SimpleType, Weight};
