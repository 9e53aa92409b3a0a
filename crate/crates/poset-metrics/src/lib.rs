//! Distances and metrics on finite partially ordered sets.
//!
//! The crate provides:
//! - construction and structural analysis of finite posets ([`poset`]);
//! - the zigzag, up-down, down-up, and Chebyshev distances, metric-axiom
//!   and chain-compatibility checks, and kinship degrees ([`metrics`]);
//! - deterministic generators for named families and witnesses
//!   ([`families`]);
//! - isomorphism-free enumeration of all posets up to 8 elements
//!   ([`enumerate`]);
//! - a harness that checks the structural claims over that enumeration and
//!   mines counterexamples ([`verify`]);
//! - the poset file format used by the `posets` CLI ([`io`]).

mod bits;
mod exec;

pub mod enumerate;
pub mod error;
pub mod families;
pub mod io;
pub mod metrics;
pub mod poset;
pub mod verify;

pub use error::{PosetError, Result};
pub use poset::{build_poset, ElementId, Poset, StructuralReport};
