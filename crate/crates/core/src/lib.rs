//! Morphism-extension classes of finite graphs whose vertices and edges are
//! colored by a bounded poset.
//!
//! The [`decider`] settles membership in every class `XY` (every partial
//! x-morphism extends to a total y-endomorphism) by exhaustive search. The
//! [`classify`] module holds fast structural descriptions of the MH / HH
//! members over chains and diamonds, which [`census`] cross-checks against
//! the decider on every small structure.

pub mod catalog;
pub mod census;
pub mod classify;
pub mod decider;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod morphism;
pub mod poset;
pub mod structure;

pub use decider::{decide, hierarchy_profile, ClassVerdict, Decider, ExtensionClass, Membership};
pub use error::{Error, Result};
pub use morphism::{check_morphism, extend_to_total, isomorphic, MorphismKind, PartialMap};
pub use poset::{Color, Poset, Shape};
pub use structure::{ColoredStructure, Flags};
