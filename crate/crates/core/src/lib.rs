//! Fault-tolerant simple nanowire decoders as set systems.
//!
//! An (m, n)-SND is a set system of order m and size n: block i lists the
//! mesowires controlling nanowire i. The decoder tolerates e fabrication
//! errors exactly when the system is (e+1)-diffbounded, which ties the
//! addressing limit N(m, e) to antichains, constant-weight codes, and
//! combinatorial designs. This crate provides:
//!
//! - the set-system data model and verifiers ([`setsystem`]),
//! - decoder semantics with brute-force fault oracles ([`decoder`]),
//! - closed-form lower/upper bounds on N(m, e) ([`bounds`]),
//! - explicit witness constructions ([`constructors`]),
//! - exact computation of N(m, e) by clique search ([`search`]),
//! - the set-system interchange formats ([`format`]).

pub mod bounds;
pub mod combin;
pub mod constructors;
pub mod decoder;
pub mod error;
pub mod format;
pub mod search;
pub mod setsystem;

pub use error::{Error, Result};
pub use setsystem::{BinaryWord, Block, DesignParams, SetSystem};
