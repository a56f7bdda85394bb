//! Connectivity analysis for correspondent-banking style payment networks.
//!
//! The crate is organised bottom-up: [`graph`] holds the digraph type and
//! traversal primitives, everything else reads from it.

pub mod accessibility;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod reduction;

pub use error::{Error, Result};
pub use graph::{Digraph, Distance, VertexKind, VertexRecord, VertexSet};
