//! Dowling and Rhodes lattices over a finite group, the simplicial
//! complexes they Boolean-represent, gain-graph matroids and Boolean matrix
//! representations.

mod bitset;
pub mod boolrep;
pub mod complex;
pub mod counting;
pub mod error;
pub mod gain_graph;
pub mod group;
pub mod lattice;
pub mod models;
pub mod oracle;
pub mod partition;
pub mod spc;
pub mod verify;
pub mod wreath;

pub use error::{Error, Result};
pub use complex::{LatticeRepresentation, SimplicialComplex};
pub use gain_graph::GainGraph;
pub use group::FiniteGroup;
pub use lattice::{FiniteLattice, FinitePoset};
pub use partition::PartialPartition;
pub use spc::{Spc, SpcSpace};
