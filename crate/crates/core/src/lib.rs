//! Exact mixed metric dimension of small graphs, its lower bounds, and the
//! supporting graph toolkit: distance oracles, graph families, graph6 I/O,
//! isomorphism-free enumeration and a hitting-set solver.

pub mod bitset;
pub mod bounds;
pub mod cover;
pub mod dims;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod lp;
pub mod tables;
pub mod torus;

pub use bitset::VertexSet;
pub use bounds::{bounds_report, BoundsReport};
pub use dims::{beta, beta_e, beta_m, Dimension, ItemUniverse};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use graph::{DistanceOracle, Graph, MixedItem};
pub use graph6::{encode_graph6, parse_graph6};
