//! Exact solving and strategy evaluation for the localization game on graphs.
//!
//! In the localization game a team of cops probes vertices each round and
//! learns the distance from every probed vertex to an invisible robber, who
//! then moves to a neighbor or stays. The cops win once the answers pin the
//! robber to a single vertex.

pub mod decomposition;
pub mod designs;
pub mod game;
pub mod generators;
pub mod graph;
pub mod solver;
pub mod strategy;
pub mod verify;
pub mod vertex_set;

pub mod cli;

pub use game::{KnowledgeState, ProbeSet};
pub use graph::Graph;
pub use vertex_set::VertexSet;
