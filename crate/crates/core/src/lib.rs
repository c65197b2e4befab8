//! Independence complexes of graphs, the recursive psi lower bound on their
//! connectivity, and the machinery to check that bound exhaustively on small
//! graphs: exact integral homology, edge-path presentations of the
//! fundamental group, barycentric subdivision and the face-poset encoding of
//! a simplicial complex as a graph.

pub mod cli;
pub mod complex;
pub mod ext;
pub mod graph;
pub mod homology;
pub mod psi;
pub mod verify;

pub use ext::ExtInt;
pub use graph::{Edge, Graph};
