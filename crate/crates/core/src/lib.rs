//! Dual graphs of squarefree monomial ideals, subspace arrangements and
//! projective line arrangements, with the homological and graph invariants
//! that relate them.

pub mod arrangement;
pub mod bounds;
pub mod census;
pub mod complex;
pub mod error;
pub mod graph;
pub mod homology;
pub mod lines;
pub mod linalg;
pub mod rational;
pub mod vertex_set;

pub use arrangement::SubspaceArrangement;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::{Diameter, Graph, HirschVerdict};
pub use linalg::FieldSpec;
pub use lines::LineArrangement;
pub use vertex_set::VertexSet;
