//! Exact status (transmission) connectivity indices and co-indices of graphs.
//!
//! The crate computes vertex transmissions by all-pairs BFS, evaluates the
//! status indices `S1`, `S2`, their co-indices, the Wiener index and the
//! Zagreb (co-)indices with exact integer arithmetic, generates hypercubes,
//! Kneser graphs, uniform intersection graphs and polyhex nanotori, and
//! checks published closed forms for those families against the generated
//! graphs.

pub mod arith;
pub mod closed_forms;
pub mod commands;
pub mod error;
pub mod families;
pub mod graph;
pub mod indices;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use families::{FamilySpec, DEFAULT_VERTEX_CAP};
pub use graph::{parse_edge_list, transmission_profile, Graph, TransmissionProfile};
pub use indices::{compute_indices, IndexBundle, StatusValues};
