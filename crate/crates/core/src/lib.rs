//! Edge colorings in which every pair of vertices is joined by a properly
//! colored walk.
//!
//! The smallest number of colors that allows this is the proper-walk
//! connection number `pW`. This crate has
//!
//! - [`graph`] and [`io`]: graphs, digraphs, colorings and their text formats,
//! - [`generate`]: named families and exhaustive enumerators,
//! - [`decompose`]: bridges, blocks, odd cycles, disjoint paths,
//! - [`orient`]: strong and path-anchored orientations,
//! - [`verify`]: walk and path verifiers,
//! - [`construct`]: constructive colorings and the [`construct::pw_auto`] dispatcher,
//! - [`exact`]: an exhaustive solver used as an oracle,
//! - [`cli`]: the command-line front end behind the `properwalk` binary.

pub mod cli;
pub mod construct;
pub mod decompose;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod io;
pub mod orient;
pub mod verify;

pub use graph::{Color, ColoringResult, Digraph, EdgeColoring, EdgeId, Graph, Route, Status, Vertex, Walk};
