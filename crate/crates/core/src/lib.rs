//! Upper-triangular representatives of abelian groups of polynomially
//! growing outer automorphisms of free groups: filtered graphs and maps,
//! lifts to the universal cover and their fixed ends, essential axes and
//! the twist embedding into `Z^r`.
//!
//! ```
//! use kolchin::io::{run, Command, Format, DEFAULT_SEARCH_BOUND};
//!
//! let doc = "graph R { vertex v; edge a v v; edge b v v }
//! map D on R { b -> b a }
//! group K on R { gens D }";
//! let cmd = Command::Embed { group: None, words: vec!["D^3".into()], search_bound: DEFAULT_SEARCH_BOUND };
//! let out = run(doc, &cmd, Format::Text);
//! assert_eq!(out.exit_code, 0);
//! assert!(out.stdout.contains("(3)"));
//! ```

pub mod automorphism;
pub mod axes;
pub mod boundary;
pub mod error;
pub mod golden;
pub mod graph;
pub mod io;
pub mod letter;
pub mod map;
pub mod matrix;
pub mod oracle;
pub mod path;
pub mod word;

#[cfg(test)]
mod testutil;

pub use automorphism::FreeGroupAutomorphism;
pub use axes::{EssentialData, GroupWord, ILReport, MapGroup, TwistVector};
pub use boundary::{DeckElement, Lift, LineSpec, RaySpec};
pub use error::{Error, Result};
pub use graph::{EdgeId, FilteredGraph, GraphDecl, OrientedEdge, VertexId};
pub use map::FilteredMap;
pub use matrix::{IntegerMatrix, Matrix, Scalar};
pub use oracle::{Outcome as OracleOutcome, Verdict};
pub use path::{Basis, EdgePath, PathRewriter};
pub use word::FreeWord;
