//! Non-commuting graphs of Lie algebras over finite fields.
//!
//! For a non-abelian Lie algebra `L` over `F_q`, the non-commuting graph has
//! the points of the projective space `P(L/Z(L))` as vertices, with `[x] ~ [y]`
//! whenever `[x, y] ≠ 0`. This crate builds that graph from structure
//! constants, computes its invariants exactly on small instances, and checks
//! the known structural results about it against individual algebras and
//! against exhaustive censuses of small algebras.
//!
//! ```
//! use ncgraph::{catalog, graph::NcGraph};
//!
//! let l = catalog::heisenberg(3).unwrap();
//! let g = NcGraph::build(&l).unwrap();
//! assert_eq!(g.order(), 4);
//! assert!(g.graph().is_complete());
//! ```

pub mod catalog;
pub mod cli;
pub mod cover;
pub mod error;
pub mod field;
pub mod graph;
pub mod guards;
pub mod lie;
pub mod linalg;
pub mod projective;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Elem, Field, FieldSpec};
pub use guards::Guards;
pub use lie::{LieAlgebra, SeriesData, Violation};
pub use linalg::{Matrix, Subspace, Vector};
pub use projective::{CentralQuotient, ProjPoint};
