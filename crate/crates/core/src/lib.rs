//! Bijective machinery on rooted planar bipartite maps.
//!
//! * [`map`]: rotation systems, duality, colorings, canonical forms.
//! * [`trees`]: eulerian trees, border words, rerooting.
//! * [`schaeffer`]: closure/opening and the spanning tree `tau`.
//! * [`bijections`]: the marked-vertex and marked-face bijections.
//! * [`enumeration`]: exhaustive generation.
//! * [`identities`]: counting identities over any integer type.
//! * [`lemmas`]: structural facts as exhaustive checks.
//! * [`io`]: text formats for maps and trees.
//! * [`sweep`]: exhaustive bijectivity checks.
//! * [`cli`]: the command-line front end.

mod darts;
pub mod error;
pub mod map;
pub mod schaeffer;
pub mod trees;
pub mod enumeration;
pub mod bijections;
pub mod identities;
pub mod io;
pub mod lemmas;
pub mod sweep;
pub mod cli;

pub use error::{BijectionError, MapError, ParseError, TreeError};
pub use map::{Color, DegreeDistribution, DegreeMode, HalfEdge, PlanarMap};
pub use trees::{BorderWord, EulerianTree, Sign};

/// Exact count type used by the identity checks and the CLI.
pub type Count = num_bigint::BigUint;
