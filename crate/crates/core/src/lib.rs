//! Structure and exact optimization for (P7, C4, C5)-free graphs.

pub mod arcs;
pub mod certificate;
pub mod chordal;
pub mod cutset;
pub mod error;
pub mod forge;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod patterns;
pub mod rational;
pub mod recognize;
pub mod solution;
pub mod solve;

pub use error::{Error, Result};
pub use graph::{Graph, Induced, TwinDecomposition, VertexSet};
pub use rational::Rational;
pub use solution::{Coloring, WeightedSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/recognition.md")]
    mod recognition {}
    #[doc = include_str!("../../../book/src/solvers.md")]
    mod solvers {}
    #[doc = include_str!("../../../book/src/arcs.md")]
    mod arcs {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
