//! Rooted K4-minors: search, certificates and verification.

mod bits;
pub mod connectivity;
pub mod decider;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod instance;
pub mod linkage;
pub mod minors;
pub mod obstructions;
pub mod planarity;
pub mod sample;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Triangle, Vertex, VertexSet};
pub use instance::{enumerate_separations, RootedInstance, Separation};
pub use minors::{oracle_rooted_minor, rooted_k3, verify_witness, K3Certificate, K3Outcome, MinorWitness};
pub use decider::{decide, Decision, Verdict};

// Compiles and runs the book's snippets as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/graphs.md")]
    struct Graphs;
    #[doc = include_str!("../../../book/src/witnesses.md")]
    struct Witnesses;
    #[doc = include_str!("../../../book/src/linkages.md")]
    struct Linkages;
    #[doc = include_str!("../../../book/src/obstructions.md")]
    struct Obstructions;
    #[doc = include_str!("../../../book/src/decider.md")]
    struct Decider;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
    #[doc = include_str!("../../../book/src/testing.md")]
    struct Testing;
    #[doc = include_str!("../../../README.md")]
    struct Readme;
}
