//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Coxeter graphs of type E are only defined for rank at least 6.
    #[error("rank {0} is below the minimum rank 6")]
    RankTooSmall(usize),

    /// A word referenced a generator index outside `0..rank`.
    #[error("generator {gen} out of range for rank {rank}")]
    InvalidGenerator { gen: usize, rank: usize },

    /// A letter of the input word can be cancelled, so the word is not
    /// reduced.
    #[error("word is not reduced")]
    NotReduced,

    /// The input word contains a long-braid factor `sts` up to commutation,
    /// so it is not a reduced word of a fully commutative element.
    #[error("word is not a reduced word of a fully commutative element")]
    NotFullyCommutative,

    /// A commuting set contained two adjacent vertices.
    #[error("vertices {0} and {1} are adjacent, set is not commuting")]
    AdjacentPair(usize, usize),

    /// Unbounded enumeration was requested for a rank where the guard
    /// against runaway memory use applies.
    #[error("unbounded enumeration at rank {0} requires a length bound")]
    UnboundedEnumeration(usize),

    /// Two diagrams or elements of different ranks were combined.
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    /// A trace exponent fed to the `v^-1` coefficient extraction was
    /// positive.  Traces of monomial products always have nonpositive
    /// exponent, so this signals an upstream bug.
    #[error("positive trace exponent {0} cannot arise from a monomial product")]
    PositiveTraceExponent(i64),

    /// A configured resource limit was exceeded.
    #[error("{what} limit exceeded: needed {needed}, limit {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        needed: usize,
    },

    /// Failure while parsing a word or other textual input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A serialized diagram violated a structural invariant.
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
}
