use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is not a vertex of this graph")]
    NotAVertex(usize),

    #[error("graphs need between 1 and 64 vertices, got {0}")]
    BadVertexCount(usize),

    #[error("cycle graphs need at least 3 vertices, got {0}")]
    CycleTooSmall(usize),

    #[error("edge {{{0}, {1}}} is a loop")]
    LoopEdge(usize, usize),

    #[error("{0} is not a subset of the graph's vertex set")]
    NotAVertexSubset(crate::set::VertexSet),

    #[error("cover member {0} is not a subgraph of the host graph")]
    NotASubgraph(usize),

    #[error("ambient ring mismatch: {0} variables vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("support {support} does not fit in a ring with {n} variables")]
    SupportOutOfRange { support: crate::set::VertexSet, n: usize },

    #[error("monomial is not squarefree: variable x{0} already divides it")]
    NotSquarefree(usize),

    #[error("the zero ideal has no Alexander dual")]
    DualOfZero,

    #[error("the unit ideal has no Alexander dual")]
    DualOfUnit,

    #[error("the unit ideal has the void Stanley-Reisner complex")]
    UnitIdealComplex,

    #[error("the void complex has no dimension, homology or faces")]
    VoidComplex,

    #[error("{0} is not a face of the complex")]
    NotAFace(crate::set::VertexSet),

    #[error("Alexander dual of a full simplex is degenerate (unit ideal)")]
    DegenerateDual,

    #[error("size guard exceeded: n = {n} > {limit} (set CIL_MAX_N to override at your own risk)")]
    SizeGuard { n: usize, limit: usize },

    #[error("facet cap exceeded: {0} facets > {1}")]
    FacetCap(usize, usize),

    #[error("generator cap exceeded: linear-quotient search gave up after {0} steps")]
    LinearQuotientBudget(u64),

    #[error("generator cap exceeded: Taylor strand enumeration needs <= {1} generators, got {0}")]
    TaylorCap(usize, usize),

    #[error("Betti numbers are undefined for the {0} ideal")]
    BettiUndefined(&'static str),

    #[error("linear quotients are undefined for the {0} ideal")]
    LinearQuotientsUndefined(&'static str),

    #[error("empty Betti table: regularity and projective dimension are undefined")]
    EmptyBettiTable,

    #[error("graph is not chordal: no perfect elimination order exists")]
    NotChordal,

    #[error("subject must be \"ideal\" or \"quotient\", got {0:?}")]
    BadSubject(String),

    #[error("characteristic must be 0 or a prime, got {0}")]
    NotPrime(u64),

    #[error("prime fields are supported up to 2^31, got {0}")]
    PrimeTooLarge(u64),

    #[error("malformed field spec {0:?} (expected \"0\", \"2\" or \"p:<prime>\")")]
    BadFieldSpec(String),

    #[error("malformed graph spec {0:?}")]
    BadGraphSpec(String),

    #[error("graph spec refers to a file, but no file loader is available here")]
    FileSpecUnsupported,

    #[error("facet order is not a permutation of the facets of the complex")]
    NotAFacetPermutation,

    #[error("facet order is not a shelling")]
    NotAShelling,

    #[error("generators do not admit linear quotients in the given order (position {0})")]
    NotLinearQuotients(usize),

    #[error("ordered generators are not a minimal generating set")]
    NotMinimalGenerators,

    #[error("linear-quotient certificate sets do not match the recomputed sets at position {0}")]
    CertificateSetMismatch(usize),

    #[error("{n} < {min}: the ideal is zero here")]
    BelowThreshold { n: usize, min: usize },

    #[error("not a vertex splitting: {0}")]
    NotAVertexSplit(&'static str),

    #[error("internal identity failed: {0}")]
    IdentityFailed(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
