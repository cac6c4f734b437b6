//! Exact-arithmetic toolkit for graphic arrangements, q-deformations of
//! simplicial complexes and graphic monomial arrangements over finite fields.
//!
//! The crate computes characteristic polynomials by three independent routes
//! (intersection-lattice Mobius sums, subset inclusion-exclusion, and
//! finite-field point counting), constructs explicit derivation bases for the
//! chordal families, certifies them with Saito's criterion, and checks
//! supersolvability through explicit filtrations.

pub mod arrangement;
pub mod charpoly;
pub mod cli;
pub mod combinat;
pub mod freeness;
pub mod gf;
pub(crate) mod linalg;
pub mod polyalg;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadExtensionDegree,
    #[error("coefficient out of range for field")]
    BadCoefficient,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no inverse power")]
    ZeroToNegativePower,
    #[error("mismatched field specs")]
    FieldMismatch,
    #[error("no primitive {0}-th root")]
    NoPrimitiveRoot(usize),
    #[error("no embedding: {0}")]
    NoEmbedding(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loops are not allowed")]
    LoopEdge,
    #[error("{0}")]
    InvalidEdge(String),
    #[error("edge lies in a larger face")]
    NonMaximalFace,
    #[error("skeleton parameter out of range")]
    BadSkeleton,
    #[error("not a valid perfect elimination ordering")]
    InvalidPeo,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("hyperplane not in arrangement")]
    HyperplaneNotPresent,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("invalid substitution: {0}")]
    BadSubstitution(String),
    #[error("zero linear form")]
    ZeroLinearForm,
    #[error("derivation is not homogeneous")]
    NotHomogeneous,
    #[error("malformed filtration: {0}")]
    BadFiltration(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal identity violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
