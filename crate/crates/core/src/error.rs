//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T, E = CoreError> = std::result::Result<T, E>;

/// Errors produced by validation and construction routines.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: |m[{row},{col}] - m[{col},{row}]| = {delta:e} exceeds tolerance {tol:e}")]
    NotSymmetric {
        row: usize,
        col: usize,
        delta: f64,
        tol: f64,
    },

    #[error("dimension mismatch for {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("entry ({row},{col}) = {value} is not a valid probability (outside [0,1] by more than 1e-12)")]
    ProbabilityOutOfRange { row: usize, col: usize, value: f64 },

    #[error("latent position row {row} leaves the positive unit ball: {reason}")]
    LatentSupport { row: usize, reason: String },

    #[error("entry ({row},{col}) = {value} is negative; dissimilarities must be nonnegative")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    #[error("entry ({row},{col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("diagonal entry ({index},{index}) = {value:e} is not zero (tolerance {tol:e})")]
    NonzeroDiagonal { index: usize, value: f64, tol: f64 },

    #[error("vertex {vertex} is isolated (zero degree); drop it or restrict to the largest connected component")]
    IsolatedVertex { vertex: usize },

    #[error("embedding dimension {requested} invalid for an {n}x{n} matrix (need 1 <= d <= n)")]
    EmbeddingDimension { requested: usize, n: usize },

    #[error("invalid weight vector: {reason}")]
    InvalidAlpha { reason: String },

    #[error("invalid query task: {reason}")]
    InvalidTask { reason: String },

    #[error("vertex id {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("engine {engine} requires exactly two representations, stack has {layers}")]
    EngineNeedsTwoLayers { engine: &'static str, layers: usize },

    #[error("invalid evaluation set: {reason}")]
    InvalidEvalSet { reason: String },

    #[error("evaluation member {vertex} does not appear in the ranked list")]
    MemberNotRanked { vertex: usize },

    #[error("cutoff k = {k} out of range (1..={max})")]
    CutoffOutOfRange { k: usize, max: usize },

    #[error("empty dissimilarity stack")]
    EmptyStack,

    #[error("stack layer {layer} has size {found}, expected {expected}")]
    LayerSizeMismatch {
        layer: usize,
        expected: usize,
        found: usize,
    },

    #[error("grid resolution {resolution} too coarse (need at least 2)")]
    GridResolution { resolution: usize },
}
