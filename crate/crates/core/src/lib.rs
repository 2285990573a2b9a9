//! Learning convex combinations of dissimilarity representations for ranking.
//!
//! Given `J` pairwise dissimilarity matrices over the same vertex set and a
//! query with a handful of vertices known to be similar to it, this crate
//! learns a weight vector on the `(J-1)`-simplex so that the blended
//! dissimilarity pushes the known-similar vertices to the top of the query's
//! ranked list. The objective — the number of candidates that outrank any
//! known-similar vertex — is integer-valued and is minimized exactly, either
//! by a breakpoint sweep (two representations) or by branch-and-bound over a
//! big-M indicator encoding (any number of representations). A multi-query
//! variant pools several (query, similar-set) pairs into one joint objective.
//!
//! The crate also ships the surrounding machinery needed to study the method
//! end to end: a latent-position random graph sampler, adjacency and
//! normalized-Laplacian spectral embeddings, ranking metrics (mean reciprocal
//! rank and friends), and the three weight estimators compared against each
//! other in experiments.
//!
//! All numeric code is generic over the scalar type via [`Scalar`];
//! `f64` aliases are exported at the crate root for the common case.

pub mod error;
pub mod estimators;
pub mod graph;
pub mod metrics;
pub mod rank;
pub mod scalar;
pub mod solver;
pub mod spectral;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{CoreError, Result};
pub use scalar::Scalar;

pub use estimators::{estimate, estimate_all, EstimateSet, EstimatorKind};
pub use graph::{
    build_probability_matrix, sample_graph, sample_latent_positions, AdjacencyMatrix,
    LatentPositions, ProbabilityMatrix,
};
pub use metrics::{mrr, normalized_mrr, recall_at_k, EvaluationSet};
pub use rank::{combine, rank, rank_excluding, AlphaVector, DissimilarityStack, RankedList};
pub use solver::{
    build_instance, ilp_solve, mqilp_solve, objective_at, Engine, EngineKind, MilpInstance,
    MultiQueryTask, QueryTask, SolveReport,
};
pub use spectral::{ase_embed, lse_embed, pairwise_dissimilarity, DissimilarityMatrix, Embedding, EmbeddingKind};

/// Default scalar type used by the experiment harness and the CLI.
pub type Real = f64;

/// `f64` dissimilarity matrix.
pub type DissimilarityMatrixF64 = spectral::DissimilarityMatrix<f64>;
/// `f64` dissimilarity stack.
pub type DissimilarityStackF64 = rank::DissimilarityStack<f64>;
/// `f64` simplex weight vector.
pub type AlphaVectorF64 = rank::AlphaVector<f64>;
/// `f64` solve report.
pub type SolveReportF64 = solver::SolveReport<f64>;
