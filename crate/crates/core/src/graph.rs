//! Latent-position random graph sampling.
//!
//! Vertices carry latent vectors drawn uniformly from the positive unit ball;
//! edge probabilities are pairwise inner products, and graphs are sampled by
//! independent Bernoulli draws on the upper triangle.

use nalgebra::DMatrix;
use num_traits::Float;
use rand::Rng;

use crate::error::{CoreError, Result};
use crate::scalar::{from_f64, Scalar};

/// Tolerance for inner products escaping `[0, 1]` through rounding.
const PROBABILITY_TOL: f64 = 1e-12;

/// Latent vectors, one row per vertex, supported on the intersection of the
/// nonnegative orthant with the closed unit ball.
#[derive(Debug, Clone, PartialEq)]
pub struct LatentPositions<T: Scalar> {
    x: DMatrix<T>,
}

impl<T: Scalar> LatentPositions<T> {
    /// Wraps an `n x m` matrix after checking the support constraints: every
    /// coordinate nonnegative and every row of Euclidean norm at most one.
    pub fn from_matrix(x: DMatrix<T>) -> Result<Self> {
        let tol = from_f64::<T>(PROBABILITY_TOL);
        for i in 0..x.nrows() {
            let row = x.row(i);
            if row.iter().any(|v| *v < T::zero()) {
                return Err(CoreError::LatentSupport {
                    row: i,
                    reason: "negative coordinate".to_string(),
                });
            }
            let norm = Float::sqrt(row.iter().map(|v| *v * *v).fold(T::zero(), |a, b| a + b));
            if norm > T::one() + tol {
                return Err(CoreError::LatentSupport {
                    row: i,
                    reason: format!("norm {} exceeds 1", norm.to_f64().unwrap_or(f64::NAN)),
                });
            }
        }
        Ok(Self { x })
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.x.nrows()
    }

    /// True when there are no vertices.
    pub fn is_empty(&self) -> bool {
        self.x.nrows() == 0
    }

    /// Latent dimension.
    pub fn dim(&self) -> usize {
        self.x.ncols()
    }

    /// The underlying `n x m` matrix; rows are latent vectors.
    pub fn matrix(&self) -> &DMatrix<T> {
        &self.x
    }
}

/// Draws `n` latent vectors i.i.d. uniform on the positive part of the unit
/// ball in `R^m`, by rejection from the unit box.
///
/// Draw order is row by row, so results are reproducible for a fixed seeded
/// generator. Expected rejections per row grow with `m`; intended for the
/// small dimensions used in practice.
pub fn sample_latent_positions<T: Scalar, R: Rng>(
    n: usize,
    m: usize,
    rng: &mut R,
) -> Result<LatentPositions<T>> {
    if n == 0 || m == 0 {
        return Err(CoreError::DimensionMismatch {
            what: "latent positions (need n >= 1 and m >= 1)",
            expected: 1,
            found: 0,
        });
    }
    let mut x = DMatrix::<T>::zeros(n, m);
    let mut candidate = vec![0.0f64; m];
    for i in 0..n {
        loop {
            let mut norm_sq = 0.0;
            for c in candidate.iter_mut() {
                let v: f64 = rng.random();
                *c = v;
                norm_sq += v * v;
            }
            if norm_sq <= 1.0 {
                for (j, c) in candidate.iter().enumerate() {
                    x[(i, j)] = from_f64(*c);
                }
                break;
            }
        }
    }
    Ok(LatentPositions { x })
}

/// Symmetric matrix of pairwise edge probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityMatrix<T: Scalar> {
    p: DMatrix<T>,
}

impl<T: Scalar> ProbabilityMatrix<T> {
    /// Wraps a square matrix after checking symmetry (exact) and that every
    /// entry is a probability up to rounding tolerance.
    pub fn from_matrix(p: DMatrix<T>) -> Result<Self> {
        if p.nrows() != p.ncols() {
            return Err(CoreError::NotSquare {
                rows: p.nrows(),
                cols: p.ncols(),
            });
        }
        for i in 0..p.nrows() {
            for j in 0..p.ncols() {
                if p[(i, j)] != p[(j, i)] {
                    return Err(CoreError::NotSymmetric {
                        row: i,
                        col: j,
                        delta: (p[(i, j)] - p[(j, i)]).to_f64().unwrap_or(f64::NAN).abs(),
                        tol: 0.0,
                    });
                }
            }
        }
        check_probability_range(&p)?;
        Ok(Self { p })
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.p.nrows()
    }

    /// True when there are no vertices.
    pub fn is_empty(&self) -> bool {
        self.p.nrows() == 0
    }

    /// The underlying symmetric matrix.
    pub fn matrix(&self) -> &DMatrix<T> {
        &self.p
    }
}

fn check_probability_range<T: Scalar>(p: &DMatrix<T>) -> Result<()> {
    let tol = from_f64::<T>(PROBABILITY_TOL);
    for i in 0..p.nrows() {
        for j in 0..p.ncols() {
            let v = p[(i, j)];
            if !Float::is_finite(v) {
                return Err(CoreError::NonFiniteEntry { row: i, col: j });
            }
            if v < -tol || v > T::one() + tol {
                return Err(CoreError::ProbabilityOutOfRange {
                    row: i,
                    col: j,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
    }
    Ok(())
}

/// Builds the edge-probability matrix `P = X X^T` from latent positions.
///
/// `P` is the verbatim Gram matrix — no clamping — and the call fails with a
/// diagnostic if any inner product leaves `[0, 1]` by more than `1e-12`.
pub fn build_probability_matrix<T: Scalar>(lp: &LatentPositions<T>) -> Result<ProbabilityMatrix<T>> {
    let x = lp.matrix();
    let mut p = x * x.transpose();
    // x * x^T need not be bit-symmetric for every BLAS-style kernel; mirror
    // the upper triangle so downstream exactness checks hold.
    for i in 0..p.nrows() {
        for j in (i + 1)..p.ncols() {
            let v = p[(i, j)];
            p[(j, i)] = v;
        }
    }
    check_probability_range(&p)?;
    Ok(ProbabilityMatrix { p })
}

/// Adjacency matrix of a graph, possibly weighted.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyMatrix<T: Scalar> {
    a: DMatrix<T>,
    directed: bool,
    binary: bool,
}

impl<T: Scalar> AdjacencyMatrix<T> {
    /// Wraps a square nonnegative matrix, recording whether it is directed
    /// (asymmetric) and whether all entries are 0/1.
    pub fn from_matrix(a: DMatrix<T>) -> Result<Self> {
        if a.nrows() != a.ncols() {
            return Err(CoreError::NotSquare {
                rows: a.nrows(),
                cols: a.ncols(),
            });
        }
        for i in 0..a.nrows() {
            for j in 0..a.ncols() {
                let v = a[(i, j)];
                if !Float::is_finite(v) {
                    return Err(CoreError::NonFiniteEntry { row: i, col: j });
                }
                if v < T::zero() {
                    return Err(CoreError::NegativeEntry {
                        row: i,
                        col: j,
                        value: v.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        let directed = (0..a.nrows()).any(|i| (0..i).any(|j| a[(i, j)] != a[(j, i)]));
        let binary = a.iter().all(|v| *v == T::zero() || *v == T::one());
        Ok(Self { a, directed, binary })
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.a.nrows()
    }

    /// True when there are no vertices.
    pub fn is_empty(&self) -> bool {
        self.a.nrows() == 0
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &DMatrix<T> {
        &self.a
    }

    /// Whether any entry differs from its transpose partner.
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Whether all entries are zero or one.
    pub fn is_binary(&self) -> bool {
        self.binary
    }

    /// Weighted degree (row sum) of each vertex.
    pub fn degrees(&self) -> Vec<T> {
        (0..self.a.nrows())
            .map(|i| self.a.row(i).iter().fold(T::zero(), |acc, v| acc + *v))
            .collect()
    }

    /// Index of the first zero-degree vertex, if any.
    pub fn first_isolated_vertex(&self) -> Option<usize> {
        self.degrees().iter().position(|d| *d == T::zero())
    }
}

/// Samples an undirected simple graph: for `i < j` independently include the
/// edge with probability `P[i,j]`, mirror to `(j, i)`, keep the diagonal zero.
///
/// Draw order is the upper triangle row by row, so results are reproducible
/// for a fixed seeded generator.
pub fn sample_graph<T: Scalar, R: Rng>(
    p: &ProbabilityMatrix<T>,
    rng: &mut R,
) -> AdjacencyMatrix<T> {
    let n = p.len();
    let mut a = DMatrix::<T>::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let threshold = p.matrix()[(i, j)].to_f64().unwrap_or(0.0);
            let u: f64 = rng.random();
            if u < threshold {
                a[(i, j)] = T::one();
                a[(j, i)] = T::one();
            }
        }
    }
    AdjacencyMatrix {
        a,
        directed: false,
        binary: true,
    }
}
