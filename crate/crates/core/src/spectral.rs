//! Spectral embeddings of symmetric matrices and the pairwise dissimilarity
//! matrices derived from them.
//!
//! The adjacency embedding keeps the top `d` eigenpairs by eigenvalue
//! magnitude and scales eigenvectors by `sqrt(|lambda|)`, so indefinite
//! matrices are handled; the Laplacian embedding applies the same
//! construction to the degree-normalized matrix `D^{-1/2} A D^{-1/2}`.

use nalgebra::DMatrix;
use num_traits::Float;

use crate::error::{CoreError, Result};
use crate::graph::AdjacencyMatrix;
use crate::scalar::{from_f64, Scalar};

/// Which matrix an embedding was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingKind {
    /// Scaled eigenvectors of the adjacency (or edge-probability) matrix.
    Adjacency,
    /// Scaled eigenvectors of the normalized Laplacian `D^{-1/2} A D^{-1/2}`.
    Laplacian,
}

impl EmbeddingKind {
    /// Short lowercase name, used as a default layer label.
    pub fn label(self) -> &'static str {
        match self {
            EmbeddingKind::Adjacency => "ase",
            EmbeddingKind::Laplacian => "lse",
        }
    }
}

/// Vector representation of each vertex: row `i` of `z` represents vertex `i`.
///
/// Columns are ordered by descending eigenvalue magnitude of the source
/// matrix, with each eigenvector's sign fixed so that its largest-magnitude
/// entry is positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding<T: Scalar> {
    z: DMatrix<T>,
    kind: EmbeddingKind,
}

impl<T: Scalar> Embedding<T> {
    /// The `n x d` representation matrix.
    pub fn matrix(&self) -> &DMatrix<T> {
        &self.z
    }

    /// Number of embedded vertices.
    pub fn len(&self) -> usize {
        self.z.nrows()
    }

    /// True when there are no vertices.
    pub fn is_empty(&self) -> bool {
        self.z.nrows() == 0
    }

    /// Embedding dimension.
    pub fn dim(&self) -> usize {
        self.z.ncols()
    }

    /// Source matrix family.
    pub fn kind(&self) -> EmbeddingKind {
        self.kind
    }
}

fn check_square_symmetric<T: Scalar>(m: &DMatrix<T>) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(CoreError::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    for i in 0..m.nrows() {
        for j in (i + 1)..m.ncols() {
            if m[(i, j)] != m[(j, i)] {
                return Err(CoreError::NotSymmetric {
                    row: i,
                    col: j,
                    delta: (m[(i, j)] - m[(j, i)]).to_f64().unwrap_or(f64::NAN).abs(),
                    tol: 0.0,
                });
            }
        }
    }
    Ok(())
}

/// Shared eigendecomposition step: top `d` eigenpairs by `|lambda|`,
/// deterministic sign convention, columns scaled by `sqrt(|lambda|)`.
fn scaled_top_eigvecs<T: Scalar>(m: DMatrix<T>, d: usize) -> DMatrix<T> {
    let n = m.nrows();
    let eig = m.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort keeps the solver's deterministic output order on ties.
    order.sort_by(|&a, &b| {
        Float::abs(eig.eigenvalues[b])
            .partial_cmp(&Float::abs(eig.eigenvalues[a]))
            .expect("symmetric eigenvalues are finite")
    });

    let mut z = DMatrix::<T>::zeros(n, d);
    for (col, &idx) in order.iter().take(d).enumerate() {
        let scale = Float::sqrt(Float::abs(eig.eigenvalues[idx]));
        let v = eig.eigenvectors.column(idx);
        // Sign convention: largest-magnitude entry (first such index) positive.
        let mut arg = 0;
        let mut best = T::zero();
        for (i, value) in v.iter().enumerate() {
            let mag = Float::abs(*value);
            if mag > best {
                best = mag;
                arg = i;
            }
        }
        let flip = if v[arg] < T::zero() { -T::one() } else { T::one() };
        for i in 0..n {
            z[(i, col)] = v[i] * flip * scale;
        }
    }
    z
}

/// Adjacency spectral embedding of a symmetric matrix.
///
/// Accepts an adjacency or edge-probability matrix; rejects non-symmetric
/// input and dimensions outside `1..=n`.
pub fn ase_embed<T: Scalar>(m: &DMatrix<T>, d: usize) -> Result<Embedding<T>> {
    check_square_symmetric(m)?;
    if d == 0 || d > m.nrows() {
        return Err(CoreError::EmbeddingDimension {
            requested: d,
            n: m.nrows(),
        });
    }
    Ok(Embedding {
        z: scaled_top_eigvecs(m.clone(), d),
        kind: EmbeddingKind::Adjacency,
    })
}

/// Laplacian spectral embedding: the adjacency construction applied to
/// `D^{-1/2} A D^{-1/2}` with `D` the diagonal of (weighted) degrees.
///
/// Fails on the first isolated vertex found; callers that expect isolated
/// vertices should drop them (e.g. restrict to the largest connected
/// component) beforehand.
pub fn lse_embed<T: Scalar>(a: &AdjacencyMatrix<T>, d: usize) -> Result<Embedding<T>> {
    let m = a.matrix();
    check_square_symmetric(m)?;
    let n = m.nrows();
    if d == 0 || d > n {
        return Err(CoreError::EmbeddingDimension { requested: d, n });
    }
    let degrees = a.degrees();
    if let Some(vertex) = degrees.iter().position(|g| *g <= T::zero()) {
        return Err(CoreError::IsolatedVertex { vertex });
    }
    let inv_sqrt: Vec<T> = degrees
        .iter()
        .map(|g| T::one() / Float::sqrt(*g))
        .collect();
    let mut l = DMatrix::<T>::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = m[(i, j)] * inv_sqrt[i] * inv_sqrt[j];
            l[(i, j)] = v;
            l[(j, i)] = v;
        }
    }
    Ok(Embedding {
        z: scaled_top_eigvecs(l, d),
        kind: EmbeddingKind::Laplacian,
    })
}

/// Symmetric, zero-diagonal, nonnegative matrix of pairwise dissimilarities,
/// tagged with the name of the representation it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct DissimilarityMatrix<T: Scalar> {
    d: DMatrix<T>,
    label: String,
}

/// Asymmetry tolerated (then averaged away) when validating input matrices.
pub const SYMMETRY_TOL: f64 = 1e-9;
/// Diagonal magnitude tolerated (then snapped to zero) when validating input.
pub const DIAGONAL_TOL: f64 = 1e-12;

impl<T: Scalar> DissimilarityMatrix<T> {
    /// Validates and wraps a matrix: square, finite, nonnegative entries,
    /// zero diagonal (up to `1e-12`, snapped exact), symmetric (up to `1e-9`,
    /// averaged exact). Use [`DissimilarityMatrix::from_asymmetric_avg`] to
    /// accept arbitrarily asymmetric input.
    pub fn new(m: DMatrix<T>, label: impl Into<String>) -> Result<Self> {
        Self::build(m, label.into(), from_f64(SYMMETRY_TOL))
    }

    /// Like [`DissimilarityMatrix::new`] but symmetrizes `(m + m^T) / 2`
    /// regardless of how asymmetric the input is.
    pub fn from_asymmetric_avg(m: DMatrix<T>, label: impl Into<String>) -> Result<Self> {
        Self::build(m, label.into(), T::infinity())
    }

    fn build(mut m: DMatrix<T>, label: String, sym_tol: T) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(CoreError::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        let diag_tol = from_f64::<T>(DIAGONAL_TOL);
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let v = m[(i, j)];
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
            let dv = m[(i, i)];
            if Float::abs(dv) > diag_tol {
                return Err(CoreError::NonzeroDiagonal {
                    index: i,
                    value: dv.to_f64().unwrap_or(f64::NAN),
                    tol: DIAGONAL_TOL,
                });
            }
            m[(i, i)] = T::zero();
        }
        let half = from_f64::<T>(0.5);
        for i in 0..m.nrows() {
            for j in (i + 1)..m.ncols() {
                let delta = Float::abs(m[(i, j)] - m[(j, i)]);
                if delta > sym_tol {
                    return Err(CoreError::NotSymmetric {
                        row: i,
                        col: j,
                        delta: delta.to_f64().unwrap_or(f64::NAN),
                        tol: sym_tol.to_f64().unwrap_or(f64::NAN),
                    });
                }
                // (x + x) / 2 == x in IEEE arithmetic, so exact inputs pass
                // through unchanged.
                let avg = (m[(i, j)] + m[(j, i)]) * half;
                m[(i, j)] = avg;
                m[(j, i)] = avg;
            }
        }
        Ok(Self { d: m, label })
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.d.nrows()
    }

    /// True when there are no vertices.
    pub fn is_empty(&self) -> bool {
        self.d.nrows() == 0
    }

    /// Representation name.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Replaces the representation name.
    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    /// The underlying symmetric matrix.
    pub fn matrix(&self) -> &DMatrix<T> {
        &self.d
    }

    /// Dissimilarities from vertex `i` to every vertex, as an owned vector.
    ///
    /// Reads the `i`-th column, which equals the `i`-th row by symmetry and
    /// is contiguous in memory.
    pub fn row_vec(&self, i: usize) -> Vec<T> {
        self.d.column(i).iter().copied().collect()
    }
}

/// Pairwise Euclidean distances between embedding rows.
///
/// The result is labelled after the embedding kind; relabel as needed.
pub fn pairwise_dissimilarity<T: Scalar>(z: &Embedding<T>) -> DissimilarityMatrix<T> {
    let n = z.len();
    let m = z.matrix();
    let mut d = DMatrix::<T>::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut acc = T::zero();
            for c in 0..z.dim() {
                let diff = m[(i, c)] - m[(j, c)];
                acc += diff * diff;
            }
            let dist = Float::sqrt(acc);
            d[(i, j)] = dist;
            d[(j, i)] = dist;
        }
    }
    DissimilarityMatrix {
        d,
        label: z.kind().label().to_string(),
    }
}
