//! Convex combination of dissimilarity layers and the ranked lists it
//! induces.

use std::collections::BTreeSet;

use num_traits::Float;

use crate::error::{CoreError, Result};
use crate::scalar::{from_f64, Scalar};
use crate::spectral::DissimilarityMatrix;

/// How far a weight vector's sum may drift from one.
pub const ALPHA_SUM_TOL: f64 = 1e-9;

/// Ordered collection of dissimilarity layers over one vertex set.
#[derive(Debug, Clone, PartialEq)]
pub struct DissimilarityStack<T: Scalar> {
    layers: Vec<DissimilarityMatrix<T>>,
}

impl<T: Scalar> DissimilarityStack<T> {
    /// Wraps the layers after checking there is at least one and that all
    /// share the same vertex count.
    pub fn new(layers: Vec<DissimilarityMatrix<T>>) -> Result<Self> {
        let n = layers.first().ok_or(CoreError::EmptyStack)?.len();
        for (idx, layer) in layers.iter().enumerate() {
            if layer.len() != n {
                return Err(CoreError::LayerSizeMismatch {
                    layer: idx,
                    expected: n,
                    found: layer.len(),
                });
            }
        }
        Ok(Self { layers })
    }

    /// Number of representations `J`.
    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    /// Number of vertices shared by every layer.
    pub fn num_vertices(&self) -> usize {
        self.layers[0].len()
    }

    /// Layer by index.
    pub fn layer(&self, j: usize) -> &DissimilarityMatrix<T> {
        &self.layers[j]
    }

    /// All layers in order.
    pub fn layers(&self) -> &[DissimilarityMatrix<T>] {
        &self.layers
    }

    /// Layer labels in order.
    pub fn labels(&self) -> Vec<&str> {
        self.layers.iter().map(|l| l.label()).collect()
    }
}

/// Nonnegative weights summing to one: a point on the `(J-1)`-simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaVector<T: Scalar> {
    weights: Vec<T>,
}

impl<T: Scalar> AlphaVector<T> {
    /// Validates entries nonnegative and summing to one within `1e-9`.
    pub fn new(weights: Vec<T>) -> Result<Self> {
        if weights.is_empty() {
            return Err(CoreError::InvalidAlpha {
                reason: "empty weight vector".to_string(),
            });
        }
        if let Some(w) = weights.iter().find(|w| **w < T::zero() || !Float::is_finite(**w)) {
            return Err(CoreError::InvalidAlpha {
                reason: format!("entry {} is negative or not finite", w.to_f64().unwrap_or(f64::NAN)),
            });
        }
        let sum = weights.iter().fold(T::zero(), |a, b| a + *b);
        if Float::abs(sum - T::one()) > from_f64(ALPHA_SUM_TOL) {
            return Err(CoreError::InvalidAlpha {
                reason: format!("weights sum to {}, not 1", sum.to_f64().unwrap_or(f64::NAN)),
            });
        }
        Ok(Self { weights })
    }

    /// The simplex vertex `e_j` in `J` dimensions.
    pub fn vertex(j: usize, dim: usize) -> Self {
        let mut weights = vec![T::zero(); dim];
        weights[j] = T::one();
        Self { weights }
    }

    /// Two-layer weight `(a, 1-a)` for `a` in `[0, 1]`.
    pub fn two_layer(a: T) -> Result<Self> {
        Self::new(vec![a, T::one() - a])
    }

    /// Number of layers this weight vector addresses.
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Weight entries.
    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// Convex mixture `lambda * self + (1 - lambda) * other`, renormalized
    /// only if accumulated rounding pushes the sum off one by more than
    /// `1e-9`.
    pub fn mix(&self, other: &Self, lambda: T) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(CoreError::DimensionMismatch {
                what: "weight vectors",
                expected: self.dim(),
                found: other.dim(),
            });
        }
        if lambda < T::zero() || lambda > T::one() {
            return Err(CoreError::InvalidAlpha {
                reason: format!(
                    "mixing weight {} outside [0,1]",
                    lambda.to_f64().unwrap_or(f64::NAN)
                ),
            });
        }
        let mut weights: Vec<T> = self
            .weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| lambda * *a + (T::one() - lambda) * *b)
            .collect();
        let sum = weights.iter().fold(T::zero(), |a, b| a + *b);
        if Float::abs(sum - T::one()) > from_f64(ALPHA_SUM_TOL) {
            for w in weights.iter_mut() {
                *w /= sum;
            }
        }
        Ok(Self { weights })
    }
}

/// Blends the stack's rows for `query` under the given weights.
///
/// Returns a length-`n` vector whose entry `v` is the combined dissimilarity
/// from `query` to `v`; the query's own entry is zero (zero diagonals).
pub fn combine<T: Scalar>(
    stack: &DissimilarityStack<T>,
    alpha: &AlphaVector<T>,
    query: usize,
) -> Result<Vec<T>> {
    if alpha.dim() != stack.num_layers() {
        return Err(CoreError::DimensionMismatch {
            what: "weights vs stack layers",
            expected: stack.num_layers(),
            found: alpha.dim(),
        });
    }
    let n = stack.num_vertices();
    if query >= n {
        return Err(CoreError::VertexOutOfRange { vertex: query, n });
    }
    let mut out = vec![T::zero(); n];
    for (j, weight) in alpha.weights().iter().enumerate() {
        let col = stack.layer(j).matrix().column(query);
        for (o, d) in out.iter_mut().zip(col.iter()) {
            *o += *weight * *d;
        }
    }
    Ok(out)
}

/// Ranked list of candidates for one query, ranks 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedList {
    query: usize,
    order: Vec<usize>,
    // rank_of[v] = 0 means v is not ranked (query or excluded).
    rank_of: Vec<usize>,
}

impl RankedList {
    /// The query vertex.
    pub fn query(&self) -> usize {
        self.query
    }

    /// Candidates in rank order (best first).
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 1-based rank of `v`, or `None` when `v` was not a candidate.
    pub fn rank_of(&self, v: usize) -> Option<usize> {
        match self.rank_of.get(v) {
            Some(&r) if r > 0 => Some(r),
            _ => None,
        }
    }

    /// Number of ranked candidates.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    /// True when no candidates were ranked.
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Ranks all vertices other than the query by ascending combined
/// dissimilarity, breaking ties by ascending vertex id.
pub fn rank<T: Scalar>(combined: &[T], query: usize) -> RankedList {
    rank_excluding(combined, query, &BTreeSet::new())
}

/// [`rank`] with an extra exclusion set (e.g. the known-similar vertices,
/// which are not candidates when evaluating a nomination list).
pub fn rank_excluding<T: Scalar>(
    combined: &[T],
    query: usize,
    excluded: &BTreeSet<usize>,
) -> RankedList {
    let mut order: Vec<usize> = (0..combined.len())
        .filter(|v| *v != query && !excluded.contains(v))
        .collect();
    order.sort_by(|&a, &b| {
        combined[a]
            .partial_cmp(&combined[b])
            .expect("dissimilarities are finite")
            .then(a.cmp(&b))
    });
    let mut rank_of = vec![0usize; combined.len()];
    for (idx, &v) in order.iter().enumerate() {
        rank_of[v] = idx + 1;
    }
    RankedList {
        query,
        order,
        rank_of,
    }
}
