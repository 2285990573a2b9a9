//! Shared helpers for unit tests.

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rank::{combine, rank, AlphaVector, DissimilarityStack};
use crate::solver::{MultiQueryTask, QueryTask};
use crate::spectral::DissimilarityMatrix;

/// Random symmetric zero-diagonal layer with entries in `[0, 2)`.
pub(crate) fn random_layer(n: usize, rng: &mut ChaCha8Rng, label: &str) -> DissimilarityMatrix<f64> {
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v: f64 = rng.random::<f64>() * 2.0;
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    DissimilarityMatrix::new(m, label).unwrap()
}

/// Stack of `j` independent random layers on `n` vertices.
pub(crate) fn random_stack(n: usize, j: usize, seed: u64) -> DissimilarityStack<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let layers = (0..j)
        .map(|idx| random_layer(n, &mut rng, &format!("layer{idx}")))
        .collect();
    DissimilarityStack::new(layers).unwrap()
}

/// Task whose similar sets come from near the top of a random blend's
/// ranking, mimicking how supervision arises in practice and keeping
/// optimal objectives moderate.
pub(crate) fn pool_task(
    stack: &DissimilarityStack<f64>,
    k: usize,
    size_s: usize,
    pool: usize,
    rng: &mut ChaCha8Rng,
) -> MultiQueryTask {
    let n = stack.num_vertices();
    let j = stack.num_layers();
    let mut queries: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let pick = i + rng.random_range(0..(n - i));
        queries.swap(i, pick);
    }
    let tasks = queries[..k]
        .iter()
        .map(|&q| {
            let mut weights = vec![0.0f64; j];
            let mut total = 0.0;
            for w in weights.iter_mut() {
                *w = rng.random::<f64>() + 1e-3;
                total += *w;
            }
            for w in weights.iter_mut() {
                *w /= total;
            }
            let alpha = AlphaVector::new(weights).unwrap();
            let combined = combine(stack, &alpha, q).unwrap();
            let list = rank(&combined, q);
            let pool: Vec<usize> = list.order()[..pool.min(list.len())].to_vec();
            let mut idx: Vec<usize> = (0..pool.len()).collect();
            for i in 0..size_s {
                let pick = i + rng.random_range(0..(pool.len() - i));
                idx.swap(i, pick);
            }
            let similar = idx[..size_s].iter().map(|&i| pool[i]).collect();
            QueryTask::new(q, similar).unwrap()
        })
        .collect();
    MultiQueryTask::new(tasks).unwrap()
}
