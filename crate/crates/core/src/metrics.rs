//! Ranked-list evaluation: mean reciprocal rank, its normalized form, and
//! recall at a cutoff.

use std::collections::BTreeSet;

use crate::error::{CoreError, Result};
use crate::rank::RankedList;
use crate::scalar::Scalar;

/// The vertices a ranking is scored against: unknown-but-true positives,
/// disjoint from the query and from the known-similar set used for training.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationSet {
    members: BTreeSet<usize>,
}

impl EvaluationSet {
    /// Validates non-emptiness and disjointness from `query` and `similar`.
    pub fn new(members: BTreeSet<usize>, query: usize, similar: &BTreeSet<usize>) -> Result<Self> {
        if members.is_empty() {
            return Err(CoreError::InvalidEvalSet {
                reason: "empty evaluation set".to_string(),
            });
        }
        if members.contains(&query) {
            return Err(CoreError::InvalidEvalSet {
                reason: format!("contains the query vertex {query}"),
            });
        }
        if let Some(v) = members.intersection(similar).next() {
            return Err(CoreError::InvalidEvalSet {
                reason: format!("contains known-similar vertex {v}"),
            });
        }
        Ok(Self { members })
    }

    /// Member vertices.
    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// True when there are no members (never, post-validation).
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn ranks_of<T: Scalar>(ranked: &RankedList, evalset: &EvaluationSet) -> Result<Vec<usize>, CoreError> {
    let _ = std::marker::PhantomData::<T>;
    evalset
        .members()
        .iter()
        .map(|&v| ranked.rank_of(v).ok_or(CoreError::MemberNotRanked { vertex: v }))
        .collect()
}

/// Mean reciprocal rank: the average of `1 / rank(s)` over the evaluation
/// set.
pub fn mrr<T: Scalar>(ranked: &RankedList, evalset: &EvaluationSet) -> Result<T> {
    let ranks = ranks_of::<T>(ranked, evalset)?;
    let sum = ranks
        .iter()
        .map(|&r| T::one() / T::from_usize(r).expect("rank fits the scalar type"))
        .fold(T::zero(), |a, b| a + b);
    Ok(sum / T::from_usize(ranks.len()).expect("count fits the scalar type"))
}

/// Best achievable mean reciprocal rank for an evaluation set of this size:
/// the members occupy ranks `1..=size`.
pub fn ideal_mrr<T: Scalar>(size: usize) -> T {
    let sum = (1..=size)
        .map(|r| T::one() / T::from_usize(r).expect("rank fits the scalar type"))
        .fold(T::zero(), |a, b| a + b);
    sum / T::from_usize(size).expect("count fits the scalar type")
}

/// Mean reciprocal rank divided by the best value achievable for an
/// evaluation set of the same size; equals one exactly when the members fill
/// the top of the list.
pub fn normalized_mrr<T: Scalar>(ranked: &RankedList, evalset: &EvaluationSet) -> Result<T> {
    Ok(mrr::<T>(ranked, evalset)? / ideal_mrr::<T>(evalset.len()))
}

/// Fraction of the evaluation set ranked at or above the cutoff `k`.
pub fn recall_at_k<T: Scalar>(
    ranked: &RankedList,
    evalset: &EvaluationSet,
    k: usize,
) -> Result<T> {
    if k == 0 || k > ranked.len() {
        return Err(CoreError::CutoffOutOfRange {
            k,
            max: ranked.len(),
        });
    }
    let ranks = ranks_of::<T>(ranked, evalset)?;
    let hits = ranks.iter().filter(|&&r| r <= k).count();
    Ok(T::from_usize(hits).expect("count fits the scalar type")
        / T::from_usize(evalset.len()).expect("count fits the scalar type"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::rank;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn eval(members: &[usize]) -> EvaluationSet {
        EvaluationSet {
            members: members.iter().copied().collect(),
        }
    }

    /// Ranked list over candidates 1..=n with candidate ids placed so that
    /// `order[i]` has rank `i + 1`.
    fn list_from_order(order: &[usize], n: usize) -> RankedList {
        let mut combined = vec![0.0f64; n + 1];
        for (pos, &v) in order.iter().enumerate() {
            combined[v] = pos as f64;
        }
        rank(&combined, 0)
    }

    #[test]
    fn single_member_at_top_scores_one() {
        let list = list_from_order(&[3, 1, 2], 3);
        assert_eq!(mrr::<f64>(&list, &eval(&[3])).unwrap(), 1.0);
    }

    #[test]
    fn two_members_at_ranks_one_and_four() {
        let list = list_from_order(&[1, 2, 3, 4, 5], 5);
        let e = eval(&[1, 4]);
        let m = mrr::<f64>(&list, &e).unwrap();
        assert!((m - 0.625).abs() < 1e-12);
        let nm = normalized_mrr::<f64>(&list, &e).unwrap();
        assert!((nm - 0.625 / 0.75).abs() < 1e-12);
    }

    #[test]
    fn optimal_list_normalizes_to_one() {
        let list = list_from_order(&[4, 2, 5, 1, 3], 5);
        // Members are the top three as a set.
        let e = eval(&[2, 4, 5]);
        assert!((normalized_mrr::<f64>(&list, &e).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn normalized_is_one_iff_members_fill_top_ranks() {
        let list = list_from_order(&[4, 2, 5, 1, 3], 5);
        let off = eval(&[2, 4, 1]);
        assert!(normalized_mrr::<f64>(&list, &off).unwrap() < 1.0);
    }

    #[test]
    fn mrr_matches_recount_from_sorted_dissimilarities() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let n = 100;
        let mut values: Vec<f64> = (1..=n).map(|v| v as f64 / n as f64).collect();
        values.shuffle(&mut rng);
        let mut combined = vec![0.0f64; n + 1];
        combined[1..].copy_from_slice(&values);
        let list = rank(&combined, 0);
        let members: Vec<usize> = vec![7, 19, 33, 58, 91];
        let e = eval(&members);
        // Independent recount: rank = number of candidates with strictly
        // smaller value (ties impossible here) plus one.
        let mut expect = 0.0;
        for &s in &members {
            let r = (1..=n).filter(|&v| combined[v] < combined[s]).count() + 1;
            expect += 1.0 / r as f64;
        }
        expect /= members.len() as f64;
        assert!((mrr::<f64>(&list, &e).unwrap() - expect).abs() < 1e-12);
    }

    #[test]
    fn normalized_mrr_stays_in_unit_interval() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for trial in 0..50 {
            let n = 20 + trial % 30;
            let mut order: Vec<usize> = (1..=n).collect();
            order.shuffle(&mut rng);
            let list = list_from_order(&order, n);
            let e = eval(&order[..4]);
            let nm = normalized_mrr::<f64>(&list, &e).unwrap();
            assert!(nm > 0.0 && nm <= 1.0 + 1e-15, "nm = {nm}");
        }
    }

    #[test]
    fn recall_at_full_depth_is_one() {
        let list = list_from_order(&[5, 3, 1, 2, 4], 5);
        let e = eval(&[2, 4]);
        assert_eq!(recall_at_k::<f64>(&list, &e, list.len()).unwrap(), 1.0);
    }

    #[test]
    fn recall_counts_hits_at_cutoff() {
        // Members at ranks 2 and 7 of ten.
        let list = list_from_order(&[9, 4, 1, 2, 3, 5, 6, 7, 8, 10], 10);
        let e = eval(&[4, 6]);
        assert_eq!(recall_at_k::<f64>(&list, &e, 5).unwrap(), 0.5);
    }

    #[test]
    fn recall_is_monotone_in_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut order: Vec<usize> = (1..=40).collect();
        order.shuffle(&mut rng);
        let list = list_from_order(&order, 40);
        let e = eval(&order[5..11]);
        let mut last = 0.0;
        for k in 1..=list.len() {
            let r = recall_at_k::<f64>(&list, &e, k).unwrap();
            assert!(r >= last);
            last = r;
        }
        assert_eq!(last, 1.0);
    }

    #[test]
    fn cutoff_out_of_range_rejected() {
        let list = list_from_order(&[1, 2, 3], 3);
        let e = eval(&[2]);
        assert!(recall_at_k::<f64>(&list, &e, 0).is_err());
        assert!(recall_at_k::<f64>(&list, &e, 4).is_err());
    }

    #[test]
    fn missing_member_is_an_error() {
        let list = list_from_order(&[1, 2, 3], 3);
        let e = eval(&[9]);
        assert!(matches!(
            mrr::<f64>(&list, &e),
            Err(CoreError::MemberNotRanked { vertex: 9 })
        ));
    }

    #[test]
    fn evaluation_set_validation() {
        let similar: BTreeSet<usize> = [4, 5].into_iter().collect();
        assert!(EvaluationSet::new(BTreeSet::new(), 0, &similar).is_err());
        assert!(EvaluationSet::new([0].into_iter().collect(), 0, &similar).is_err());
        assert!(EvaluationSet::new([4].into_iter().collect(), 0, &similar).is_err());
        assert!(EvaluationSet::new([7].into_iter().collect(), 0, &similar).is_ok());
    }
}
