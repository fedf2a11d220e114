//! Symbolic engine: ordinal term indices combined by a recursive convex
//! combination.

use cww_datasets::LinguisticWeights;

use crate::recommend::{weight_ranks, word_ranks};
use crate::{pick, Engine, EngineError, FrequencyFeedback, Recommendation, Score};

/// Upper bound on a combined index.
pub const DEFAULT_CAP: usize = 4;

/// How weights meet terms before the fold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    /// Terms and weights are each sorted descending on their own.
    Literal,
    /// Weights stay with their criterion's term; pairs sorted by term.
    Attached,
}

/// Nearest integer, halves away from zero.
fn round(x: f64) -> i64 {
    x.round() as i64
}

/// Combines two indices: `i` is the lower, `j` the higher, `wj` the weight on
/// the higher one.
fn combine(a: usize, wa: f64, b: usize, cap: usize) -> usize {
    let (i, j, wj) = if a >= b { (b, a, wa) } else { (a, b, 1.0 - wa) };
    let r = i as i64 + round(wj * (j - i) as f64);
    (r as usize).min(cap)
}

fn fold(terms: &[usize], weights: &[f64], cap: usize) -> usize {
    if terms.len() == 1 {
        return terms[0];
    }
    let rest = &weights[1..];
    let mass: f64 = rest.iter().sum();
    let tail_w: Vec<f64> = if mass > 0.0 {
        rest.iter().map(|w| w / mass).collect()
    } else {
        vec![1.0 / rest.len() as f64; rest.len()]
    };
    let tail = fold(&terms[1..], &tail_w, cap);
    combine(terms[0], weights[0], tail, cap)
}

/// Aggregates term indices with weights summing to one.
pub fn sm_aggregate(terms: &[usize], weights: &[f64], cap: usize, pairing: Pairing) -> Result<usize, EngineError> {
    if terms.is_empty() {
        return Err(EngineError::Empty);
    }
    if terms.len() != weights.len() {
        return Err(EngineError::LengthMismatch { terms: terms.len(), weights: weights.len() });
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > 1e-9 || weights.iter().any(|w| *w < 0.0) {
        return Err(EngineError::WeightSum(total));
    }
    let (t, w): (Vec<usize>, Vec<f64>) = match pairing {
        Pairing::Literal => {
            let mut t = terms.to_vec();
            let mut w = weights.to_vec();
            t.sort_unstable_by(|a, b| b.cmp(a));
            w.sort_unstable_by(|a, b| b.total_cmp(a));
            (t, w)
        }
        Pairing::Attached => {
            let mut pairs: Vec<(usize, f64)> = terms.iter().copied().zip(weights.iter().copied()).collect();
            pairs.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.total_cmp(&a.1)));
            pairs.into_iter().unzip()
        }
    };
    Ok(fold(&t, &w, cap))
}

/// Weight indices normalized by their sum.
pub fn normalized_weights(weights: &LinguisticWeights) -> Result<[f64; 4], EngineError> {
    let ix = weight_ranks(weights)?;
    let total: usize = ix.iter().sum();
    Ok(ix.map(|i| i as f64 / total as f64))
}

pub fn sm_recommend(
    feedback: &[FrequencyFeedback],
    weights: &LinguisticWeights,
    cap: usize,
    pairing: Pairing,
) -> Result<Recommendation, EngineError> {
    let w = normalized_weights(weights)?;
    let mut scores = Vec::with_capacity(feedback.len());
    for fb in feedback {
        let idx = sm_aggregate(&word_ranks(&fb.words)?, &w, cap, pairing)?;
        scores.push((fb.frequency, Score::Index(idx)));
    }
    let chosen = pick(&scores).ok_or(EngineError::Empty)?;
    Ok(Recommendation { engine: Engine::Sm, satisfaction: Some(sm_satisfaction(&scores, chosen)), scores, chosen })
}

/// Satisfaction term carries the recommended frequency's index.
pub fn sm_satisfaction(scores: &[(cww_datasets::Freq, Score)], chosen: cww_datasets::Freq) -> usize {
    match scores.iter().find(|(f, _)| *f == chosen) {
        Some((_, Score::Index(i))) => *i,
        _ => unreachable!("symbolic scores are indices"),
    }
}
