//! 2-tuple engine: weighted mean of indices, kept as (nearest term, offset).

use std::cmp::Ordering;

use cww_datasets::LinguisticWeights;

use crate::recommend::{weight_ranks, word_ranks};
use crate::{pick, Engine, EngineError, FrequencyFeedback, Recommendation, Score};

/// Linguistic 2-tuple `(s_index, alpha)` with `alpha` in `[-0.5, 0.5)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoTuple {
    pub index: usize,
    pub alpha: f64,
}

impl TwoTuple {
    /// Symbolic translation of a value on the index scale; halves round away
    /// from zero so the offset stays in `[-0.5, 0.5)`.
    pub fn from_beta(beta: f64) -> TwoTuple {
        let r = beta.round();
        TwoTuple { index: r as usize, alpha: beta - r }
    }

    /// Inverse translation back to the index scale.
    pub fn beta(&self) -> f64 {
        self.index as f64 + self.alpha
    }

    /// Lexicographic on (index, alpha).
    pub fn cmp_lex(&self, other: &TwoTuple) -> Ordering {
        self.index.cmp(&other.index).then(self.alpha.total_cmp(&other.alpha))
    }
}

/// Weighted mean of indices by integer weights.
pub fn ttp_aggregate(indices: &[usize], weights: &[usize]) -> Result<TwoTuple, EngineError> {
    if indices.is_empty() {
        return Err(EngineError::Empty);
    }
    if indices.len() != weights.len() {
        return Err(EngineError::LengthMismatch { terms: indices.len(), weights: weights.len() });
    }
    let num: usize = indices.iter().zip(weights).map(|(i, w)| i * w).sum();
    let den: usize = weights.iter().sum();
    if den == 0 {
        return Err(EngineError::WeightSum(0.0));
    }
    Ok(TwoTuple::from_beta(num as f64 / den as f64))
}

pub fn ttp_recommend(feedback: &[FrequencyFeedback], weights: &LinguisticWeights) -> Result<Recommendation, EngineError> {
    let w = weight_ranks(weights)?;
    let mut scores = Vec::with_capacity(feedback.len());
    for fb in feedback {
        scores.push((fb.frequency, Score::TwoTuple(ttp_aggregate(&word_ranks(&fb.words)?, &w)?)));
    }
    let chosen = pick(&scores).ok_or(EngineError::Empty)?;
    let satisfaction = scores.iter().find_map(|(f, s)| match s {
        Score::TwoTuple(t) if *f == chosen => Some(t.index),
        _ => None,
    });
    Ok(Recommendation { engine: Engine::Ttp, scores, chosen, satisfaction })
}
