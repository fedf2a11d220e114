//! Extension-principle engine: words become triangles on `[0, 1]`, a session's
//! words are averaged into one collective triangle, and the nearest of five
//! reference triangles names the frequency's term.

use cww_datasets::LinguisticWeights;
use cww_fuzzy::{tri_mean, tri_product, weighted_distance, TriTuple, WeightProfile};

use crate::recommend::{weight_ranks, word_ranks};
use crate::{pick, Engine, EngineError, FrequencyFeedback, Recommendation, Score};

/// Uniform five-term partition; shared by criterion words, weights,
/// satisfaction terms and the distance vector.
pub const TRI_VOCAB: [TriTuple; 5] = [
    TriTuple::of(0.0, 0.0, 0.25),
    TriTuple::of(0.0, 0.25, 0.5),
    TriTuple::of(0.25, 0.5, 0.75),
    TriTuple::of(0.5, 0.75, 1.0),
    TriTuple::of(0.75, 1.0, 1.0),
];

/// Ties within this margin count as equal distances.
const TIE_EPS: f64 = 1e-12;

/// Which term wins when two reference triangles are equally near.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DistanceTie {
    #[default]
    Higher,
    Lower,
}

/// 1-based index of the nearest reference triangle; on ties the higher index.
pub fn nearest_term(c: &TriTuple, w: &WeightProfile) -> usize {
    nearest_term_with(c, w, DistanceTie::Higher)
}

pub fn nearest_term_with(c: &TriTuple, w: &WeightProfile, tie: DistanceTie) -> usize {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (i, d) in TRI_VOCAB.iter().enumerate() {
        let dist = weighted_distance(c, d, w);
        let take = match tie {
            DistanceTie::Higher => dist <= best_d + TIE_EPS,
            DistanceTie::Lower => dist < best_d - TIE_EPS,
        };
        if take {
            best = i;
            best_d = dist;
        }
    }
    best + 1
}

/// Collective triangle from word ranks and optional weight ranks. Weighted
/// products are averaged without normalizing by the total weight.
pub fn collective(ranks: &[usize], weights: Option<&[usize]>) -> Result<TriTuple, EngineError> {
    let items: Vec<TriTuple> = match weights {
        None => ranks.iter().map(|&r| TRI_VOCAB[r - 1]).collect(),
        Some(ws) => {
            if ws.len() != ranks.len() {
                return Err(EngineError::LengthMismatch { terms: ranks.len(), weights: ws.len() });
            }
            ranks.iter().zip(ws).map(|(&r, &w)| tri_product(&TRI_VOCAB[r - 1], &TRI_VOCAB[w - 1])).collect()
        }
    };
    Ok(tri_mean(&items)?)
}

/// Collective triangle and its distance-term index for one frequency.
pub fn ep_score_frequency(
    words: &[String; 4],
    weights: &LinguisticWeights,
    w: &WeightProfile,
) -> Result<(TriTuple, usize), EngineError> {
    let ranks = word_ranks(words)?;
    let c = match weights {
        LinguisticWeights::Equal => collective(&ranks, None)?,
        LinguisticWeights::Words(_) => collective(&ranks, Some(&weight_ranks(weights)?))?,
    };
    Ok((c, nearest_term(&c, w)))
}

/// Satisfaction term (1..5) nearest to the recommended collective triangle.
pub fn ep_satisfaction(c_reco: &TriTuple, w: &WeightProfile) -> usize {
    nearest_term(c_reco, w)
}

pub fn ep_recommend(
    feedback: &[FrequencyFeedback],
    weights: &LinguisticWeights,
    w: &WeightProfile,
) -> Result<Recommendation, EngineError> {
    ep_recommend_with(feedback, weights, w, DistanceTie::Higher)
}

pub fn ep_recommend_with(
    feedback: &[FrequencyFeedback],
    weights: &LinguisticWeights,
    w: &WeightProfile,
    tie: DistanceTie,
) -> Result<Recommendation, EngineError> {
    let mut scores = Vec::with_capacity(feedback.len());
    let mut vectors = Vec::with_capacity(feedback.len());
    for fb in feedback {
        let (c, _) = ep_score_frequency(&fb.words, weights, w)?;
        let idx = nearest_term_with(&c, w, tie);
        scores.push((fb.frequency, Score::Index(idx)));
        vectors.push((fb.frequency, c));
    }
    let chosen = pick(&scores).ok_or(EngineError::Empty)?;
    let c = vectors.iter().find(|(f, _)| *f == chosen).map(|(_, c)| *c).expect("scored above");
    Ok(Recommendation { engine: Engine::Ep, scores, chosen, satisfaction: Some(nearest_term_with(&c, w, tie)) })
}
