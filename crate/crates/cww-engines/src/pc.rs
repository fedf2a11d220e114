//! Perceptual computing: word sets are combined by an interval weighted
//! average computed level by level over α-cuts; frequencies are ranked by the
//! centroid mean of the aggregate.

use cww_codebook::Codebook;
use cww_datasets::vocab::{Criterion, SATISFACTION_NAME, WEIGHT_NAME};
use cww_datasets::LinguisticWeights;
use cww_fuzzy::{jaccard_sampled, km_centroid_sampled, linspace, Fou, Trapezoid, DEFAULT_RESOLUTION, SCALE_MAX, SCALE_MIN};

use crate::{pick, Engine, EngineError, FrequencyFeedback, Recommendation, Score};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PcConfig {
    /// Grid points over the whole scale.
    pub resolution: usize,
    /// α levels per membership function, bottom and top included.
    pub alpha_levels: usize,
}

impl Default for PcConfig {
    fn default() -> Self {
        PcConfig { resolution: DEFAULT_RESOLUTION, alpha_levels: 101 }
    }
}

/// Aggregate set sampled on the scale grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate {
    pub xs: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl Aggregate {
    pub fn centroid(&self) -> Result<(f64, f64), EngineError> {
        Ok(km_centroid_sampled(&self.xs, &self.lower, &self.upper)?)
    }

    /// Midpoint of the centroid interval.
    pub fn score(&self) -> Result<f64, EngineError> {
        let (l, r) = self.centroid()?;
        Ok(0.5 * (l + r))
    }

    pub fn similarity(&self, f: &Fou) -> Result<f64, EngineError> {
        let (lo, up) = f.sample(&self.xs);
        Ok(jaccard_sampled(&self.lower, &self.upper, &lo, &up)?)
    }
}

fn cut(t: &Trapezoid, h: f64, alpha: f64) -> (f64, f64) {
    let s = alpha / h;
    (t.a + s * (t.b - t.a), t.d - s * (t.d - t.c))
}

/// Extremes of `Σ x_i w_i / Σ w_i` over `x_i ∈ [xl_i, xr_i]`, `w_i ∈ [wl_i, wr_i]`,
/// by trying every switch point.
fn interval_wa(x: &[(f64, f64)], w: &[(f64, f64)]) -> (f64, f64) {
    let n = x.len();
    let mut order: Vec<usize> = (0..n).collect();
    let extreme = |order: &mut Vec<usize>, right: bool| {
        order.sort_by(|&i, &j| {
            let (a, b) = if right { (x[i].1, x[j].1) } else { (x[i].0, x[j].0) };
            a.total_cmp(&b)
        });
        let mut best: Option<f64> = None;
        for k in 0..=n {
            let (mut num, mut den) = (0.0, 0.0);
            for (pos, &i) in order.iter().enumerate() {
                let xi = if right { x[i].1 } else { x[i].0 };
                // the minimum favours small x with heavy weights; the maximum the reverse
                let wi = match (pos < k, right) {
                    (true, false) | (false, true) => w[i].1,
                    _ => w[i].0,
                };
                num += xi * wi;
                den += wi;
            }
            if den > 0.0 {
                let y = num / den;
                best = Some(match best {
                    None => y,
                    Some(b) if right => b.max(y),
                    Some(b) => b.min(y),
                });
            }
        }
        best
    };
    let lo = extreme(&mut order, false);
    let hi = extreme(&mut order, true);
    match (lo, hi) {
        (Some(l), Some(r)) => (l, r),
        // all weights vanish: fall back to the plain mean of the intervals
        _ => {
            let nf = n as f64;
            (x.iter().map(|p| p.0).sum::<f64>() / nf, x.iter().map(|p| p.1).sum::<f64>() / nf)
        }
    }
}

/// Membership of `x` in a set described by nested α-cuts, interpolating
/// linearly between levels.
fn cut_membership(x: f64, alphas: &[f64], left: &[f64], right: &[f64]) -> f64 {
    let top = alphas.len() - 1;
    if x < left[0] || x > right[0] {
        return 0.0;
    }
    let side = |ends: &[f64], inside: &dyn Fn(f64) -> bool| {
        let k = ends.partition_point(|&e| inside(e)) - 1;
        if k == top {
            return alphas[top];
        }
        let span = ends[k + 1] - ends[k];
        alphas[k] + (alphas[k + 1] - alphas[k]) * (x - ends[k]) / span
    };
    let ml = side(left, &|e| e <= x);
    let mr = side(right, &|e| e >= x);
    ml.min(mr)
}

/// Aggregates word sets with crisp equal weights (`weights == None`) or with
/// weight-word sets. The upper function combines upper functions at unit
/// height; the lower one combines lower functions up to the smallest lower
/// height involved.
pub fn lwa(words: &[Fou], weights: Option<&[Fou]>, cfg: &PcConfig) -> Result<Aggregate, EngineError> {
    if words.is_empty() {
        return Err(EngineError::Empty);
    }
    if let Some(ws) = weights {
        if ws.len() != words.len() {
            return Err(EngineError::LengthMismatch { terms: words.len(), weights: ws.len() });
        }
    }
    let xs = linspace(SCALE_MIN, SCALE_MAX, cfg.resolution);
    let levels = cfg.alpha_levels.max(2);
    let mut sides = [Vec::new(), Vec::new()];
    for (s, upper) in [true, false].into_iter().enumerate() {
        let mf = |f: &Fou| if upper { (f.umf, 1.0) } else { (f.lmf, f.lmf_height) };
        let mut top = 1.0f64;
        if !upper {
            top = words.iter().map(|f| f.lmf_height).fold(top, f64::min);
            if let Some(ws) = weights {
                top = ws.iter().map(|f| f.lmf_height).fold(top, f64::min);
            }
        }
        let alphas = linspace(0.0, top, levels);
        let mut left = Vec::with_capacity(levels);
        let mut right = Vec::with_capacity(levels);
        for &a in &alphas {
            let x: Vec<(f64, f64)> = words.iter().map(|f| { let (t, h) = mf(f); cut(&t, h, a) }).collect();
            let w: Vec<(f64, f64)> = match weights {
                None => vec![(1.0, 1.0); words.len()],
                Some(ws) => ws.iter().map(|f| { let (t, h) = mf(f); cut(&t, h, a) }).collect(),
            };
            let (l, r) = interval_wa(&x, &w);
            // keep the cuts nested against rounding noise
            left.push(left.last().map_or(l, |&p: &f64| p.max(l)));
            right.push(right.last().map_or(r, |&p: &f64| p.min(r)));
        }
        sides[s] = xs.iter().map(|&x| cut_membership(x, &alphas, &left, &right)).collect();
    }
    let [upper, lower] = sides;
    let lower = lower.iter().zip(&upper).map(|(l, u): (&f64, &f64)| l.min(*u)).collect();
    Ok(Aggregate { xs, lower, upper })
}

fn word_sets<'a>(words: &[String; 4], cb: &'a Codebook) -> Result<Vec<&'a Fou>, EngineError> {
    Criterion::ALL
        .iter()
        .zip(words)
        .map(|(c, w)| {
            cb.fou(c.name(), w).ok_or_else(|| EngineError::UnknownWord { criterion: c.name().into(), word: w.clone() })
        })
        .collect()
}

fn weight_sets<'a>(weights: &LinguisticWeights, cb: &'a Codebook) -> Result<Option<Vec<&'a Fou>>, EngineError> {
    match weights {
        LinguisticWeights::Equal => Ok(None),
        LinguisticWeights::Words(ws) => {
            let vocab = cb.criterion(WEIGHT_NAME).ok_or_else(|| EngineError::MissingVocabulary(WEIGHT_NAME.into()))?;
            ws.iter()
                .map(|w| vocab.fou(w).ok_or_else(|| EngineError::UnknownWeight(w.clone())))
                .collect::<Result<Vec<_>, _>>()
                .map(Some)
        }
    }
}

pub fn pc_aggregate(
    words: &[String; 4],
    weights: &LinguisticWeights,
    cb: &Codebook,
    cfg: &PcConfig,
) -> Result<Aggregate, EngineError> {
    let xs: Vec<Fou> = word_sets(words, cb)?.into_iter().copied().collect();
    let ws: Option<Vec<Fou>> = weight_sets(weights, cb)?.map(|v| v.into_iter().copied().collect());
    lwa(&xs, ws.as_deref(), cfg)
}

/// Centroid mean of one frequency's aggregate.
pub fn pc_score_frequency(
    words: &[String; 4],
    weights: &LinguisticWeights,
    cb: &Codebook,
    cfg: &PcConfig,
) -> Result<f64, EngineError> {
    pc_aggregate(words, weights, cb, cfg)?.score()
}

/// Satisfaction term (1..5) most similar to the aggregate; ties to the higher
/// term. Needs a codebook with a satisfaction vocabulary.
pub fn pc_satisfaction(agg: &Aggregate, cb: &Codebook) -> Result<usize, EngineError> {
    let vocab = cb
        .criterion(SATISFACTION_NAME)
        .ok_or_else(|| EngineError::MissingVocabulary(SATISFACTION_NAME.into()))?;
    let mut best = (0, f64::NEG_INFINITY);
    for (i, f) in vocab.fous.iter().enumerate() {
        let s = agg.similarity(f)?;
        if s >= best.1 {
            best = (i + 1, s);
        }
    }
    Ok(best.0)
}

pub fn pc_recommend(
    feedback: &[FrequencyFeedback],
    weights: &LinguisticWeights,
    cb: &Codebook,
    cfg: &PcConfig,
) -> Result<Recommendation, EngineError> {
    let mut scores = Vec::with_capacity(feedback.len());
    let mut aggs = Vec::with_capacity(feedback.len());
    for fb in feedback {
        let agg = pc_aggregate(&fb.words, weights, cb, cfg)?;
        scores.push((fb.frequency, Score::Centroid(agg.score()?)));
        aggs.push(agg);
    }
    let chosen = pick(&scores).ok_or(EngineError::Empty)?;
    let at = scores.iter().position(|(f, _)| *f == chosen).expect("picked from scores");
    let satisfaction = match cb.criterion(SATISFACTION_NAME) {
        Some(_) => Some(pc_satisfaction(&aggs[at], cb)?),
        None => None,
    };
    Ok(Recommendation { engine: Engine::Pc, scores, chosen, satisfaction })
}
