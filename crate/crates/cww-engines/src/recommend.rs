use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use cww_codebook::Codebook;
use cww_datasets::vocab::{rank_in, Criterion, WEIGHTS};
use cww_datasets::{Freq, LinguisticWeights, Session};
use cww_fuzzy::WeightProfile;

use crate::ep::DistanceTie;
use crate::pc::PcConfig;
use crate::sm::Pairing;
use crate::ttp::TwoTuple;
use crate::{ep, pc, sm, ttp, EngineError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    Pc,
    Ep,
    Sm,
    Ttp,
}

impl Engine {
    pub const ALL: [Engine; 4] = [Engine::Pc, Engine::Ep, Engine::Sm, Engine::Ttp];

    /// Short label used in files and on the command line.
    pub fn label(self) -> &'static str {
        match self {
            Engine::Pc => "pc",
            Engine::Ep => "ep",
            Engine::Sm => "sm",
            Engine::Ttp => "2tp",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Engine::ALL
            .into_iter()
            .find(|e| e.label() == s)
            .ok_or_else(|| format!("unknown engine `{s}` (pc, ep, sm, 2tp)"))
    }
}

/// Per-frequency score; variants are only compared with their own kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Score {
    /// Distance-term index 1..5.
    Index(usize),
    TwoTuple(TwoTuple),
    /// Mean of the aggregate's centroid interval.
    Centroid(f64),
}

impl Score {
    fn cmp_same(&self, other: &Score) -> Ordering {
        match (self, other) {
            (Score::Index(a), Score::Index(b)) => a.cmp(b),
            (Score::TwoTuple(a), Score::TwoTuple(b)) => a.cmp_lex(b),
            (Score::Centroid(a), Score::Centroid(b)) => a.total_cmp(b),
            _ => panic!("comparing scores of different engines"),
        }
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Score::Index(i) => write!(f, "d{i}"),
            Score::TwoTuple(t) => write!(f, "(d{}, {:.2})", t.index, t.alpha),
            Score::Centroid(c) => write!(f, "{c:.2}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Recommendation {
    pub engine: Engine,
    pub scores: Vec<(Freq, Score)>,
    pub chosen: Freq,
    /// Satisfaction term index 1..5, when the engine and inputs support one.
    pub satisfaction: Option<usize>,
}

/// Words one user gave at one frequency, in [`Criterion::ALL`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyFeedback {
    pub frequency: Freq,
    pub words: [String; 4],
}

impl FrequencyFeedback {
    pub fn new(frequency: Freq, words: [&str; 4]) -> Self {
        FrequencyFeedback { frequency, words: words.map(String::from) }
    }

    pub fn ranks(&self) -> Result<[usize; 4], EngineError> {
        word_ranks(&self.words)
    }
}

pub(crate) fn word_ranks(words: &[String; 4]) -> Result<[usize; 4], EngineError> {
    let mut out = [0; 4];
    for (k, c) in Criterion::ALL.into_iter().enumerate() {
        out[k] = c.rank(&words[k]).ok_or_else(|| EngineError::UnknownWord {
            criterion: c.name().to_string(),
            word: words[k].clone(),
        })?;
    }
    Ok(out)
}

pub(crate) fn weight_ranks(w: &LinguisticWeights) -> Result<[usize; 4], EngineError> {
    match w {
        LinguisticWeights::Equal => Ok([1; 4]),
        LinguisticWeights::Words(ws) => {
            let mut out = [0; 4];
            for (k, x) in ws.iter().enumerate() {
                out[k] = rank_in(&WEIGHTS, x).ok_or_else(|| EngineError::UnknownWeight(x.clone()))?;
            }
            Ok(out)
        }
    }
}

pub fn feedback_of(session: &Session<'_>) -> Vec<FrequencyFeedback> {
    session
        .records
        .iter()
        .map(|r| FrequencyFeedback { frequency: r.frequency, words: r.words.clone() })
        .collect()
}

/// Frequency with the maximal score; among equal maxima the lowest frequency.
pub fn pick(scores: &[(Freq, Score)]) -> Option<Freq> {
    let mut sorted: Vec<&(Freq, Score)> = scores.iter().collect();
    sorted.sort_by_key(|(f, _)| *f);
    let mut best: Option<&(Freq, Score)> = None;
    for s in sorted {
        if best.map_or(true, |b| s.1.cmp_same(&b.1) == Ordering::Greater) {
            best = Some(s);
        }
    }
    best.map(|b| b.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EngineConfig {
    pub distance: WeightProfile,
    pub distance_tie: DistanceTie,
    pub sm_cap: usize,
    pub sm_pairing: Pairing,
    pub pc: PcConfig,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            distance: WeightProfile::default(),
            distance_tie: DistanceTie::Higher,
            sm_cap: sm::DEFAULT_CAP,
            sm_pairing: Pairing::Literal,
            pc: PcConfig::default(),
        }
    }
}

impl Engine {
    /// Runs this engine over one session. Perceptual computing needs a
    /// codebook; the others ignore it.
    pub fn recommend(
        self,
        feedback: &[FrequencyFeedback],
        weights: &LinguisticWeights,
        codebook: Option<&Codebook>,
        cfg: &EngineConfig,
    ) -> Result<Recommendation, EngineError> {
        match self {
            Engine::Ep => ep::ep_recommend_with(feedback, weights, &cfg.distance, cfg.distance_tie),
            Engine::Sm => sm::sm_recommend(feedback, weights, cfg.sm_cap, cfg.sm_pairing),
            Engine::Ttp => ttp::ttp_recommend(feedback, weights),
            Engine::Pc => {
                let cb = codebook.ok_or_else(|| EngineError::MissingVocabulary("codebook".into()))?;
                pc::pc_recommend(feedback, weights, cb, &cfg.pc)
            }
        }
    }
}
