//! Fixed ordinal vocabularies. Index 1 is the lowest-ranked word.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    Battery,
    AppRating,
    AppType,
    TimeSpent,
}

impl Criterion {
    pub const ALL: [Criterion; 4] =
        [Criterion::Battery, Criterion::AppRating, Criterion::AppType, Criterion::TimeSpent];

    /// Column / codebook name.
    pub fn name(self) -> &'static str {
        match self {
            Criterion::Battery => "battery",
            Criterion::AppRating => "app_rating",
            Criterion::AppType => "app_type",
            Criterion::TimeSpent => "time_spent",
        }
    }

    pub fn words(self) -> &'static [&'static str; 5] {
        match self {
            Criterion::Battery => &["BVL", "BL", "BM", "BH", "BEH"],
            Criterion::AppRating => &["AVS", "AS", "AM", "AF", "AEF"],
            Criterion::AppType => &["AU", "SI", "FI", "MI", "AI"],
            Criterion::TimeSpent => &["VL", "S", "M", "L", "VLA"],
        }
    }

    /// 1-based rank of `word` in this criterion's vocabulary.
    pub fn rank(self, word: &str) -> Option<usize> {
        rank_in(self.words(), word)
    }
}

pub const SATISFACTION_NAME: &str = "satisfaction";
pub const SATISFACTION: [&str; 5] = ["NS", "SOS", "SS", "VS", "OS"];
pub const WEIGHT_NAME: &str = "weight";
pub const WEIGHTS: [&str; 5] = ["U", "MLU", "I", "MLI", "VI"];
pub const EQUAL: &str = "Equal";

pub fn rank_in(words: &[&str], word: &str) -> Option<usize> {
    words.iter().position(|w| *w == word).map(|i| i + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    Training,
    Execution,
}

impl Phase {
    pub const BOTH: [Phase; 2] = [Phase::Training, Phase::Execution];

    pub fn code(self) -> &'static str {
        match self {
            Phase::Training => "T",
            Phase::Execution => "E",
        }
    }
}

impl FromStr for Phase {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" | "Training" | "training" => Ok(Phase::Training),
            "E" | "Execution" | "execution" => Ok(Phase::Execution),
            _ => Err(format!("unknown phase `{s}`")),
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Processor frequency level, `F1` (lowest) to `F6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Freq(u8);

impl Freq {
    pub const COUNT: usize = 6;

    pub fn new(level: u8) -> Option<Freq> {
        (1..=Self::COUNT as u8).contains(&level).then_some(Freq(level))
    }

    pub fn level(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn all() -> impl Iterator<Item = Freq> {
        (1..=Self::COUNT as u8).map(Freq)
    }
}

impl FromStr for Freq {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.strip_prefix('F')
            .and_then(|n| n.parse().ok())
            .and_then(Freq::new)
            .ok_or_else(|| format!("unknown frequency `{s}`"))
    }
}

impl fmt::Display for Freq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

/// Per-criterion importance: either all equal, or one weight word per
/// criterion in [`Criterion::ALL`] order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LinguisticWeights {
    Equal,
    Words([String; 4]),
}

impl LinguisticWeights {
    /// Weight word indices 1..5; `Equal` expands to all ones.
    pub fn indices(&self) -> [usize; 4] {
        match self {
            LinguisticWeights::Equal => [1; 4],
            LinguisticWeights::Words(w) => w.each_ref().map(|x| rank_in(&WEIGHTS, x).unwrap_or(0)),
        }
    }

    pub fn is_equal(&self) -> bool {
        matches!(self, LinguisticWeights::Equal)
    }
}
