//! Experiment corpora.
//!
//! Multi-person files carry one row per user × game × phase × frequency with a
//! word per criterion; single-person files append four weight columns. The
//! power table maps game × frequency to average watts, and golden tables hold
//! published recommendations for regression checks.

mod corpus;
mod error;
mod golden;
mod power;
pub mod vocab;

pub use corpus::{
    load_feedback, parse_feedback_str, serialize_feedback, Corpus, FeedbackRecord, Mode, Session,
    WeightAssignment,
};
pub use error::DataError;
pub use golden::{load_golden, parse_golden_str, GoldenTable};
pub use power::{load_power, parse_power_str, serialize_power, PowerTable};
pub use vocab::{Criterion, Freq, LinguisticWeights, Phase};
