//! Four computing-with-words engines. Each scores every frequency a user rated
//! in one session and recommends the best one; ties go to the lowest frequency.
//!
//! * [`ep`] — extension principle over triangular word models.
//! * [`sm`] — symbolic aggregation on term indices.
//! * [`ttp`] — 2-tuple linguistic aggregation.
//! * [`pc`] — perceptual computing over interval type-2 codebooks.

pub mod ep;
mod error;
pub mod pc;
mod recommend;
pub mod sm;
pub mod ttp;

pub use error::EngineError;
pub use recommend::{feedback_of, pick, Engine, EngineConfig, FrequencyFeedback, Recommendation, Score};
