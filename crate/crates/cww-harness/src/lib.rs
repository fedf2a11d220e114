//! Experiment harness: replays the corpora through every engine, compares
//! against the golden tables and derives mismatch, power, satisfaction,
//! fuzziness and group statistics.

pub mod comparison;
pub mod config;
pub mod dataset;
mod error;
pub mod fuzziness;
pub mod render;
pub mod reports;

pub use comparison::{discrepancies, golden_agreement, run_comparison, Cell, ComparisonRow, ComparisonTable, Discrepancy, Group};
pub use config::{Config, Reference};
pub use dataset::{default_data_dir, Experiment, Method};
pub use error::HarnessError;
pub use fuzziness::{fuzziness_report, FuzzinessReport};
pub use reports::{group_analysis, mismatch_stats, power_report, satisfaction_report, AverageReport, GroupReport, MismatchReport};
