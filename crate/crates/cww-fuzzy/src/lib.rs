//! Numeric kernels for computing-with-words pipelines.
//!
//! Two families of sets live here: triangular type-1 membership functions on
//! the normalized `[0, 1]` scale ([`TriTuple`]) and interval type-2 sets with
//! trapezoidal upper/lower membership functions on the `[0, 10]` word scale
//! ([`Fou`]).

mod centroid;
mod error;
mod fou;
mod grid;
mod measures;
mod tri;

pub use centroid::{km_centroid, km_centroid_sampled};
pub use error::FuzzyError;
pub use fou::{fou_membership, Fou, Trapezoid, SCALE_MAX, SCALE_MIN};
pub use grid::{linspace, DEFAULT_RESOLUTION};
pub use measures::{
    fuzziness, fuzziness_sampled, jaccard_similarity, jaccard_sampled, kernel, FuzzinessInterval,
};
pub use tri::{tri_mean, tri_product, weighted_distance, TriTuple, WeightProfile};

/// Rounds half away from zero to two decimals, the way printed tables do.
pub fn round2(x: f64) -> f64 {
    let y = (x * 100.0).round() / 100.0;
    if y == 0.0 {
        0.0
    } else {
        y
    }
}
