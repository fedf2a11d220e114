use crate::{linspace, Fou, FuzzyError, SCALE_MAX, SCALE_MIN};

/// Fuzziness interval: the kernel average of the least and most fuzzy
/// embedded sets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzinessInterval {
    pub f_l: f64,
    pub f_r: f64,
    pub mean: f64,
}

impl FuzzinessInterval {
    pub fn new(f_l: f64, f_r: f64) -> Self {
        FuzzinessInterval { f_l, f_r, mean: 0.5 * (f_l + f_r) }
    }
}

/// Linear fuzziness kernel: 0 for crisp membership, 1 at 0.5.
pub fn kernel(u: f64) -> f64 {
    1.0 - (2.0 * u - 1.0).abs()
}

/// Fuzziness of `f` sampled over the upper function's support.
pub fn fuzziness(f: &Fou, resolution: usize) -> FuzzinessInterval {
    let xs = linspace(f.umf.a, f.umf.d, resolution.max(1));
    let (lo, up) = f.sample(&xs);
    fuzziness_sampled(&lo, &up)
}

/// The kernel is concave with its peak at 0.5, so the pointwise extremes over
/// `[lower, upper]` sit at an endpoint or at 0.5; averaging is linear, so the
/// interval endpoints are the averages of the pointwise extremes.
pub fn fuzziness_sampled(lower: &[f64], upper: &[f64]) -> FuzzinessInterval {
    let n = lower.len().min(upper.len());
    if n == 0 {
        return FuzzinessInterval::new(0.0, 0.0);
    }
    let (mut lo_sum, mut hi_sum) = (0.0, 0.0);
    for (&l, &u) in lower.iter().zip(upper) {
        let (gl, gu) = (kernel(l), kernel(u));
        lo_sum += gl.min(gu);
        hi_sum += if l <= 0.5 && 0.5 <= u { 1.0 } else { gl.max(gu) };
    }
    FuzzinessInterval::new(lo_sum / n as f64, hi_sum / n as f64)
}

/// Jaccard similarity of two interval type-2 sets on a shared grid over the
/// whole scale.
pub fn jaccard_similarity(a: &Fou, b: &Fou, resolution: usize) -> Result<f64, FuzzyError> {
    let xs = linspace(SCALE_MIN, SCALE_MAX, resolution);
    let (la, ua) = a.sample(&xs);
    let (lb, ub) = b.sample(&xs);
    jaccard_sampled(&la, &ua, &lb, &ub)
}

pub fn jaccard_sampled(
    lower_a: &[f64],
    upper_a: &[f64],
    lower_b: &[f64],
    upper_b: &[f64],
) -> Result<f64, FuzzyError> {
    let n = lower_a.len();
    if upper_a.len() != n || lower_b.len() != n || upper_b.len() != n {
        return Err(FuzzyError::LengthMismatch);
    }
    let (mut num, mut den) = (0.0, 0.0);
    for i in 0..n {
        num += upper_a[i].min(upper_b[i]) + lower_a[i].min(lower_b[i]);
        den += upper_a[i].max(upper_b[i]) + lower_a[i].max(lower_b[i]);
    }
    if den <= 0.0 {
        return Err(FuzzyError::UndefinedSimilarity);
    }
    Ok(num / den)
}
