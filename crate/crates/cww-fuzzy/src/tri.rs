use crate::FuzzyError;

/// Triangular membership function given by its left foot, apex and right foot
/// on the normalized `[0, 1]` scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriTuple {
    pub l: f64,
    pub m: f64,
    pub r: f64,
}

impl TriTuple {
    pub fn new(l: f64, m: f64, r: f64) -> Result<Self, FuzzyError> {
        let ok = (0.0..=1.0).contains(&l) && l <= m && m <= r && r <= 1.0;
        if ok {
            Ok(TriTuple { l, m, r })
        } else {
            Err(FuzzyError::InvalidTriTuple(l, m, r))
        }
    }

    /// Constructor for literals known to be valid.
    pub const fn of(l: f64, m: f64, r: f64) -> Self {
        TriTuple { l, m, r }
    }

    pub fn is_valid(&self) -> bool {
        TriTuple::new(self.l, self.m, self.r).is_ok()
    }
}

/// Weights of the left, apex and right components in [`weighted_distance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightProfile {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl WeightProfile {
    pub fn new(p1: f64, p2: f64, p3: f64) -> Result<Self, FuzzyError> {
        let nonneg = p1 >= 0.0 && p2 >= 0.0 && p3 >= 0.0;
        if nonneg && ((p1 + p2 + p3) - 1.0).abs() <= 1e-9 {
            Ok(WeightProfile { p1, p2, p3 })
        } else {
            Err(FuzzyError::InvalidWeights(p1, p2, p3))
        }
    }
}

impl Default for WeightProfile {
    fn default() -> Self {
        WeightProfile { p1: 0.2, p2: 0.6, p3: 0.2 }
    }
}

/// Product of two non-negative triangular numbers, approximated by a triangle:
/// the extreme feet come from the four corner products, the apex from `m·m`.
pub fn tri_product(a: &TriTuple, b: &TriTuple) -> TriTuple {
    let corners = [a.l * b.l, a.l * b.r, a.r * b.l, a.r * b.r];
    let lo = corners.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = corners.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    TriTuple { l: lo, m: a.m * b.m, r: hi }
}

/// Componentwise arithmetic mean.
pub fn tri_mean(items: &[TriTuple]) -> Result<TriTuple, FuzzyError> {
    if items.is_empty() {
        return Err(FuzzyError::EmptyAggregation);
    }
    let n = items.len() as f64;
    let (l, m, r) = items
        .iter()
        .fold((0.0, 0.0, 0.0), |(l, m, r), t| (l + t.l, m + t.m, r + t.r));
    Ok(TriTuple { l: l / n, m: m / n, r: r / n })
}

pub fn weighted_distance(a: &TriTuple, b: &TriTuple, w: &WeightProfile) -> f64 {
    let dl = a.l - b.l;
    let dm = a.m - b.m;
    let dr = a.r - b.r;
    (w.p1 * dl * dl + w.p2 * dm * dm + w.p3 * dr * dr).sqrt()
}
