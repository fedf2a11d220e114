use crate::{linspace, Fou, FuzzyError};

const MIN_RESOLUTION: usize = 50;

/// Centroid interval of an interval type-2 set, sampled at `resolution`
/// evenly spaced points across the upper function's support.
pub fn km_centroid(f: &Fou, resolution: usize) -> Result<(f64, f64), FuzzyError> {
    if resolution < MIN_RESOLUTION {
        return Err(FuzzyError::Resolution { got: resolution, min: MIN_RESOLUTION });
    }
    if f.umf.d <= f.umf.a {
        return Err(FuzzyError::EmptySet);
    }
    let xs = linspace(f.umf.a, f.umf.d, resolution);
    let (lo, up) = f.sample(&xs);
    km_centroid_sampled(&xs, &lo, &up)
}

/// Karnik–Mendel iteration on a sampled set. `xs` must be ascending and
/// `lower[i] <= upper[i]`.
pub fn km_centroid_sampled(
    xs: &[f64],
    lower: &[f64],
    upper: &[f64],
) -> Result<(f64, f64), FuzzyError> {
    if xs.len() != lower.len() || xs.len() != upper.len() {
        return Err(FuzzyError::LengthMismatch);
    }
    if upper.iter().sum::<f64>() <= 0.0 {
        return Err(FuzzyError::EmptySet);
    }
    Ok((km_endpoint(xs, lower, upper, false), km_endpoint(xs, lower, upper, true)))
}

/// Left endpoint: upper weights left of the switch point, lower weights right
/// of it. Right endpoint: the mirror image.
fn km_endpoint(xs: &[f64], lower: &[f64], upper: &[f64], right: bool) -> f64 {
    let n = xs.len();
    let (mut num, mut den) = (0.0, 0.0);
    for i in 0..n {
        let t = 0.5 * (lower[i] + upper[i]);
        num += xs[i] * t;
        den += t;
    }
    let mut y = num / den;
    let mut switch = usize::MAX;
    for _ in 0..=n + 1 {
        // largest k with xs[k] <= y
        let k = xs.partition_point(|&x| x <= y).saturating_sub(1);
        if k == switch {
            break;
        }
        switch = k;
        let (mut num, mut den) = (0.0, 0.0);
        for i in 0..n {
            let w = match (i <= k, right) {
                (true, false) | (false, true) => upper[i],
                _ => lower[i],
            };
            num += xs[i] * w;
            den += w;
        }
        if den <= 0.0 {
            break;
        }
        y = num / den;
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Trapezoid;

    #[test]
    fn symmetric_triangle_collapses() {
        let t = Trapezoid::of(2.0, 5.0, 5.0, 8.0);
        let f = Fou::new(t, t, 1.0, (5.0, 5.0), 5.0).unwrap();
        let (l, r) = km_centroid(&f, 1001).unwrap();
        assert!((l - 5.0).abs() < 1e-9 && (r - 5.0).abs() < 1e-9);
    }

    #[test]
    fn codebook_word_matches_cached_interval() {
        let f = Fou::new(
            Trapezoid::of(0.0, 0.0, 0.18, 2.63),
            Trapezoid::of(0.0, 0.0, 0.09, 1.32),
            1.0,
            (0.44, 0.93),
            0.68,
        )
        .unwrap();
        let (l, r) = km_centroid(&f, 1001).unwrap();
        assert!((l - 0.44).abs() <= 0.05, "{l}");
        assert!((r - 0.93).abs() <= 0.05, "{r}");
    }

    #[test]
    fn rejects_coarse_grid_and_empty_support() {
        let t = Trapezoid::of(2.0, 5.0, 5.0, 8.0);
        let f = Fou::new(t, t, 1.0, (5.0, 5.0), 5.0).unwrap();
        assert!(matches!(km_centroid(&f, 10), Err(FuzzyError::Resolution { .. })));
        let p = Trapezoid::of(3.0, 3.0, 3.0, 3.0);
        let f = Fou::new(p, p, 1.0, (3.0, 3.0), 3.0).unwrap();
        assert_eq!(km_centroid(&f, 100), Err(FuzzyError::EmptySet));
        assert_eq!(km_centroid_sampled(&[1.0, 2.0], &[0.0, 0.0], &[0.0, 0.0]), Err(FuzzyError::EmptySet));
    }
}
