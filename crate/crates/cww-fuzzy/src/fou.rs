use crate::{linspace, FuzzyError, DEFAULT_RESOLUTION};

pub const SCALE_MIN: f64 = 0.0;
pub const SCALE_MAX: f64 = 10.0;

/// Trapezoidal membership function `(a, b, c, d)` of unit height.
///
/// Degenerate edges (`a == b` or `c == d`) are vertical: at the shared
/// abscissa the membership takes the plateau value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trapezoid {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Trapezoid {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self, FuzzyError> {
        for v in [a, b, c, d] {
            if !(SCALE_MIN..=SCALE_MAX).contains(&v) {
                return Err(FuzzyError::KnotOutOfScale(v));
            }
        }
        if a <= b && b <= c && c <= d {
            Ok(Trapezoid { a, b, c, d })
        } else {
            Err(FuzzyError::UnorderedKnots(a, b, c, d))
        }
    }

    pub const fn of(a: f64, b: f64, c: f64, d: f64) -> Self {
        Trapezoid { a, b, c, d }
    }

    pub fn mu(&self, x: f64) -> f64 {
        if x < self.a || x > self.d {
            0.0
        } else if x >= self.b && x <= self.c {
            1.0
        } else if x < self.b {
            (x - self.a) / (self.b - self.a)
        } else {
            (self.d - x) / (self.d - self.c)
        }
    }

    pub fn knots(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Interval type-2 fuzzy set with trapezoidal footprint of uncertainty.
///
/// `centroid` and `center` are the values cached in codebook files; use
/// [`crate::km_centroid`] to recompute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fou {
    pub umf: Trapezoid,
    pub lmf: Trapezoid,
    pub lmf_height: f64,
    pub centroid: (f64, f64),
    pub center: f64,
}

impl Fou {
    /// Builds a set, checking knot order and the lower height. Containment of
    /// the lower function is a separate check, see [`Fou::containment_violation`].
    pub fn new(
        umf: Trapezoid,
        lmf: Trapezoid,
        lmf_height: f64,
        centroid: (f64, f64),
        center: f64,
    ) -> Result<Self, FuzzyError> {
        let umf = Trapezoid::new(umf.a, umf.b, umf.c, umf.d)?;
        let lmf = Trapezoid::new(lmf.a, lmf.b, lmf.c, lmf.d)?;
        if !(lmf_height > 0.0 && lmf_height <= 1.0) {
            return Err(FuzzyError::InvalidHeight(lmf_height));
        }
        Ok(Fou { umf, lmf, lmf_height, centroid, center })
    }

    /// A set whose centroid fields are filled in by the midpoint rule; handy
    /// for constructed sets in tests and examples.
    pub fn from_mfs(umf: Trapezoid, lmf: Trapezoid, lmf_height: f64) -> Result<Self, FuzzyError> {
        let f = Fou::new(umf, lmf, lmf_height, (0.0, 0.0), 0.0)?;
        let (cl, cr) = crate::km_centroid(&f, DEFAULT_RESOLUTION)?;
        Ok(Fou { centroid: (cl, cr), center: (cl + cr) / 2.0, ..f })
    }

    pub fn upper(&self, x: f64) -> f64 {
        self.umf.mu(x)
    }

    pub fn lower(&self, x: f64) -> f64 {
        self.lmf_height * self.lmf.mu(x)
    }

    /// Largest excess of the lower over the upper membership on an evenly
    /// spaced grid over the scale, or `None` when the lower function is
    /// contained everywhere.
    pub fn containment_violation(&self, resolution: usize) -> Option<(f64, f64)> {
        let mut worst: Option<(f64, f64)> = None;
        for x in linspace(SCALE_MIN, SCALE_MAX, resolution) {
            let excess = self.lower(x) - self.upper(x);
            if excess > 1e-9 && worst.map_or(true, |(_, e)| excess > e) {
                worst = Some((x, excess));
            }
        }
        worst
    }

    /// Cached centroid interval brackets the cached center.
    pub fn center_within_centroid(&self) -> bool {
        self.centroid.0 <= self.center && self.center <= self.centroid.1
    }

    /// Upper and lower memberships sampled at `xs`.
    pub fn sample(&self, xs: &[f64]) -> (Vec<f64>, Vec<f64>) {
        xs.iter().map(|&x| (self.lower(x), self.upper(x))).unzip()
    }
}

/// Lower and upper membership of `x`.
pub fn fou_membership(f: &Fou, x: f64) -> Result<(f64, f64), FuzzyError> {
    if !(SCALE_MIN..=SCALE_MAX).contains(&x) {
        return Err(FuzzyError::OutOfScale(x));
    }
    Ok((f.lower(x), f.upper(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bvl() -> Fou {
        Fou::new(
            Trapezoid::of(0.0, 0.0, 0.18, 2.63),
            Trapezoid::of(0.0, 0.0, 0.09, 1.32),
            1.0,
            (0.44, 0.93),
            0.68,
        )
        .unwrap()
    }

    #[test]
    fn plateau_at_vertical_edge() {
        let (lo, up) = fou_membership(&bvl(), 0.05).unwrap();
        assert_eq!(up, 1.0);
        assert_eq!(lo, 1.0);
        assert_eq!(fou_membership(&bvl(), 0.0).unwrap(), (1.0, 1.0));
    }

    #[test]
    fn outside_support_is_zero() {
        assert_eq!(fou_membership(&bvl(), 2.63).unwrap(), (0.0, 0.0));
        assert_eq!(fou_membership(&bvl(), 7.0).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn apex_of_triangle() {
        let t = Trapezoid::of(2.0, 5.0, 5.0, 8.0);
        let f = Fou::new(t, t, 1.0, (5.0, 5.0), 5.0).unwrap();
        assert_eq!(fou_membership(&f, 5.0).unwrap(), (1.0, 1.0));
        assert!((f.upper(3.5) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn out_of_scale() {
        assert_eq!(fou_membership(&bvl(), 10.5), Err(FuzzyError::OutOfScale(10.5)));
        assert!(fou_membership(&bvl(), -0.1).is_err());
    }

    #[test]
    fn knot_order_and_height() {
        assert_eq!(
            Trapezoid::new(2.81, 2.96, 3.12, 0.27),
            Err(FuzzyError::UnorderedKnots(2.81, 2.96, 3.12, 0.27))
        );
        let t = Trapezoid::of(1.0, 2.0, 3.0, 4.0);
        assert_eq!(Fou::new(t, t, 0.0, (2.5, 2.5), 2.5), Err(FuzzyError::InvalidHeight(0.0)));
        assert!(Fou::new(t, t, 1.2, (2.5, 2.5), 2.5).is_err());
    }

    #[test]
    fn containment() {
        assert_eq!(bvl().containment_violation(1001), None);
        let bad = Fou::new(
            Trapezoid::of(1.0, 2.0, 3.0, 4.0),
            Trapezoid::of(1.5, 2.5, 2.5, 5.0),
            0.8,
            (2.0, 3.0),
            2.5,
        )
        .unwrap();
        let (x, e) = bad.containment_violation(1001).unwrap();
        assert!(x > 4.0 - 1e-9 && x < 5.0 && e > 0.0);
    }
}
