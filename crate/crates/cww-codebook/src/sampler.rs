use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CodebookError;

/// Attempts per pair before the sampler gives up on finding `left < right`.
pub const MAX_ATTEMPTS: usize = 1000;

/// Ranges for the left and right end points of a word's data intervals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalPair {
    pub left: (f64, f64),
    pub right: (f64, f64),
}

impl IntervalPair {
    fn check(&self) -> Result<(), CodebookError> {
        for (lo, hi) in [self.left, self.right] {
            if !(0.0 <= lo && lo <= hi && hi <= 10.0) {
                return Err(CodebookError::BadInterval(lo, hi));
            }
        }
        Ok(())
    }
}

/// Draws `n` virtual-subject intervals: the i-th left end uniform on the left
/// range paired with the i-th right end uniform on the right range. A pair
/// with `left >= right` is redrawn.
pub fn person_fou_sample(p: &IntervalPair, n: usize, seed: u64) -> Result<Vec<(f64, f64)>, CodebookError> {
    if n == 0 {
        return Err(CodebookError::EmptySample);
    }
    p.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut attempts = 0;
        loop {
            let l = rng.gen_range(p.left.0..=p.left.1);
            let r = rng.gen_range(p.right.0..=p.right.1);
            if l < r {
                out.push((l, r));
                break;
            }
            attempts += 1;
            if attempts >= MAX_ATTEMPTS {
                return Err(CodebookError::Exhausted(MAX_ATTEMPTS));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_ranges_repeat_the_point() {
        let p = IntervalPair { left: (2.0, 2.0), right: (7.0, 7.0) };
        assert_eq!(person_fou_sample(&p, 50, 1).unwrap(), vec![(2.0, 7.0); 50]);
    }

    #[test]
    fn fixed_seed_is_deterministic() {
        let p = IntervalPair { left: (1.0, 3.0), right: (6.0, 8.0) };
        assert_eq!(person_fou_sample(&p, 50, 9).unwrap(), person_fou_sample(&p, 50, 9).unwrap());
        assert_ne!(person_fou_sample(&p, 50, 9).unwrap(), person_fou_sample(&p, 50, 10).unwrap());
    }

    #[test]
    fn errors() {
        let p = IntervalPair { left: (1.0, 3.0), right: (6.0, 8.0) };
        assert!(matches!(person_fou_sample(&p, 0, 1), Err(CodebookError::EmptySample)));
        let out = IntervalPair { left: (-1.0, 3.0), right: (6.0, 8.0) };
        assert!(matches!(person_fou_sample(&out, 5, 1), Err(CodebookError::BadInterval(..))));
        let high = IntervalPair { left: (1.0, 3.0), right: (6.0, 10.5) };
        assert!(person_fou_sample(&high, 5, 1).is_err());
        let never = IntervalPair { left: (5.0, 5.0), right: (4.0, 5.0) };
        assert!(matches!(person_fou_sample(&never, 5, 1), Err(CodebookError::Exhausted(MAX_ATTEMPTS))));
    }
}
