use cww_fuzzy::{km_centroid, DEFAULT_RESOLUTION};

use crate::Codebook;

/// Tolerance on cached vs recomputed centroid end points.
const CENTROID_TOLERANCE: f64 = 0.05;

#[derive(Debug, Clone, PartialEq)]
pub struct WordCheck {
    pub criterion: String,
    pub word: String,
    pub contained: bool,
    pub cached: (f64, f64),
    pub center_in_centroid: bool,
    pub recomputed: Option<(f64, f64)>,
    /// Absolute deviation of the cached centroid end points from the
    /// recomputed ones.
    pub deviation: Option<(f64, f64)>,
}

impl WordCheck {
    pub fn passed(&self, tolerance: f64) -> bool {
        self.contained
            && self.center_in_centroid
            && self.deviation.is_some_and(|(l, r)| l <= tolerance && r <= tolerance)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub tolerance: f64,
    pub words: Vec<WordCheck>,
}

impl ValidationReport {
    pub fn failures(&self) -> impl Iterator<Item = &WordCheck> {
        self.words.iter().filter(|w| !w.passed(self.tolerance))
    }

    pub fn is_clean(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn render(&self) -> String {
        let mut s = format!(
            "{:<14} {:<5} {:>9} {:>7} {:>15} {:>15} {:>6}\n",
            "criterion", "word", "contained", "center", "cached", "recomputed", "dev"
        );
        for w in &self.words {
            let rec = w.recomputed.map_or("-".to_string(), |(l, r)| format!("[{l:.2}, {r:.2}]"));
            let dev = w.deviation.map_or("-".to_string(), |(l, r)| format!("{:.3}", l.max(r)));
            s.push_str(&format!(
                "{:<14} {:<5} {:>9} {:>7} {:>15} {:>15} {:>6}{}\n",
                w.criterion,
                w.word,
                if w.contained { "yes" } else { "NO" },
                if w.center_in_centroid { "yes" } else { "NO" },
                format!("[{:.2}, {:.2}]", w.cached.0, w.cached.1),
                rec,
                dev,
                if w.passed(self.tolerance) { "" } else { "  FAIL" },
            ));
        }
        s
    }
}

/// Checks every word: lower function inside the upper one on the grid, cached
/// center inside the cached centroid, cached centroid close to a fresh one.
pub fn validate_codebook(cb: &Codebook) -> ValidationReport {
    validate_with(cb, CENTROID_TOLERANCE, DEFAULT_RESOLUTION)
}

pub fn validate_with(cb: &Codebook, tolerance: f64, resolution: usize) -> ValidationReport {
    let words = cb
        .words()
        .map(|(criterion, word, f)| {
            let recomputed = km_centroid(f, resolution).ok();
            WordCheck {
                criterion: criterion.to_string(),
                word: word.to_string(),
                contained: f.containment_violation(resolution).is_none(),
                cached: f.centroid,
                center_in_centroid: f.center_within_centroid(),
                recomputed,
                deviation: recomputed.map(|(l, r)| ((l - f.centroid.0).abs(), (r - f.centroid.1).abs())),
            }
        })
        .collect();
    ValidationReport { tolerance, words }
}
