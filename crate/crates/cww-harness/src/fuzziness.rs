use cww_codebook::Codebook;
use cww_fuzzy::{fuzziness, round2, FuzzinessInterval};

use crate::dataset::Method;
use crate::render::{f2, Table};

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzinessRow {
    pub criterion: String,
    pub word: String,
    pub intervals: Vec<(Method, FuzzinessInterval)>,
    /// Percent decrease of each later method's mean against the first one's.
    pub decrease: Vec<(Method, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzinessReport {
    pub baseline: Method,
    pub rows: Vec<FuzzinessRow>,
    pub mean_decrease: Vec<(Method, f64)>,
}

impl FuzzinessReport {
    pub fn mean_decrease_of(&self, m: Method) -> Option<f64> {
        self.mean_decrease.iter().find(|(k, _)| *k == m).map(|x| x.1)
    }

    pub fn row(&self, word: &str) -> Option<&FuzzinessRow> {
        self.rows.iter().find(|r| r.word == word)
    }

    pub fn to_table(&self) -> Table {
        let methods: Vec<Method> = self.rows.first().map(|r| r.intervals.iter().map(|x| x.0).collect()).unwrap_or_default();
        let mut header = vec!["criterion".to_string(), "word".to_string()];
        for m in &methods {
            header.extend(["l", "r", "mean"].map(|s| format!("{m}_{s}")));
        }
        for m in &methods[1.min(methods.len())..] {
            header.push(format!("decrease_{m}"));
        }
        let mut t = Table { title: "Fuzziness per word".into(), header, ..Table::default() };
        for r in &self.rows {
            let mut row = vec![r.criterion.clone(), r.word.clone()];
            for (_, f) in &r.intervals {
                row.extend([f2(f.f_l), f2(f.f_r), f2(f.mean)]);
            }
            row.extend(r.decrease.iter().map(|(_, d)| f2(*d)));
            t.push(row);
        }
        let mut avg = vec!["average".to_string(), String::new()];
        avg.extend(std::iter::repeat(String::new()).take(3 * methods.len()));
        avg.extend(self.mean_decrease.iter().map(|(_, d)| f2(*d)));
        t.push(avg);
        t.note(format!("decreases compare two-decimal means against {}", self.baseline));
        t
    }
}

/// Fuzziness of every word in every book, with mean decreases against the
/// first book. Books must list the same words in the same order.
pub fn fuzziness_report(books: &[(Method, &Codebook)], resolution: usize) -> FuzzinessReport {
    let baseline = books.first().map(|b| b.0).unwrap_or(Method::Ia);
    let mut rows = Vec::new();
    if let Some((_, first)) = books.first() {
        for (crit, word, _) in first.words() {
            let intervals: Vec<(Method, FuzzinessInterval)> = books
                .iter()
                .filter_map(|(m, cb)| cb.fou(crit, word).map(|f| (*m, fuzziness(f, resolution))))
                .collect();
            let base = round2(intervals[0].1.mean);
            let decrease = intervals[1..]
                .iter()
                .map(|(m, f)| {
                    let d = if base == 0.0 { 0.0 } else { 100.0 * (base - round2(f.mean)) / base };
                    (*m, d)
                })
                .collect();
            rows.push(FuzzinessRow { criterion: crit.into(), word: word.into(), intervals, decrease });
        }
    }
    let mean_decrease = books
        .iter()
        .skip(1)
        .map(|(m, _)| {
            let ds: Vec<f64> = rows.iter().filter_map(|r| r.decrease.iter().find(|x| x.0 == *m).map(|x| x.1)).collect();
            (*m, if ds.is_empty() { 0.0 } else { ds.iter().sum::<f64>() / ds.len() as f64 })
        })
        .collect();
    FuzzinessReport { baseline, rows, mean_decrease }
}
