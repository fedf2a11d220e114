use std::path::Path;

use cww_fuzzy::{Fou, FuzzyError, Trapezoid, SCALE_MAX, SCALE_MIN};

use crate::CodebookError;

pub const HEADER: [&str; 15] = [
    "criterion", "word", "rank", "umf_a", "umf_b", "umf_c", "umf_d", "lmf_a", "lmf_b", "lmf_c",
    "lmf_d", "lmf_h", "centroid_l", "centroid_r", "center",
];

const WORDS_PER_CRITERION: usize = 5;
const CONTAINMENT_GRID: usize = 1001;

/// Five ranked words of one criterion with their sets.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionVocabulary {
    pub name: String,
    pub words: Vec<String>,
    pub fous: Vec<Fou>,
}

impl CriterionVocabulary {
    pub fn fou(&self, word: &str) -> Option<&Fou> {
        self.rank(word).map(|r| &self.fous[r - 1])
    }

    /// 1-based rank of `word`.
    pub fn rank(&self, word: &str) -> Option<usize> {
        self.words.iter().position(|w| w == word).map(|i| i + 1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Codebook {
    pub scale: (f64, f64),
    pub criteria: Vec<CriterionVocabulary>,
}

impl Codebook {
    pub fn criterion(&self, name: &str) -> Option<&CriterionVocabulary> {
        self.criteria.iter().find(|c| c.name == name)
    }

    pub fn fou(&self, criterion: &str, word: &str) -> Option<&Fou> {
        self.criterion(criterion)?.fou(word)
    }

    /// Looks a word up in any criterion; word labels are unique across the
    /// shipped vocabularies.
    pub fn find(&self, word: &str) -> Option<&Fou> {
        self.criteria.iter().find_map(|c| c.fou(word))
    }

    pub fn words(&self) -> impl Iterator<Item = (&str, &str, &Fou)> {
        self.criteria.iter().flat_map(|c| {
            c.words.iter().zip(&c.fous).map(move |(w, f)| (c.name.as_str(), w.as_str(), f))
        })
    }
}

pub fn parse_codebook(path: impl AsRef<Path>) -> Result<Codebook, CodebookError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| CodebookError::Io { path: path.to_path_buf(), source })?;
    parse_codebook_str(&text, &path.display().to_string())
}

/// Parses codebook text; `origin` names the source in error messages.
pub fn parse_codebook_str(text: &str, origin: &str) -> Result<Codebook, CodebookError> {
    let malformed = |line: usize, reason: String| CodebookError::Malformed {
        file: origin.to_string(),
        line,
        reason,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut criteria: Vec<CriterionVocabulary> = Vec::new();
    let mut saw_header = false;
    for rec in reader.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            malformed(line, e.to_string())
        })?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if !saw_header {
            if rec.iter().ne(HEADER) {
                return Err(malformed(line, format!("expected header `{}`", HEADER.join(","))));
            }
            saw_header = true;
            continue;
        }
        if rec.len() != HEADER.len() {
            return Err(malformed(line, format!("expected {} fields, found {}", HEADER.len(), rec.len())));
        }
        let criterion = rec[0].trim();
        let word = rec[1].trim();
        if criterion.is_empty() || word.is_empty() {
            return Err(malformed(line, "empty criterion or word".into()));
        }
        let rank: usize = rec[2]
            .trim()
            .parse()
            .map_err(|_| malformed(line, format!("rank `{}` is not a positive integer", &rec[2])))?;
        let mut v = [0.0f64; 12];
        for (i, slot) in v.iter_mut().enumerate() {
            let cell = rec[i + 3].trim();
            *slot = cell
                .parse()
                .map_err(|_| malformed(line, format!("{} `{}` is not a number", HEADER[i + 3], cell)))?;
        }
        let fou = build_fou(&v).map_err(|e| malformed(line, e))?;

        if criteria.last().map_or(true, |c| c.name != criterion) {
            if criteria.iter().any(|c| c.name == criterion) {
                return Err(malformed(line, format!("criterion `{criterion}` rows are not contiguous")));
            }
            criteria.push(CriterionVocabulary { name: criterion.to_string(), words: vec![], fous: vec![] });
        }
        let vocab = criteria.last_mut().expect("pushed above");
        if vocab.words.iter().any(|w| w == word) {
            return Err(malformed(line, format!("duplicate word `{word}` in `{criterion}`")));
        }
        if rank != vocab.words.len() + 1 {
            return Err(malformed(line, format!("rank {rank} out of order (expected {})", vocab.words.len() + 1)));
        }
        vocab.words.push(word.to_string());
        vocab.fous.push(fou);
    }
    if !saw_header {
        return Err(CodebookError::Structure { file: origin.into(), reason: "missing header".into() });
    }
    for c in &criteria {
        if c.words.len() != WORDS_PER_CRITERION {
            return Err(CodebookError::Structure {
                file: origin.into(),
                reason: format!("criterion `{}` has {} words, expected {WORDS_PER_CRITERION}", c.name, c.words.len()),
            });
        }
    }
    Ok(Codebook { scale: (SCALE_MIN, SCALE_MAX), criteria })
}

fn build_fou(v: &[f64; 12]) -> Result<Fou, String> {
    let trap = |k: &[f64]| {
        Trapezoid::new(k[0], k[1], k[2], k[3]).map_err(|e| match e {
            FuzzyError::UnorderedKnots(..) => format!("unordered knots {:?}", k),
            other => other.to_string(),
        })
    };
    let umf = trap(&v[0..4])?;
    let lmf = trap(&v[4..8])?;
    let fou = Fou::new(umf, lmf, v[8], (v[9], v[10]), v[11]).map_err(|e| e.to_string())?;
    if let Some((x, excess)) = fou.containment_violation(CONTAINMENT_GRID) {
        return Err(format!("lmf not contained in umf at x = {x:.2} (excess {excess:.3})"));
    }
    if !(v[9] <= v[10]) {
        return Err(format!("centroid interval [{}, {}] is reversed", v[9], v[10]));
    }
    if !fou.center_within_centroid() {
        return Err(format!("center {} outside centroid [{}, {}]", v[11], v[9], v[10]));
    }
    Ok(fou)
}

/// Writes a codebook in the same layout it is parsed from, numbers to two
/// decimals.
pub fn serialize_codebook(cb: &Codebook) -> String {
    let mut out = HEADER.join(",");
    out.push('\n');
    for c in &cb.criteria {
        for (i, (w, f)) in c.words.iter().zip(&c.fous).enumerate() {
            let nums = [
                f.umf.a, f.umf.b, f.umf.c, f.umf.d, f.lmf.a, f.lmf.b, f.lmf.c, f.lmf.d,
                f.lmf_height, f.centroid.0, f.centroid.1, f.center,
            ];
            out.push_str(&format!("{},{},{}", c.name, w, i + 1));
            for n in nums {
                out.push_str(&format!(",{n:.2}"));
            }
            out.push('\n');
        }
    }
    out
}
