use std::collections::BTreeMap;
use std::path::Path;

use crate::error::read;
use crate::vocab::{rank_in, Criterion, Freq, LinguisticWeights, Phase, EQUAL, WEIGHTS};
use crate::DataError;

const BASE_HEADER: [&str; 8] =
    ["user", "game", "phase", "frequency", "battery", "app_rating", "app_type", "time_spent"];
const WEIGHT_HEADER: [&str; 4] = ["w_battery", "w_app_rating", "w_app_type", "w_time_spent"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Multi-person feedback, no weights.
    Multi,
    /// Single-person feedback with per-user linguistic weights.
    Single,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeedbackRecord {
    pub user: u32,
    pub game: String,
    pub phase: Phase,
    pub frequency: Freq,
    /// One word per criterion, in [`Criterion::ALL`] order.
    pub words: [String; 4],
}

impl FeedbackRecord {
    pub fn word(&self, c: Criterion) -> &str {
        &self.words[c as usize]
    }

    /// Word ranks 1..5 per criterion.
    pub fn ranks(&self) -> [usize; 4] {
        Criterion::ALL.map(|c| c.rank(self.word(c)).expect("validated at load"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    pub user: u32,
    pub game: String,
    pub weights: LinguisticWeights,
}

/// All frequencies one user rated in one game and phase.
#[derive(Debug, Clone, PartialEq)]
pub struct Session<'a> {
    pub user: u32,
    pub game: &'a str,
    pub phase: Phase,
    pub weights: LinguisticWeights,
    /// Ordered by frequency.
    pub records: Vec<&'a FeedbackRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    pub mode: Mode,
    /// In file order.
    pub records: Vec<FeedbackRecord>,
    /// Single mode only; one entry per user and game.
    pub weights: Vec<WeightAssignment>,
}

impl Corpus {
    /// Games in order of first appearance.
    pub fn games(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.records {
            if !out.contains(&r.game.as_str()) {
                out.push(&r.game);
            }
        }
        out
    }

    pub fn users(&self) -> Vec<u32> {
        let mut u: Vec<u32> = self.records.iter().map(|r| r.user).collect();
        u.sort_unstable();
        u.dedup();
        u
    }

    pub fn weights_for(&self, user: u32, game: &str) -> LinguisticWeights {
        self.weights
            .iter()
            .find(|w| w.user == user && w.game == game)
            .map_or(LinguisticWeights::Equal, |w| w.weights.clone())
    }

    /// Sessions ordered by game (first appearance), user, then phase.
    pub fn sessions(&self) -> Vec<Session<'_>> {
        let games = self.games();
        let mut map: BTreeMap<(usize, u32, Phase), Vec<&FeedbackRecord>> = BTreeMap::new();
        for r in &self.records {
            let g = games.iter().position(|g| *g == r.game).expect("listed above");
            map.entry((g, r.user, r.phase)).or_default().push(r);
        }
        map.into_iter()
            .map(|((g, user, phase), mut records)| {
                records.sort_by_key(|r| r.frequency);
                Session { user, game: games[g], phase, weights: self.weights_for(user, games[g]), records }
            })
            .collect()
    }

    pub fn session(&self, user: u32, game: &str, phase: Phase) -> Option<Session<'_>> {
        self.sessions().into_iter().find(|s| s.user == user && s.game == game && s.phase == phase)
    }
}

pub fn load_feedback(path: impl AsRef<Path>, mode: Mode) -> Result<Corpus, DataError> {
    let path = path.as_ref();
    parse_feedback_str(&read(path)?, &path.display().to_string(), mode)
}

pub fn parse_feedback_str(text: &str, origin: &str, mode: Mode) -> Result<Corpus, DataError> {
    let header: Vec<&str> = match mode {
        Mode::Multi => BASE_HEADER.to_vec(),
        Mode::Single => BASE_HEADER.iter().chain(&WEIGHT_HEADER).copied().collect(),
    };
    let row_err = |line: usize, reason: String| DataError::Row { file: origin.into(), line, reason };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut rows = reader.records();
    match rows.next() {
        Some(Ok(h)) if h.iter().eq(header.iter().copied()) => {}
        Some(Err(e)) => return Err(row_err(1, e.to_string())),
        _ => return Err(row_err(1, format!("expected header `{}`", header.join(",")))),
    }

    let mut records = Vec::new();
    let mut weights: Vec<WeightAssignment> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for rec in rows {
        let rec = rec.map_err(|e| row_err(e.position().map_or(0, |p| p.line() as usize), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let cell = |i: usize| rec.get(i).map(str::trim).filter(|s| !s.is_empty());
        if let Some(i) = (0..header.len()).find(|&i| cell(i).is_none()) {
            let coord = |i: usize| cell(i).unwrap_or("?").to_string();
            return Err(DataError::MissingCell {
                file: origin.into(),
                column: header[i].into(),
                user: coord(0),
                game: coord(1),
                phase: coord(2),
                frequency: coord(3),
            });
        }
        if rec.len() != header.len() {
            return Err(row_err(line, format!("expected {} fields, found {}", header.len(), rec.len())));
        }
        let get = |i: usize| cell(i).expect("checked above");
        let user: u32 = get(0).parse().map_err(|_| row_err(line, format!("bad user id `{}`", get(0))))?;
        let game = get(1).to_string();
        let phase: Phase = get(2).parse().map_err(|e| row_err(line, e))?;
        let frequency: Freq = get(3).parse().map_err(|e| row_err(line, e))?;
        let mut words: [String; 4] = Default::default();
        for (k, c) in Criterion::ALL.into_iter().enumerate() {
            let w = get(4 + k);
            if c.rank(w).is_none() {
                return Err(row_err(line, format!("unknown word `{w}` for criterion {}", c.name())));
            }
            words[k] = w.to_string();
        }
        if !seen.insert((user, game.clone(), phase, frequency)) {
            return Err(row_err(line, format!("duplicate record for user {user}, {game}, {phase}, {frequency}")));
        }
        if mode == Mode::Single {
            let ws: Vec<&str> = (8..12).map(get).collect();
            let lw = if ws.iter().all(|w| *w == EQUAL) {
                LinguisticWeights::Equal
            } else if let Some(bad) = ws.iter().find(|w| rank_in(&WEIGHTS, w).is_none()) {
                return Err(row_err(line, format!("unknown weight `{bad}` (use {} or Equal in all four)", WEIGHTS.join("/"))));
            } else {
                LinguisticWeights::Words([0, 1, 2, 3].map(|i| ws[i].to_string()))
            };
            match weights.iter().find(|a| a.user == user && a.game == game) {
                Some(a) if a.weights != lw => {
                    return Err(row_err(line, format!("weights for user {user}, {game} differ from earlier rows")))
                }
                Some(_) => {}
                None => weights.push(WeightAssignment { user, game: game.clone(), weights: lw }),
            }
        }
        records.push(FeedbackRecord { user, game, phase, frequency, words });
    }
    Ok(Corpus { mode, records, weights })
}

/// Writes the corpus back in file order; the inverse of [`parse_feedback_str`].
pub fn serialize_feedback(c: &Corpus) -> String {
    let mut out = BASE_HEADER.join(",");
    if c.mode == Mode::Single {
        out.push(',');
        out.push_str(&WEIGHT_HEADER.join(","));
    }
    out.push('\n');
    for r in &c.records {
        out.push_str(&format!("{},{},{},{},{}", r.user, r.game, r.phase, r.frequency, r.words.join(",")));
        if c.mode == Mode::Single {
            match c.weights_for(r.user, &r.game) {
                LinguisticWeights::Equal => out.push_str(&format!(",{EQUAL}").repeat(4)),
                LinguisticWeights::Words(w) => {
                    out.push(',');
                    out.push_str(&w.join(","));
                }
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MULTI: &str = "\
user,game,phase,frequency,battery,app_rating,app_type,time_spent
6,left4dead,T,F1,BH,AF,FI,M
6,left4dead,E,F1,BH,AF,FI,M
6,left4dead,T,F2,BM,AF,FI,M
";
    const SINGLE: &str = "\
user,game,phase,frequency,battery,app_rating,app_type,time_spent,w_battery,w_app_rating,w_app_type,w_time_spent
22,subway_surfers,T,F1,BH,AS,SI,M,MLI,I,U,U
22,subway_surfers,T,F2,BH,AM,SI,M,MLI,I,U,U
1,subway_surfers,T,F1,BH,AS,SI,M,Equal,Equal,Equal,Equal
";

    #[test]
    fn multi_round_trip_and_sessions() {
        let c = parse_feedback_str(MULTI, "m", Mode::Multi).unwrap();
        assert_eq!(serialize_feedback(&c), MULTI);
        assert_eq!(c.records[0].ranks(), [4, 4, 3, 3]);
        let s = c.sessions();
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].phase, s[0].records.len()), (Phase::Training, 2));
        assert_eq!(s[0].records[1].frequency, Freq::new(2).unwrap());
    }

    #[test]
    fn single_weights() {
        let c = parse_feedback_str(SINGLE, "s", Mode::Single).unwrap();
        assert_eq!(serialize_feedback(&c), SINGLE);
        assert_eq!(c.weights_for(22, "subway_surfers").indices(), [4, 3, 1, 1]);
        assert!(c.weights_for(1, "subway_surfers").is_equal());
    }

    #[test]
    fn missing_cell_names_coordinates() {
        let bad = MULTI.replace("6,left4dead,T,F2,BM,AF,FI,M", "6,left4dead,T,F2,BM,,FI,M");
        let e = parse_feedback_str(&bad, "m.csv", Mode::Multi).unwrap_err().to_string();
        assert_eq!(e, "m.csv: missing cell `app_rating` at user 6, left4dead, phase T, F2");
        let short = MULTI.replace("6,left4dead,T,F2,BM,AF,FI,M", "6,left4dead,T,F2,BM,AF,FI");
        assert!(parse_feedback_str(&short, "m.csv", Mode::Multi).unwrap_err().to_string().contains("time_spent"));
    }

    #[test]
    fn rejects_bad_rows() {
        let unknown = MULTI.replace("BM,AF", "BX,AF");
        assert!(parse_feedback_str(&unknown, "m", Mode::Multi).unwrap_err().to_string().contains("unknown word `BX`"));
        let dup = format!("{MULTI}6,left4dead,T,F2,BM,AF,FI,M\n");
        assert!(parse_feedback_str(&dup, "m", Mode::Multi).unwrap_err().to_string().contains("duplicate"));
        let drift = SINGLE.replace("BH,AM,SI,M,MLI,I,U,U", "BH,AM,SI,M,MLI,I,U,VI");
        assert!(parse_feedback_str(&drift, "s", Mode::Single).unwrap_err().to_string().contains("differ"));
        let mixed = SINGLE.replace("Equal,Equal,Equal,Equal", "Equal,U,Equal,Equal");
        assert!(parse_feedback_str(&mixed, "s", Mode::Single).is_err());
        assert!(parse_feedback_str(MULTI, "m", Mode::Single).unwrap_err().to_string().contains("expected header"));
    }
}
