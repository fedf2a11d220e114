use std::path::Path;

use crate::error::read;
use crate::{DataError, Freq};

const HEADER: &str = "game,frequency,watts";

/// Average power draw (watts) per game and frequency level.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerTable {
    /// Games in file order, each with watts for F1..F6.
    pub games: Vec<(String, [f64; Freq::COUNT])>,
}

impl PowerTable {
    pub fn watts(&self, game: &str, f: Freq) -> Option<f64> {
        self.games.iter().find(|(g, _)| g == game).map(|(_, w)| w[f.index()])
    }
}

pub fn load_power(path: impl AsRef<Path>) -> Result<PowerTable, DataError> {
    let path = path.as_ref();
    parse_power_str(&read(path)?, &path.display().to_string())
}

pub fn parse_power_str(text: &str, origin: &str) -> Result<PowerTable, DataError> {
    let row_err = |line: usize, reason: String| DataError::Row { file: origin.into(), line, reason };
    let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
    let mut rows = reader.records();
    match rows.next() {
        Some(Ok(h)) if h.iter().eq(HEADER.split(',')) => {}
        _ => return Err(row_err(1, format!("expected header `{HEADER}`"))),
    }
    let mut cells: Vec<(String, Vec<(Freq, f64)>)> = Vec::new();
    for rec in rows {
        let rec = rec.map_err(|e| row_err(e.position().map_or(0, |p| p.line() as usize), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let game = rec[0].trim().to_string();
        let f: Freq = rec[1].trim().parse().map_err(|e| row_err(line, e))?;
        let w: f64 = rec[2].trim().parse().map_err(|_| row_err(line, format!("bad watts `{}`", &rec[2])))?;
        if !(w.is_finite() && w > 0.0) {
            return Err(row_err(line, format!("watts must be positive, got {w}")));
        }
        match cells.iter_mut().find(|(g, _)| *g == game) {
            Some((_, v)) => v.push((f, w)),
            None => cells.push((game, vec![(f, w)])),
        }
    }
    let table_err = |reason: String| DataError::Table { file: origin.into(), reason };
    let mut games = Vec::new();
    for (game, v) in cells {
        // rows must run F1..F6 in order, with strictly increasing watts
        if v.len() != Freq::COUNT || v.iter().enumerate().any(|(i, (f, _))| f.index() != i) {
            return Err(table_err(format!("{game}: expected rows F1..F6 in order")));
        }
        if let Some(w) = v.windows(2).find(|w| w[1].1 <= w[0].1) {
            return Err(table_err(format!(
                "{game}: power not increasing with frequency ({} {} W, {} {} W)",
                w[0].0, w[0].1, w[1].0, w[1].1
            )));
        }
        let mut arr = [0.0; Freq::COUNT];
        for (f, w) in v {
            arr[f.index()] = w;
        }
        games.push((game, arr));
    }
    Ok(PowerTable { games })
}

pub fn serialize_power(t: &PowerTable) -> String {
    let mut out = format!("{HEADER}\n");
    for (g, w) in &t.games {
        for f in Freq::all() {
            out.push_str(&format!("{g},{f},{:.2}\n", w[f.index()]));
        }
    }
    out
}
