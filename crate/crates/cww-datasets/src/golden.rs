use std::collections::BTreeMap;
use std::path::Path;

use crate::error::read;
use crate::{DataError, Freq, Phase};

const HEADER: &str = "user,game,phase,engine,frequency";

type Key = (u32, String, Phase, String);

/// Published recommendations keyed by user, game, phase and engine label.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GoldenTable {
    pub entries: BTreeMap<Key, Freq>,
}

impl GoldenTable {
    pub fn get(&self, user: u32, game: &str, phase: Phase, engine: &str) -> Option<Freq> {
        self.entries.get(&(user, game.to_string(), phase, engine.to_string())).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn load_golden(path: impl AsRef<Path>) -> Result<GoldenTable, DataError> {
    let path = path.as_ref();
    parse_golden_str(&read(path)?, &path.display().to_string())
}

pub fn parse_golden_str(text: &str, origin: &str) -> Result<GoldenTable, DataError> {
    let row_err = |line: usize, reason: String| DataError::Row { file: origin.into(), line, reason };
    let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
    let mut rows = reader.records();
    match rows.next() {
        Some(Ok(h)) if h.iter().eq(HEADER.split(',')) => {}
        _ => return Err(row_err(1, format!("expected header `{HEADER}`"))),
    }
    let mut table = GoldenTable::default();
    for rec in rows {
        let rec = rec.map_err(|e| row_err(e.position().map_or(0, |p| p.line() as usize), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let user = rec[0].parse().map_err(|_| row_err(line, format!("bad user id `{}`", &rec[0])))?;
        let phase = rec[2].parse().map_err(|e| row_err(line, e))?;
        let f: Freq = rec[4].parse().map_err(|e| row_err(line, e))?;
        let key = (user, rec[1].to_string(), phase, rec[3].to_string());
        if table.entries.insert(key, f).is_some() {
            return Err(row_err(line, "duplicate entry".into()));
        }
    }
    Ok(table)
}
