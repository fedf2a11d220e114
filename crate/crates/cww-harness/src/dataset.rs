use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use cww_codebook::{parse_codebook, Codebook};
use cww_datasets::{load_feedback, load_golden, load_power, Corpus, GoldenTable, Mode, PowerTable};

use crate::HarnessError;

/// Interval-to-set encoding method a codebook was built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Ia,
    Eia,
    Hma,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Ia, Method::Eia, Method::Hma];

    pub fn label(self) -> &'static str {
        match self {
            Method::Ia => "ia",
            Method::Eia => "eia",
            Method::Hma => "hma",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.label() == s)
            .ok_or_else(|| format!("unknown codebook method `{s}` (ia, eia, hma)"))
    }
}

pub fn mode_label(mode: Mode) -> &'static str {
    match mode {
        Mode::Multi => "multi",
        Mode::Single => "single",
    }
}

pub fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "multi" => Ok(Mode::Multi),
        "single" => Ok(Mode::Single),
        _ => Err(format!("unknown mode `{s}` (multi, single)")),
    }
}

/// Data directory: `CWW_DATA` if set, else the `data/` folder of this workspace.
pub fn default_data_dir() -> PathBuf {
    std::env::var_os("CWW_DATA")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"))
}

pub fn codebook_path(data: &Path, mode: Mode, m: Method) -> PathBuf {
    data.join("codebooks").join(format!("{}_{}.csv", mode_label(mode), m.label()))
}

/// Everything one experiment needs, loaded and validated.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub mode: Mode,
    pub corpus: Corpus,
    pub codebooks: Vec<(Method, Codebook)>,
    pub golden: GoldenTable,
    /// Only the single-person games have power measurements.
    pub power: Option<PowerTable>,
}

impl Experiment {
    pub fn load(data: &Path, mode: Mode) -> Result<Experiment, HarnessError> {
        let m = mode_label(mode);
        let corpus = load_feedback(data.join("corpus").join(format!("{m}.csv")), mode)?;
        let codebooks = Method::ALL
            .into_iter()
            .map(|k| Ok((k, parse_codebook(codebook_path(data, mode, k))?)))
            .collect::<Result<Vec<_>, HarnessError>>()?;
        let golden = load_golden(data.join("golden").join(format!("{m}.csv")))?;
        let power = match mode {
            Mode::Single => Some(load_power(data.join("power.csv"))?),
            Mode::Multi => None,
        };
        Ok(Experiment { mode, corpus, codebooks, golden, power })
    }

    pub fn codebook(&self, m: Method) -> &Codebook {
        &self.codebooks.iter().find(|(k, _)| *k == m).expect("all methods loaded").1
    }
}
