//! Run configuration read from `key = value` lines; `#` starts a comment.

use std::path::Path;
use std::str::FromStr;

use cww_engines::ep::DistanceTie;
use cww_engines::sm::Pairing;
use cww_engines::EngineConfig;
use cww_fuzzy::WeightProfile;

use crate::dataset::Method;
use crate::HarnessError;

/// Which column counts as the correct recommendation in derived statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reference {
    /// Perceptual computing as computed by this toolkit.
    #[default]
    Computed,
    /// The shipped golden perceptual-computing column.
    Published,
}

impl FromStr for Reference {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "computed" => Ok(Reference::Computed),
            "published" => Ok(Reference::Published),
            _ => Err(format!("expected computed or published, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub engines: EngineConfig,
    /// Codebook whose perceptual-computing column is reported.
    pub pc_codebook: Method,
    pub reference: Reference,
    /// Minimum per-engine agreement with the golden tables.
    pub golden_threshold: f64,
    pub seed: u64,
    /// Grid used by fuzziness and codebook validation.
    pub resolution: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            engines: EngineConfig::default(),
            pc_codebook: Method::Eia,
            reference: Reference::Computed,
            golden_threshold: 0.90,
            seed: 42,
            resolution: cww_fuzzy::DEFAULT_RESOLUTION,
        }
    }
}

fn parse<T: FromStr>(v: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    v.parse::<T>().map_err(|e| format!("bad value `{v}`: {e}"))
}

impl Config {
    pub fn load(path: impl AsRef<Path>) -> Result<Config, HarnessError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|source| HarnessError::Io { path: path.display().to_string(), source })?;
        Config::parse_str(&text, &path.display().to_string())
    }

    pub fn parse_str(text: &str, origin: &str) -> Result<Config, HarnessError> {
        let mut cfg = Config::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| HarnessError::Config { origin: origin.to_string(), line: n + 1, reason };
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected key = value".into()))?;
            cfg.set(key.trim(), value.trim()).map_err(err)?;
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, v: &str) -> Result<(), String> {
        match key {
            "sm_cap" => {
                let cap: usize = parse(v)?;
                if !(1..=5).contains(&cap) {
                    return Err(format!("sm_cap must lie in 1..=5, got {cap}"));
                }
                self.engines.sm_cap = cap;
            }
            "sm_pairing" => {
                self.engines.sm_pairing = match v {
                    "literal" => Pairing::Literal,
                    "attached" => Pairing::Attached,
                    _ => return Err(format!("sm_pairing: expected literal or attached, got `{v}`")),
                }
            }
            "distance_tie" => {
                self.engines.distance_tie = match v {
                    "higher" => DistanceTie::Higher,
                    "lower" => DistanceTie::Lower,
                    _ => return Err(format!("distance_tie: expected higher or lower, got `{v}`")),
                }
            }
            "distance_profile" => {
                let p: Vec<f64> = v.split(',').map(|x| parse(x.trim())).collect::<Result<_, _>>()?;
                let [a, b, c] = p[..] else {
                    return Err("distance_profile needs three numbers".into());
                };
                self.engines.distance = WeightProfile::new(a, b, c).map_err(|e| e.to_string())?;
            }
            "grid_resolution" => {
                let r: usize = parse(v)?;
                if r < 50 {
                    return Err(format!("grid_resolution must be at least 50, got {r}"));
                }
                self.resolution = r;
                self.engines.pc.resolution = r;
            }
            "alpha_levels" => {
                let a: usize = parse(v)?;
                if a < 2 {
                    return Err("alpha_levels must be at least 2".into());
                }
                self.engines.pc.alpha_levels = a;
            }
            "pc_codebook" => self.pc_codebook = parse(v)?,
            "reference" => self.reference = parse(v)?,
            "golden_threshold" => {
                let t: f64 = parse(v)?;
                if !(0.0..=1.0).contains(&t) {
                    return Err(format!("golden_threshold must lie in [0, 1], got {t}"));
                }
                self.golden_threshold = t;
            }
            "seed" => self.seed = parse(v)?,
            _ => return Err(format!("unknown key `{key}`")),
        }
        Ok(())
    }
}
