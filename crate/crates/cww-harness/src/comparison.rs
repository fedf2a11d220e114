//! Replays a corpus through the engines and lines the results up against the
//! golden tables.

use std::collections::BTreeMap;

use cww_datasets::{Freq, Mode, Phase};
use cww_engines::pc::{pc_aggregate, pc_satisfaction};
use cww_engines::{feedback_of, Engine, Recommendation};

use crate::config::{Config, Reference};
use crate::dataset::{Experiment, Method};
use crate::HarnessError;

/// Users with equal criterion weights form group 1, the rest group 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Equal,
    Differential,
}

impl Group {
    pub const BOTH: [Group; 2] = [Group::Equal, Group::Differential];

    pub fn label(self) -> &'static str {
        match self {
            Group::Equal => "group1",
            Group::Differential => "group2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub chosen: Freq,
    /// Satisfaction term 1..5 where the engine defines one.
    pub satisfaction: Option<usize>,
}

impl From<&Recommendation> for Cell {
    fn from(r: &Recommendation) -> Self {
        Cell { chosen: r.chosen, satisfaction: r.satisfaction }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub user: u32,
    pub game: String,
    pub phase: Phase,
    pub group: Group,
    /// Perceptual computing appears here under the configured codebook.
    pub cells: BTreeMap<Engine, Cell>,
    /// Perceptual computing under every codebook.
    pub pc_by_method: Vec<(Method, Cell)>,
    /// The recommendation treated as correct.
    pub reference: Option<Cell>,
}

impl ComparisonRow {
    pub fn cell(&self, e: Engine) -> Option<Cell> {
        self.cells.get(&e).copied()
    }

    /// True when every codebook led perceptual computing to the same frequency.
    pub fn methods_agree(&self) -> bool {
        self.pc_by_method.windows(2).all(|w| w[0].1.chosen == w[1].1.chosen)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    pub mode: Mode,
    pub engines: Vec<Engine>,
    pub reference: Reference,
    /// Ordered by user, then game in corpus order, then phase.
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonTable {
    pub fn games(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.game.as_str()) {
                out.push(&r.game);
            }
        }
        out
    }

    pub fn rows_for<'a>(&'a self, game: &'a str, phase: Phase) -> impl Iterator<Item = &'a ComparisonRow> + 'a {
        self.rows.iter().filter(move |r| r.game == game && r.phase == phase)
    }

    /// Rows where the codebooks disagree on the perceptual-computing choice.
    pub fn method_disagreements(&self) -> Vec<&ComparisonRow> {
        self.rows.iter().filter(|r| !r.methods_agree()).collect()
    }
}

pub fn run_comparison(exp: &Experiment, engines: &[Engine], cfg: &Config) -> Result<ComparisonTable, HarnessError> {
    let mut rows = Vec::new();
    let games = exp.corpus.games();
    if !engines.is_empty() {
        for s in exp.corpus.sessions() {
            let wrap = |source| HarnessError::Engine { user: s.user, game: s.game.to_string(), phase: s.phase, source };
            let fb = feedback_of(&s);
            let mut cells = BTreeMap::new();
            let mut pc_by_method = Vec::new();
            for &e in engines {
                if e == Engine::Pc {
                    for m in Method::ALL {
                        let r = e.recommend(&fb, &s.weights, Some(exp.codebook(m)), &cfg.engines).map_err(wrap)?;
                        pc_by_method.push((m, Cell::from(&r)));
                    }
                    let own = pc_by_method.iter().find(|(m, _)| *m == cfg.pc_codebook).expect("every method ran");
                    cells.insert(e, own.1);
                } else {
                    cells.insert(e, Cell::from(&e.recommend(&fb, &s.weights, None, &cfg.engines).map_err(wrap)?));
                }
            }
            let reference = match cfg.reference {
                Reference::Computed => cells.get(&Engine::Pc).copied(),
                Reference::Published => match exp.golden.get(s.user, s.game, s.phase, Engine::Pc.label()) {
                    None => None,
                    Some(f) => {
                        let cb = exp.codebook(cfg.pc_codebook);
                        let satisfaction = match (cb.criterion(cww_datasets::vocab::SATISFACTION_NAME), fb.iter().find(|x| x.frequency == f)) {
                            (Some(_), Some(at)) => {
                                let agg = pc_aggregate(&at.words, &s.weights, cb, &cfg.engines.pc).map_err(wrap)?;
                                Some(pc_satisfaction(&agg, cb).map_err(wrap)?)
                            }
                            _ => None,
                        };
                        Some(Cell { chosen: f, satisfaction })
                    }
                },
            };
            let group = if s.weights.is_equal() { Group::Equal } else { Group::Differential };
            rows.push(ComparisonRow {
                user: s.user,
                game: s.game.to_string(),
                phase: s.phase,
                group,
                cells,
                pc_by_method,
                reference,
            });
        }
    }
    let game_pos = |g: &str| games.iter().position(|x| *x == g).unwrap_or(usize::MAX);
    rows.sort_by(|a, b| (a.user, game_pos(&a.game), a.phase).cmp(&(b.user, game_pos(&b.game), b.phase)));
    Ok(ComparisonTable { mode: exp.corpus.mode, engines: engines.to_vec(), reference: cfg.reference, rows })
}

/// Rule that produced an engine's choice, quoted in the discrepancy log.
pub fn governing_rule(e: Engine) -> &'static str {
    match e {
        Engine::Pc => "interval weighted average of word sets; highest centroid mean, lowest frequency on ties",
        Engine::Ep => "mean of (weighted) word triangles, unnormalized; nearest distance term, higher term on ties; lowest frequency on ties",
        Engine::Sm => "r = min(cap, i + round(w(j - i))) folded over descending terms and weights; lowest frequency on ties",
        Engine::Ttp => "beta = sum(I_s I_w) / sum(I_w), (round beta, beta - round beta); lexicographic maximum, lowest frequency on ties",
    }
}

/// Golden cells known to contradict the worked discussion of the same session.
const DOCUMENTED: &[(u32, &str, Phase, Engine, &str)] = &[
    (22, "subway_surfers", Phase::Training, Engine::Sm, "worked text aggregates F1, F2, F6 to d3, d3, d4, which selects F6"),
    (22, "subway_surfers", Phase::Training, Engine::Ttp, "worked text's 2-tuples for F1, F2, F6 rank F6 highest"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    pub user: u32,
    pub game: String,
    pub phase: Phase,
    pub engine: Engine,
    pub ours: Freq,
    pub published: Freq,
    pub rule: &'static str,
    /// Why the published cell is suspect, when known.
    pub documented: Option<&'static str>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Agreement {
    pub engine: Engine,
    pub agree: usize,
    pub total: usize,
}

impl Agreement {
    pub fn rate(&self) -> f64 {
        if self.total == 0 {
            1.0
        } else {
            self.agree as f64 / self.total as f64
        }
    }
}

/// Every engine cell that has a golden counterpart and differs from it.
pub fn discrepancies(table: &ComparisonTable, golden: &cww_datasets::GoldenTable) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    for r in &table.rows {
        for (&e, c) in &r.cells {
            let Some(p) = golden.get(r.user, &r.game, r.phase, e.label()) else { continue };
            if p != c.chosen {
                let documented = DOCUMENTED
                    .iter()
                    .find(|d| d.0 == r.user && d.1 == r.game && d.2 == r.phase && d.3 == e)
                    .map(|d| d.4);
                out.push(Discrepancy {
                    user: r.user,
                    game: r.game.clone(),
                    phase: r.phase,
                    engine: e,
                    ours: c.chosen,
                    published: p,
                    rule: governing_rule(e),
                    documented,
                });
            }
        }
    }
    out
}

pub fn golden_agreement(table: &ComparisonTable, golden: &cww_datasets::GoldenTable) -> Vec<Agreement> {
    table
        .engines
        .iter()
        .map(|&e| {
            let mut a = Agreement { engine: e, agree: 0, total: 0 };
            for r in &table.rows {
                if let (Some(c), Some(p)) = (r.cell(e), golden.get(r.user, &r.game, r.phase, e.label())) {
                    a.total += 1;
                    a.agree += usize::from(c.chosen == p);
                }
            }
            a
        })
        .collect()
}
