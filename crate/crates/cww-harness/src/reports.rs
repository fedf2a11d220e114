//! Statistics derived from a comparison table. The perceptual-computing
//! column of every report is the table's reference column.

use std::collections::BTreeMap;

use cww_datasets::{Phase, PowerTable};
use cww_engines::Engine;

use crate::comparison::{Cell, ComparisonRow, ComparisonTable, Group};
use crate::render::{f2, Table};
use crate::HarnessError;

fn challengers(t: &ComparisonTable) -> Vec<Engine> {
    t.engines.iter().copied().filter(|e| *e != Engine::Pc).collect()
}

fn column(row: &ComparisonRow, e: Engine) -> Option<Cell> {
    if e == Engine::Pc {
        row.reference
    } else {
        row.cell(e)
    }
}

fn mean(xs: &[f64]) -> Option<f64> {
    (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MismatchEntry {
    pub engine: Engine,
    pub game: String,
    pub phase: Phase,
    pub count: usize,
    pub total: usize,
    /// Counts among equal-weight and differential-weight users.
    pub by_group: [usize; 2],
}

impl MismatchEntry {
    pub fn percent(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            100.0 * self.count as f64 / self.total as f64
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MismatchReport {
    pub entries: Vec<MismatchEntry>,
}

impl MismatchReport {
    pub fn get(&self, engine: Engine, game: &str, phase: Phase) -> Option<&MismatchEntry> {
        self.entries.iter().find(|e| e.engine == engine && e.game == game && e.phase == phase)
    }

    pub fn group_totals(&self) -> [usize; 2] {
        self.entries.iter().fold([0, 0], |acc, e| [acc[0] + e.by_group[0], acc[1] + e.by_group[1]])
    }

    /// How many more failures group 2 has than group 1, in percent.
    pub fn group_ratio(&self) -> Option<f64> {
        let [g1, g2] = self.group_totals();
        (g1 > 0).then(|| 100.0 * (g2 as f64 - g1 as f64) / g1 as f64)
    }

    pub fn to_table(&self) -> Table {
        let mut t = Table::new(
            "Cases where an engine differs from perceptual computing",
            &["game", "engine", "phase", "count", "total", "percent", "group1", "group2"],
        );
        for e in &self.entries {
            t.push(vec![
                e.game.clone(),
                e.engine.label().into(),
                e.phase.code().into(),
                e.count.to_string(),
                e.total.to_string(),
                format!("{:.0}", e.percent()),
                e.by_group[0].to_string(),
                e.by_group[1].to_string(),
            ]);
        }
        let [g1, g2] = self.group_totals();
        t.push(vec!["total".into(), String::new(), String::new(), (g1 + g2).to_string(), String::new(), String::new(), g1.to_string(), g2.to_string()]);
        if let (Some(r), true) = (self.group_ratio(), g2 > 0) {
            t.note(format!("group 2 has {r:.2}% more cases than group 1"));
        }
        t
    }
}

/// Counts, per engine, game and phase, the rows whose choice differs from the
/// reference column. Rows without a reference are skipped.
pub fn mismatch_stats(table: &ComparisonTable) -> MismatchReport {
    let mut entries = Vec::new();
    for game in table.games() {
        for e in challengers(table) {
            for phase in Phase::BOTH {
                let mut m = MismatchEntry { engine: e, game: game.into(), phase, count: 0, total: 0, by_group: [0, 0] };
                for r in table.rows_for(game, phase) {
                    let (Some(c), Some(reference)) = (r.cell(e), r.reference) else { continue };
                    m.total += 1;
                    if c.chosen != reference.chosen {
                        m.count += 1;
                        m.by_group[usize::from(r.group == Group::Differential)] += 1;
                    }
                }
                entries.push(m);
            }
        }
    }
    MismatchReport { entries }
}

/// Per game, phase and column averages, plus the reference's improvement over
/// each other engine averaged over games.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AverageReport {
    pub title: String,
    pub averages: BTreeMap<(String, Phase, Engine), f64>,
    pub games: Vec<String>,
    pub engines: Vec<Engine>,
    pub improvements: BTreeMap<(Phase, Engine), f64>,
}

impl AverageReport {
    pub fn get(&self, game: &str, phase: Phase, engine: Engine) -> Option<f64> {
        self.averages.get(&(game.to_string(), phase, engine)).copied()
    }

    pub fn improvement(&self, phase: Phase, engine: Engine) -> Option<f64> {
        self.improvements.get(&(phase, engine)).copied()
    }

    pub fn to_table(&self) -> Table {
        let mut header = vec!["phase".to_string(), "game".to_string()];
        header.extend(self.engines.iter().map(|e| e.label().to_string()));
        let others: Vec<Engine> = self.engines.iter().copied().filter(|e| *e != Engine::Pc).collect();
        header.extend(others.iter().map(|e| format!("improvement_vs_{}", e.label())));
        let mut t = Table { title: self.title.clone(), header, ..Table::default() };
        for phase in Phase::BOTH {
            for (k, g) in self.games.iter().enumerate() {
                let mut row = vec![phase.code().to_string(), g.clone()];
                row.extend(self.engines.iter().map(|&e| self.get(g, phase, e).map(f2).unwrap_or_default()));
                // pooled improvements sit on the phase's first row
                row.extend(others.iter().map(|&e| match (k, self.improvement(phase, e)) {
                    (0, Some(v)) => f2(v),
                    _ => String::new(),
                }));
                t.push(row);
            }
        }
        t.note("improvements are simple means of the per-game percentages over all games");
        t
    }

    /// Series for plotting: one per column, x = game/phase.
    pub fn plot_data(&self) -> Table {
        let mut t = Table::new("", &["series", "x", "y"]);
        for &e in &self.engines {
            for phase in Phase::BOTH {
                for g in &self.games {
                    if let Some(y) = self.get(g, phase, e) {
                        t.push(vec![e.label().into(), format!("{g}/{}", phase.code()), format!("{y:.4}")]);
                    }
                }
            }
        }
        t
    }
}

fn averages(
    table: &ComparisonTable,
    title: &str,
    value: &dyn Fn(&ComparisonRow, Cell) -> Result<Option<f64>, HarnessError>,
    improvement: fn(reference: f64, other: f64) -> f64,
) -> Result<AverageReport, HarnessError> {
    let mut engines = vec![Engine::Pc];
    engines.extend(challengers(table));
    let games: Vec<String> = table.games().into_iter().map(String::from).collect();
    let mut rep = AverageReport { title: title.into(), games: games.clone(), engines: engines.clone(), ..AverageReport::default() };
    for g in &games {
        for phase in Phase::BOTH {
            for &e in &engines {
                let mut xs = Vec::new();
                for r in table.rows_for(g, phase) {
                    if let Some(c) = column(r, e) {
                        if let Some(v) = value(r, c)? {
                            xs.push(v);
                        }
                    }
                }
                if let Some(m) = mean(&xs) {
                    rep.averages.insert((g.clone(), phase, e), m);
                }
            }
        }
    }
    for phase in Phase::BOTH {
        for &e in &engines[1..] {
            let per_game: Vec<f64> = games
                .iter()
                .filter_map(|g| Some(improvement(rep.get(g, phase, Engine::Pc)?, rep.get(g, phase, e)?)))
                .collect();
            if let Some(m) = mean(&per_game) {
                rep.improvements.insert((phase, e), m);
            }
        }
    }
    Ok(rep)
}

fn watts(power: &PowerTable, r: &ComparisonRow, c: Cell) -> Result<f64, HarnessError> {
    power
        .watts(&r.game, c.chosen)
        .ok_or_else(|| HarnessError::Usage(format!("no power measurement for {} at {}", r.game, c.chosen)))
}

/// Mean power at the recommended frequency. Improvements are
/// `100 (other - reference) / reference`: negative when the other engine
/// draws less power.
pub fn power_report(table: &ComparisonTable, power: &PowerTable) -> Result<AverageReport, HarnessError> {
    averages(table, "Average power at the recommended frequency (W)", &|r, c| watts(power, r, c).map(Some), |p, o| {
        100.0 * (o - p) / p
    })
}

/// Mean satisfaction index (1..5). Improvements are
/// `100 (reference - other) / other`.
pub fn satisfaction_report(table: &ComparisonTable) -> Result<AverageReport, HarnessError> {
    averages(table, "Average satisfaction index", &|_, c| Ok(c.satisfaction.map(|s| s as f64)), |p, o| {
        100.0 * (p - o) / o
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupEntry {
    pub game: String,
    pub engine: Engine,
    pub phase: Phase,
    /// Per group; always zero for perceptual computing.
    pub failures: [usize; 2],
    pub power: [Option<f64>; 2],
    pub satisfaction: [Option<f64>; 2],
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GroupReport {
    pub entries: Vec<GroupEntry>,
}

impl GroupReport {
    pub fn get(&self, game: &str, engine: Engine, phase: Phase) -> Option<&GroupEntry> {
        self.entries.iter().find(|e| e.game == game && e.engine == engine && e.phase == phase)
    }

    pub fn failure_totals(&self) -> [usize; 2] {
        self.entries.iter().fold([0, 0], |a, e| [a[0] + e.failures[0], a[1] + e.failures[1]])
    }

    /// Sum of per-entry average power, per group.
    pub fn power_totals(&self) -> [f64; 2] {
        let sum = |k: usize| self.entries.iter().filter_map(|e| e.power[k]).sum();
        [sum(0), sum(1)]
    }

    /// Mean of per-entry average satisfaction, per group.
    pub fn satisfaction_means(&self) -> [Option<f64>; 2] {
        let m = |k: usize| mean(&self.entries.iter().filter_map(|e| e.satisfaction[k]).collect::<Vec<_>>());
        [m(0), m(1)]
    }

    pub fn to_table(&self) -> Table {
        let mut t = Table::new(
            "Equal-weight (group 1) and differential-weight (group 2) users",
            &["game", "engine", "phase", "fail_g1", "fail_g2", "power_g1", "power_g2", "sat_g1", "sat_g2"],
        );
        let opt = |x: Option<f64>| x.map(f2).unwrap_or_default();
        for e in &self.entries {
            t.push(vec![
                e.game.clone(),
                e.engine.label().into(),
                e.phase.code().into(),
                e.failures[0].to_string(),
                e.failures[1].to_string(),
                opt(e.power[0]),
                opt(e.power[1]),
                opt(e.satisfaction[0]),
                opt(e.satisfaction[1]),
            ]);
        }
        let [f1, f2_] = self.failure_totals();
        let [p1, p2] = self.power_totals();
        let [s1, s2] = self.satisfaction_means();
        t.push(vec![
            "total".into(),
            String::new(),
            String::new(),
            f1.to_string(),
            f2_.to_string(),
            f2(p1),
            f2(p2),
            opt(s1),
            opt(s2),
        ]);
        t
    }
}

pub fn group_analysis(table: &ComparisonTable, power: Option<&PowerTable>) -> Result<GroupReport, HarnessError> {
    let mut engines = vec![Engine::Pc];
    engines.extend(challengers(table));
    let mut entries = Vec::new();
    for game in table.games() {
        for &e in &engines {
            for phase in Phase::BOTH {
                let mut entry = GroupEntry {
                    game: game.into(),
                    engine: e,
                    phase,
                    failures: [0, 0],
                    power: [None, None],
                    satisfaction: [None, None],
                };
                for (k, g) in Group::BOTH.into_iter().enumerate() {
                    let (mut pw, mut sat) = (Vec::new(), Vec::new());
                    for r in table.rows_for(game, phase).filter(|r| r.group == g) {
                        let Some(c) = column(r, e) else { continue };
                        if e != Engine::Pc && r.reference.is_some_and(|x| x.chosen != c.chosen) {
                            entry.failures[k] += 1;
                        }
                        if let Some(p) = power {
                            pw.push(watts(p, r, c)?);
                        }
                        sat.extend(c.satisfaction.map(|s| s as f64));
                    }
                    entry.power[k] = mean(&pw);
                    entry.satisfaction[k] = mean(&sat);
                }
                entries.push(entry);
            }
        }
    }
    Ok(GroupReport { entries })
}
