use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cww_codebook::{parse_codebook, person_fou_sample, validate_with, IntervalPair};
use cww_datasets::{load_feedback, Mode, Phase};
use cww_engines::{feedback_of, Engine};
use cww_harness::comparison::governing_rule;
use cww_harness::dataset::{mode_label, parse_mode};
use cww_harness::render::Table;
use cww_harness::{
    default_data_dir, discrepancies, fuzziness_report, golden_agreement, group_analysis, mismatch_stats, power_report,
    run_comparison, satisfaction_report, Config, Experiment, HarnessError, Method,
};

#[derive(Parser)]
#[command(name = "cww", version, about = "Computing-with-words experiment harness")]
struct Cli {
    /// Directory holding corpus/, codebooks/, golden/ and power.csv.
    #[arg(long, global = true)]
    data: Option<PathBuf>,
    /// key = value configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Codebook checks.
    Codebook {
        #[command(subcommand)]
        action: CodebookCmd,
    },
    /// Person-FOU interval sampling.
    Personfou {
        #[command(subcommand)]
        action: PersonFouCmd,
    },
    /// Run one engine over a corpus file.
    Recommend {
        #[arg(long)]
        engine: Engine,
        #[arg(long)]
        corpus: PathBuf,
        /// Needed by the pc engine.
        #[arg(long)]
        codebook: Option<PathBuf>,
        #[arg(long)]
        user: Option<u32>,
        #[arg(long)]
        game: Option<String>,
        #[arg(long)]
        phase: Option<Phase>,
    },
    /// Replay a corpus through all engines and compare with the golden table.
    Compare {
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(long)]
        out: PathBuf,
    },
    /// Derived statistics.
    Report {
        kind: ReportKind,
        #[arg(long, value_parser = parse_mode, default_value = "single")]
        mode: Mode,
        /// Emit x/y series instead of the table (power and satisfaction).
        #[arg(long)]
        plot_data: bool,
    },
}

#[derive(Subcommand)]
enum CodebookCmd {
    Validate {
        file: PathBuf,
        #[arg(long, default_value_t = 0.05)]
        tolerance: f64,
    },
}

#[derive(Subcommand)]
enum PersonFouCmd {
    Sample {
        /// Bounds of the left end point, `a,b`.
        #[arg(long, value_parser = pair)]
        left: (f64, f64),
        /// Bounds of the right end point, `c,d`.
        #[arg(long, value_parser = pair)]
        right: (f64, f64),
        #[arg(long, default_value_t = 50)]
        n: usize,
        /// Defaults to the configured seed.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    Mismatch,
    Power,
    Satisfaction,
    Fuzziness,
    Groups,
}

fn pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected two numbers separated by a comma")?;
    let p = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("`{x}`: {e}"));
    Ok((p(a)?, p(b)?))
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    ValidationFailed,
    GoldenMismatch,
}

fn emit(t: &Table, f: Format) -> String {
    match f {
        Format::Text => t.to_text(),
        Format::Csv => t.to_csv(),
    }
}

fn write(path: &Path, text: &str) -> Result<(), HarnessError> {
    std::fs::write(path, text).map_err(|source| HarnessError::Io { path: path.display().to_string(), source })
}

fn corpus_mode(path: &Path) -> Result<Mode, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.display().to_string(), source })?;
    let header = text.lines().next().unwrap_or("");
    Ok(if header.contains("w_battery") { Mode::Single } else { Mode::Multi })
}

fn run(cli: Cli) -> Result<Status, HarnessError> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let data = cli.data.clone().unwrap_or_else(default_data_dir);
    match cli.command {
        Command::Codebook { action: CodebookCmd::Validate { file, tolerance } } => {
            let cb = parse_codebook(&file)?;
            let report = validate_with(&cb, tolerance, cfg.resolution);
            print!("{}", report.render());
            Ok(if report.is_clean() { Status::Ok } else { Status::ValidationFailed })
        }
        Command::Personfou { action: PersonFouCmd::Sample { left, right, n, seed } } => {
            let sample = person_fou_sample(&IntervalPair { left, right }, n, seed.unwrap_or(cfg.seed))?;
            let mut t = Table::new("", &["left", "right"]);
            for (l, r) in sample {
                t.push(vec![format!("{l:.4}"), format!("{r:.4}")]);
            }
            print!("{}", emit(&t, cli.format));
            Ok(Status::Ok)
        }
        Command::Recommend { engine, corpus, codebook, user, game, phase } => {
            let corpus = load_feedback(&corpus, corpus_mode(&corpus)?)?;
            let cb = match (&codebook, engine) {
                (Some(p), _) => Some(parse_codebook(p)?),
                (None, Engine::Pc) => return Err(HarnessError::Usage("the pc engine needs --codebook".into())),
                (None, _) => None,
            };
            let mut t = Table::new("", &["user", "game", "phase", "F1", "F2", "F3", "F4", "F5", "F6", "chosen", "satisfaction"]);
            for s in corpus.sessions() {
                if user.is_some_and(|u| u != s.user) || game.as_deref().is_some_and(|g| g != s.game) || phase.is_some_and(|p| p != s.phase) {
                    continue;
                }
                let r = engine
                    .recommend(&feedback_of(&s), &s.weights, cb.as_ref(), &cfg.engines)
                    .map_err(|source| HarnessError::Engine { user: s.user, game: s.game.into(), phase: s.phase, source })?;
                let mut row = vec![s.user.to_string(), s.game.to_string(), s.phase.code().into()];
                for f in cww_datasets::Freq::all() {
                    row.push(r.scores.iter().find(|x| x.0 == f).map(|x| x.1.to_string()).unwrap_or_default());
                }
                row.push(r.chosen.to_string());
                row.push(r.satisfaction.map(|s| s.to_string()).unwrap_or_default());
                t.push(row);
            }
            print!("{}", emit(&t, cli.format));
            Ok(Status::Ok)
        }
        Command::Compare { mode, out } => {
            let exp = Experiment::load(&data, mode)?;
            let table = run_comparison(&exp, &Engine::ALL, &cfg)?;
            std::fs::create_dir_all(&out).map_err(|source| HarnessError::Io { path: out.display().to_string(), source })?;

            let mut header = vec!["user", "game", "phase", "group"];
            header.extend(Engine::ALL.iter().map(|e| e.label()));
            header.extend(["pc_ia", "pc_eia", "pc_hma", "reference"]);
            let mut t = Table::new(&format!("Recommended frequencies ({})", mode_label(mode)), &header);
            for r in &table.rows {
                let mut row = vec![r.user.to_string(), r.game.clone(), r.phase.code().into(), r.group.label().into()];
                row.extend(Engine::ALL.iter().map(|&e| r.cell(e).map(|c| c.chosen.to_string()).unwrap_or_default()));
                row.extend(r.pc_by_method.iter().map(|(_, c)| c.chosen.to_string()));
                row.push(r.reference.map(|c| c.chosen.to_string()).unwrap_or_default());
                t.push(row);
            }
            write(&out.join("comparison.csv"), &t.to_csv())?;

            let mut d = Table::new("Golden-table discrepancies", &["user", "game", "phase", "engine", "ours", "published", "rule", "documented"]);
            let diffs = discrepancies(&table, &exp.golden);
            for x in &diffs {
                d.push(vec![
                    x.user.to_string(),
                    x.game.clone(),
                    x.phase.code().into(),
                    x.engine.label().into(),
                    x.ours.to_string(),
                    x.published.to_string(),
                    x.rule.into(),
                    x.documented.unwrap_or("").into(),
                ]);
            }
            write(&out.join("discrepancies.csv"), &d.to_csv())?;

            let mut s = Table::new("Agreement with the golden table", &["engine", "agree", "total", "rate", "rule"]);
            let agreement = golden_agreement(&table, &exp.golden);
            for a in &agreement {
                s.push(vec![a.engine.label().into(), a.agree.to_string(), a.total.to_string(), format!("{:.3}", a.rate()), governing_rule(a.engine).into()]);
            }
            let split = table.method_disagreements().len();
            s.note(format!("perceptual computing reported with the {} codebook", cfg.pc_codebook));
            s.note(format!("sessions where ia/eia/hma choose different frequencies: {split} of {}", table.rows.len()));
            s.note(format!("discrepancies logged: {} ({} documented)", diffs.len(), diffs.iter().filter(|x| x.documented.is_some()).count()));
            let summary = s.to_text();
            write(&out.join("summary.txt"), &summary)?;
            print!("{summary}");
            let below = agreement.iter().any(|a| a.total > 0 && a.rate() < cfg.golden_threshold);
            Ok(if below { Status::GoldenMismatch } else { Status::Ok })
        }
        Command::Report { kind, mode, plot_data } => {
            let exp = Experiment::load(&data, mode)?;
            let need_power = || {
                exp.power.as_ref().ok_or_else(|| HarnessError::Usage("power measurements exist for the single-person games only".into()))
            };
            let table = match kind {
                ReportKind::Fuzziness => None,
                _ => Some(run_comparison(&exp, &Engine::ALL, &cfg)?),
            };
            let out = match kind {
                ReportKind::Mismatch => mismatch_stats(table.as_ref().expect("ran")).to_table(),
                ReportKind::Power => {
                    let r = power_report(table.as_ref().expect("ran"), need_power()?)?;
                    if plot_data { r.plot_data() } else { r.to_table() }
                }
                ReportKind::Satisfaction => {
                    let r = satisfaction_report(table.as_ref().expect("ran"))?;
                    if plot_data { r.plot_data() } else { r.to_table() }
                }
                ReportKind::Groups => group_analysis(table.as_ref().expect("ran"), exp.power.as_ref())?.to_table(),
                ReportKind::Fuzziness => {
                    let books: Vec<(Method, &cww_codebook::Codebook)> = exp.codebooks.iter().map(|(m, c)| (*m, c)).collect();
                    fuzziness_report(&books, cfg.resolution).to_table()
                }
            };
            print!("{}", emit(&out, cli.format));
            Ok(Status::Ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::ValidationFailed) => ExitCode::from(2),
        Ok(Status::GoldenMismatch) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
