//! The `bw` command-line front end.
//!
//! Machine-readable results go to standard output as `key=value` lines
//! (JSON for `soundness`); diagnostics go to standard error. Exit codes:
//! 0 true/ok, 1 false/failed/not found, 2 usage or input error, 3 node
//! budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::formula::{parse_coalition, parse_formula, Formula};
use crate::game::{load_game, save_game, Game};
use crate::proof::{check_derivation, load_derivation};
use crate::semantics::{EvalOptions, Evaluator};
use crate::validity::{find_countermodel, soundness_suite, Mutation, SearchBounds, SearchError, SuiteParams};

/// Environment variable overriding the countermodel node budget.
pub const NODE_BUDGET_VAR: &str = "BW_NODE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "bw", version, about = "Blameworthiness model checker and proof checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a formula at one play of a game.
    Check {
        game: PathBuf,
        play: usize,
        formula: String,
        /// Treat propositions missing from the valuation as false.
        #[arg(long)]
        lenient: bool,
    },
    /// Least degree at which a coalition is blameable for a formula at a play.
    Degree {
        game: PathBuf,
        play: usize,
        /// Coalition such as `{a1,a2}`.
        coalition: String,
        formula: String,
        #[arg(long)]
        lenient: bool,
    },
    /// Check random axiom instances in random games; prints a JSON report.
    Soundness {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Modal depth cap for formulas in schema slots.
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Inject a fault: swap-monotonicity, drop-phi-conjunct or uniform-tax.
        #[arg(long)]
        mutate: Option<String>,
        /// Directory for counterexample files.
        #[arg(long, default_value = "bw-counterexamples")]
        out: PathBuf,
    },
    /// Search small games for a play falsifying a formula.
    ///
    /// Finding none only means there is no countermodel within the bounds.
    Countermodel {
        formula: String,
        #[arg(long, default_value_t = 2)]
        max_agents: usize,
        #[arg(long, default_value_t = 2)]
        max_actions: usize,
        #[arg(long, default_value_t = 2)]
        max_outcomes: usize,
        #[arg(long, default_value_t = 4)]
        max_plays: usize,
        /// Candidate budget; defaults to $BW_NODE_BUDGET, then 5000000.
        #[arg(long)]
        budget: Option<u64>,
        /// Where to write the countermodel game.
        #[arg(long, default_value = "countermodel.game.json")]
        out: PathBuf,
    },
    /// Check a derivation file.
    Prove { derivation: PathBuf },
    /// Reprint a formula in canonical form.
    Fmt { formula: String },
}

/// Runs `bw` with `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure(i32, String);

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure(2, e.to_string())
}

fn io(e: std::io::Error) -> Failure {
    Failure(2, format!("write failed: {e}"))
}

fn formula(text: &str) -> Result<Formula, Failure> {
    parse_formula(text).map_err(|e| Failure(2, format!("cannot parse formula: {e}")))
}

fn game(path: &PathBuf) -> Result<Game, Failure> {
    load_game(path).map_err(input)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Check {
            game: path,
            play,
            formula: text,
            lenient,
        } => {
            let g = game(&path)?;
            let f = formula(&text)?;
            let mut ev = Evaluator::with_options(
                &g,
                EvalOptions {
                    lenient,
                    mutation: None,
                },
            );
            let holds = ev.eval(play, &f).map_err(input)?;
            writeln!(out, "formula={f}").map_err(io)?;
            writeln!(out, "play={play}").map_err(io)?;
            writeln!(out, "holds={holds}").map_err(io)?;
            if let Formula::Blame(c, s, body) = &f {
                let v = ev.blame_verdict(play, c, s, body).map_err(input)?;
                let degree = v.minimal_degree.map_or("none".to_string(), |d| d.to_string());
                let witness = v.witness.map_or("none".to_string(), |w| w.to_string());
                writeln!(out, "minimal_degree={degree}").map_err(io)?;
                writeln!(out, "witness={witness}").map_err(io)?;
            }
            Ok(if holds { 0 } else { 1 })
        }
        Command::Degree {
            game: path,
            play,
            coalition,
            formula: text,
            lenient,
        } => {
            let g = game(&path)?;
            let c = parse_coalition(&coalition).map_err(|e| Failure(2, format!("cannot parse coalition: {e}")))?;
            let f = formula(&text)?;
            let mut ev = Evaluator::with_options(
                &g,
                EvalOptions {
                    lenient,
                    mutation: None,
                },
            );
            if !ev.eval(play, &f).map_err(input)? {
                writeln!(out, "not blameable: φ false here").map_err(io)?;
                return Ok(1);
            }
            match ev.prevention_cost(&c, &f).map_err(input)? {
                Some(p) => {
                    writeln!(out, "minimal_degree={}", p.cost).map_err(io)?;
                    writeln!(out, "witness={}", p.witness).map_err(io)?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "not blameable: no preventing profile").map_err(io)?;
                    Ok(1)
                }
            }
        }
        Command::Soundness {
            trials,
            seed,
            depth,
            mutate,
            out: dir,
        } => {
            let mutation = mutate.map(|m| m.parse::<Mutation>()).transpose().map_err(input)?;
            let params = SuiteParams {
                trials,
                seed,
                max_depth: depth,
                mutation,
                persist_dir: Some(dir),
                ..SuiteParams::default()
            };
            let report = soundness_suite(&params).map_err(input)?;
            writeln!(out, "{}", report.to_json()).map_err(io)?;
            writeln!(
                err,
                "{} trials, {} instances, {} violations",
                report.trials, report.instances, report.violations
            )
            .map_err(io)?;
            if let Some(first) = report.counterexamples.first().and_then(|c| c.files.as_ref()) {
                writeln!(err, "first counterexample: {first}.game.json").map_err(io)?;
            }
            Ok(if report.is_sound() { 0 } else { 1 })
        }
        Command::Countermodel {
            formula: text,
            max_agents,
            max_actions,
            max_outcomes,
            max_plays,
            budget,
            out: path,
        } => {
            let f = formula(&text)?;
            let budget = match budget {
                Some(b) => b,
                None => match std::env::var(NODE_BUDGET_VAR) {
                    Ok(v) => v.trim().parse().map_err(|_| {
                        Failure(
                            2,
                            format!("{NODE_BUDGET_VAR} must be a non-negative integer, got `{v}`"),
                        )
                    })?,
                    Err(_) => SearchBounds::DEFAULT_NODE_BUDGET,
                },
            };
            let bounds = SearchBounds {
                max_agents,
                max_actions,
                max_outcomes,
                max_plays,
                node_budget: budget,
                ..SearchBounds::for_formula(&f)
            };
            match find_countermodel(&f, &bounds) {
                Ok(Some(cm)) => {
                    save_game(&cm.game, &path).map_err(input)?;
                    writeln!(out, "found=true").map_err(io)?;
                    writeln!(out, "formula={f}").map_err(io)?;
                    writeln!(out, "play={}", cm.play).map_err(io)?;
                    writeln!(out, "game={}", path.display()).map_err(io)?;
                    writeln!(out, "nodes={}", cm.nodes).map_err(io)?;
                    Ok(0)
                }
                Ok(None) => {
                    writeln!(out, "found=false").map_err(io)?;
                    writeln!(out, "formula={f}").map_err(io)?;
                    writeln!(err, "no countermodel within the bounds (this does not prove validity)").map_err(io)?;
                    Ok(1)
                }
                Err(e @ SearchError::BudgetExceeded { .. }) => Err(Failure(3, e.to_string())),
                Err(e) => Err(input(e)),
            }
        }
        Command::Prove { derivation } => {
            let d = load_derivation(&derivation).map_err(input)?;
            match check_derivation(&d) {
                Ok(_) => {
                    writeln!(out, "ok: {} lines, conclusion {}", d.lines.len(), d.conclusion).map_err(io)?;
                    Ok(0)
                }
                Err(e) => {
                    writeln!(out, "{e}").map_err(io)?;
                    Ok(1)
                }
            }
        }
        Command::Fmt { formula: text } => {
            writeln!(out, "{}", formula(&text)?).map_err(io)?;
            Ok(0)
        }
    }
}
