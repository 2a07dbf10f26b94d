use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use vinberg::jordan::SamplingConfig;

mod commands;
mod input;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed input; exit code 2.
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Compute(vinberg::Error),
}

impl From<vinberg::Error> for CliError {
    fn from(e: vinberg::Error) -> Self {
        use vinberg::Error::*;
        match e {
            Parse(_) | UnsupportedType(_) | InvalidLabels(_) | AlgebraMismatch(..) | Dimension(_) | NotHomogeneous(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Compute(e),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Budget {
    /// G2 and F4 rows only.
    Small,
    /// Every row, including E6, E7 and E8.
    Full,
}

#[derive(Parser, Debug)]
#[command(name = "vinberg", version, about = "Invariants of Z/m-graded semisimple Lie algebras")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random samples per randomized search.
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,
    /// Random coordinates are drawn from [-B, B].
    #[arg(long, global = true, default_value_t = 1000)]
    coeff_bound: i64,
    #[arg(long, global = true, value_enum, default_value_t = Budget::Small)]
    budget: Budget,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded dimensions, rank and nilcone dimension of a Kac-diagram grading.
    Grade {
        /// Root system type, e.g. G2; may also carry the labels as "G2: s=[1,0,1]".
        r#type: String,
        /// Labels, e.g. s=[1,0,1], node 0 first.
        labels: Option<String>,
    },
    /// Check rank and nilcone columns of table fixtures.
    VerifyTables {
        /// TOML fixture file; the bundled tables when omitted.
        fixture: Option<PathBuf>,
        /// Only rows whose labels contain this text.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Jordan decomposition, centralizers and regularity of an element.
    Analyze {
        element: PathBuf,
        /// Fail unless the element lies in degree 1.
        #[arg(long)]
        degree_one: bool,
    },
    /// Graded sl2-triple through a nilpotent element of degree 1.
    Sl2Triple {
        element: PathBuf,
        /// Work inside the centralizer of the semisimple part of this element.
        #[arg(long = "in")]
        within: Option<PathBuf>,
    },
    /// Slice-induction witness for the pair (x, y).
    SliceInduction { x: PathBuf, y: PathBuf },
    /// Checks on the E8 trivector model.
    E8 {
        #[arg(value_enum)]
        which: E8Check,
    },
    /// Cyclotomic mode systems.
    Modes {
        #[command(subcommand)]
        command: ModesCommand,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum E8Check {
    Dims,
    Slice,
    Glue,
    Modes,
}

#[derive(Subcommand, Debug)]
enum ModesCommand {
    /// Solve M(w)λ = n from a JSON request {"m": .., "n": [..]} or from flags.
    Solve {
        request: Option<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        n: Option<Vec<i64>>,
    },
}

/// A command's result: the report and whether every check passed.
pub struct Outcome {
    pub report: Value,
    pub pass: bool,
    pub text: Option<String>,
}

impl Outcome {
    pub fn new<T: Serialize>(report: &T, pass: bool) -> Self {
        Outcome { report: serde_json::to_value(report).expect("reports serialize"), pass, text: None }
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }
}

fn render_text(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                _ => format!("{k}: {v}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        _ => v.to_string(),
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let cfg = SamplingConfig { seed: cli.seed, trials: cli.trials, coeff_bound: cli.coeff_bound };
    if cli.coeff_bound < 1 {
        return Err(CliError::Input("--coeff-bound must be positive".into()));
    }
    match cli.command {
        Command::Grade { r#type, labels } => commands::grade(&r#type, labels.as_deref(), &cfg),
        Command::VerifyTables { fixture, filter, workers } => {
            commands::verify_tables(fixture.as_deref(), filter.as_deref(), cli.budget, workers, &cfg)
        }
        Command::Analyze { element, degree_one } => commands::analyze(&element, degree_one, &cfg),
        Command::Sl2Triple { element, within } => commands::sl2_triple(&element, within.as_deref()),
        Command::SliceInduction { x, y } => commands::slice_induction(&x, &y),
        Command::E8 { which } => commands::e8(which),
        Command::Modes { command: ModesCommand::Solve { request, m, n } } => commands::modes_solve(request.as_deref(), m, n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            let body = if json {
                serde_json::to_string_pretty(&out.report).expect("value serializes")
            } else {
                out.text.unwrap_or_else(|| render_text(&out.report))
            };
            // a closed pipe is not an error
            let _ = writeln!(std::io::stdout(), "{body}");
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Input(_) => 2,
                CliError::Compute(_) => 1,
            })
        }
    }
}
