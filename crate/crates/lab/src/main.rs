use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use verma_core::Error;
use verma_lab::fixtures::{self, TildeFixture};
use verma_lab::render::Table;
use verma_lab::report::{self, ReportConfig};
use verma_lab::suites::{self, QMode, TILDE_BOUND};
use verma_lab::{configure_threads, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "verma-lab", version, about = "Exact verification suites for sl2 weight modules and friends")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Index sets, dimension audit and Casimir blocks of L_n ⊗ V_0.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Highest-weight vector of weight s in L_n ⊗ V_0.
    Hwv {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },
    /// Generator of the projective summand T_s.
    Projgen {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },
    VerifyHecke {
        /// Largest n to check (capped per model).
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, value_enum, default_value_t = QMode::Both)]
        q_mode: QMode,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    VerifyHeisenberg {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Regenerate the frozen tilde table before comparing.
        #[arg(long)]
        refreeze: bool,
    },
    VerifyAdelman {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Regenerate the frozen interpretation choice before comparing.
        #[arg(long)]
        refreeze: bool,
    },
    /// Pseudoadjoint identity on V_0, V_s (s ∈ I) and T_r (r ∈ I').
    VerifyPseudoadjoint {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = report::PSEUDOADJOINT_MARGIN)]
        margin: usize,
    },
    /// Full sweep over n ≤ n-max plus every algebra suite.
    Report {
        #[arg(long, allow_hyphen_values = true)]
        n_max: i64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        refreeze: bool,
    },
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parity { .. } | Error::NotInIndexSet { .. } | Error::OutOfRange(_) => Failure::Usage(e.to_string()),
            _ => Failure::Run(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

fn nonnegative(name: &str, v: i64) -> Result<u32, Failure> {
    u32::try_from(v).map_err(|_| Failure::Usage(format!("--{name} must be a nonnegative integer, got {v}")))
}

/// A finished document: serialized form, CSV form and verdict.
struct Outcome {
    json: String,
    table: Table,
    passed: bool,
}

impl Outcome {
    fn new<T: Serialize>(doc: &T, table: Table, passed: bool) -> Result<Self, Failure> {
        let mut json = serde_json::to_string_pretty(doc).map_err(|e| Failure::Run(e.to_string()))?;
        json.push('\n');
        Ok(Outcome { json, table, passed })
    }
}

fn refreeze_tilde() -> Result<(), Failure> {
    let path = fixtures::store_tilde(&TildeFixture { bound: TILDE_BOUND, table: suites::tilde_table() })?;
    eprintln!("refroze {}", path.display());
    Ok(())
}

fn refreeze_adelman(seed: u64, trials: usize) -> Result<(), Failure> {
    let cfg = verma_core::adelman::AdelmanConfig { trials, ..Default::default() };
    let rep = suites::adelman_report(seed, &cfg)?;
    let path = fixtures::store_adelman(&suites::adelman_fixture(&rep))?;
    eprintln!("refroze {}", path.display());
    Ok(())
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Decompose { n, lambda, depth } => {
            let doc = suites::decompose(nonnegative("n", n)?, lambda, depth)?;
            Outcome::new(&doc, doc.table(), doc.passed)
        }
        Command::Hwv { n, s } => {
            let doc = suites::hwv(nonnegative("n", n)?, s)?;
            Outcome::new(&doc, doc.table(), doc.passed)
        }
        Command::Projgen { n, s } => {
            let doc = suites::projgen(nonnegative("n", n)?, s)?;
            Outcome::new(&doc, doc.table(), doc.passed)
        }
        Command::VerifyHecke { n, q_mode, trials, seed } => {
            let n = n.map(|n| nonnegative("n", n)).transpose()?.map(|n| n as usize);
            if n.is_some_and(|n| n < 2) {
                return Err(Failure::Usage("--n must be at least 2".into()));
            }
            let doc = suites::verify_hecke(n, q_mode, trials, seed)?;
            Outcome::new(&doc, doc.table(), doc.passed)
        }
        Command::VerifyHeisenberg { trials, seed, refreeze } => {
            if refreeze {
                refreeze_tilde()?;
            }
            let doc = suites::verify_heisenberg(trials, seed, fixtures::load_tilde().ok().as_ref())?;
            Outcome::new(&doc, doc.table(), doc.passed)
        }
        Command::VerifyAdelman { trials, seed, refreeze } => {
            if refreeze {
                refreeze_adelman(seed, trials)?;
            }
            let doc = suites::verify_adelman(trials, seed, fixtures::load_adelman().ok().as_ref())?;
            Outcome::new(&doc, doc.table(), doc.passed)
        }
        Command::VerifyPseudoadjoint { n, margin } => {
            let doc = suites::pseudoadjoint(nonnegative("n", n)?, margin)?;
            Outcome::new(&doc, doc.table(), doc.passed)
        }
        Command::Report { n_max, seed, trials, refreeze } => {
            let cfg = ReportConfig { trials, ..ReportConfig::new(nonnegative("n-max", n_max)?, seed) };
            if refreeze {
                refreeze_tilde()?;
                refreeze_adelman(seed, cfg.adelman_trials)?;
            }
            let (tilde, adelman) = suites::load_fixtures();
            let doc = report::report(&cfg, tilde.as_ref(), adelman.as_ref())?;
            Outcome::new(&doc, doc.table(), doc.passed)
        }
    }
}

fn emit(out: &OutputArgs, outcome: &Outcome) -> Result<(), Failure> {
    let text = match out.format {
        Format::Json => outcome.json.clone(),
        Format::Csv => outcome.table.to_csv().map_err(|e| Failure::Run(e.to_string()))?,
    };
    match &out.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = run(cli.command).and_then(|o| emit(&cli.out, &o).map(|()| o.passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed; see the report");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
