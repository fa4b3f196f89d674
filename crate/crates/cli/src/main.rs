//! `braidlift`: command-line front end.

mod commands;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use braidlift_core::{BraidWord, Error, LabelTuple};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::Report;

#[derive(Parser)]
#[command(
    name = "braidlift",
    version,
    about = "Lift coloured braids to mapping classes of simple branched covers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args)]
struct Common {
    /// Degree of the cover (optional if the labels carry a `d=<int>` header)
    #[arg(long)]
    d: Option<usize>,
    /// Label tuple, e.g. "(1 2),(2 3)"
    #[arg(long)]
    labels: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Hurwitz action of a braid word on the labels
    Hurwitz {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        braid: String,
    },
    /// Whether the coloured braid returns to its initial labels
    Liftable {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        braid: String,
    },
    /// Topology and spine of the branched cover
    CoverInfo {
        #[command(flatten)]
        common: Common,
    },
    /// Lift of a coloured braid as a spine substitution
    Lift {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        braid: String,
    },
    /// Canonical label tuple and cover equivalence
    Canonical {
        #[command(flatten)]
        common: Common,
        /// Second tuple to test for an equivalent cover
        #[arg(long)]
        compare: Option<String>,
    },
    /// Hurwitz orbit of the labels
    Orbit {
        #[command(flatten)]
        common: Common,
    },
    /// X_M, or a ball of X_G when --radius is given
    Complex {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Validity, lift and covering checks
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        braid: Option<String>,
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
    /// Remove crossings between equally labelled strands
    Rewrite {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        braid: String,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn parse_labels(common: &Common) -> Result<LabelTuple, Failure> {
    Ok(LabelTuple::parse(&common.labels, common.d)?)
}

fn parse_braid(text: &str, tau: &LabelTuple) -> Result<BraidWord, Failure> {
    Ok(BraidWord::parse(text, tau.len())?)
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Hurwitz { common, .. }
        | Command::Liftable { common, .. }
        | Command::CoverInfo { common }
        | Command::Lift { common, .. }
        | Command::Canonical { common, .. }
        | Command::Orbit { common }
        | Command::Complex { common, .. }
        | Command::Verify { common, .. }
        | Command::Rewrite { common, .. } => common,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if common(&cli.command).format == Format::Dot && !matches!(cli.command, Command::Complex { .. })
    {
        return Err(Failure::Usage(
            "--format dot is only available for `complex`".into(),
        ));
    }
    let (common, report) = match &cli.command {
        Command::Hurwitz { common, braid } => {
            let tau = parse_labels(common)?;
            (common, commands::hurwitz(&tau, &parse_braid(braid, &tau)?)?)
        }
        Command::Liftable { common, braid } => {
            let tau = parse_labels(common)?;
            (
                common,
                commands::liftable(&tau, &parse_braid(braid, &tau)?)?,
            )
        }
        Command::CoverInfo { common } => (common, commands::cover_info(&parse_labels(common)?)?),
        Command::Lift { common, braid } => {
            let tau = parse_labels(common)?;
            (common, commands::lift(&tau, &parse_braid(braid, &tau)?)?)
        }
        Command::Canonical { common, compare } => {
            let tau = parse_labels(common)?;
            let other = compare
                .as_deref()
                .map(|c| LabelTuple::parse(c, common.d.or(Some(tau.degree()))))
                .transpose()?;
            (common, commands::canonical(&tau, other.as_ref())?)
        }
        Command::Orbit { common } => (common, commands::orbit(&parse_labels(common)?)?),
        Command::Complex { common, radius } => {
            (common, commands::complex(&parse_labels(common)?, *radius)?)
        }
        Command::Verify {
            common,
            braid,
            radius,
        } => {
            let tau = parse_labels(common)?;
            let word = braid.as_deref().map(|b| parse_braid(b, &tau)).transpose()?;
            (common, commands::verify(&tau, word.as_ref(), *radius)?)
        }
        Command::Rewrite { common, braid } => {
            let tau = parse_labels(common)?;
            (common, commands::rewrite(&tau, &parse_braid(braid, &tau)?)?)
        }
    };
    emit(common, &report)?;
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn emit(common: &Common, report: &Report) -> Result<(), Failure> {
    let body = match common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => report.text.clone(),
        Format::Dot => report.dot.clone().expect("checked before dispatch"),
    };
    match &common.out {
        Some(path) => {
            fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("{}", json!({ "error": "io", "message": msg }));
            ExitCode::from(1)
        }
        Err(Failure::Checks) => {
            eprintln!(
                "{}",
                json!({ "error": "checks_failed", "message": "verification reported failures" })
            );
            ExitCode::from(1)
        }
    }
}
