//! `novikov`: build algebras, check identities, compute series and run the prover.

mod commands;
mod document;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CheckSelection, ProveOptions};
use novikov_core::solver::SolverConfig;
use report::{RunReport, Status};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "novikov",
    version,
    about = "Exact Novikov structures on Lie algebras"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, env = "NOVIKOV_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the interchange document of a registered algebra, e.g. `cex13` or `novikov-free3:4`.
    Make {
        name: String,
        /// Output path; the document goes to standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run identity checks. INPUT is a document path, `-`, or a registered name.
    Check {
        input: String,
        /// Every applicable check (the default when none is selected).
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        select: Select,
    },
    /// Lower central, derived and upper central series with their classes.
    Series { input: String },
    /// Run the nonexistence prover on the Lie bracket of INPUT.
    Prove {
        input: String,
        /// Depth of case splits tried when the zero probe fails.
        #[arg(long, default_value_t = 0)]
        case_split_depth: usize,
        /// Shuffle constraint rows with this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Skip feeding affine right-commutation entries back into elimination.
        #[arg(long)]
        no_propagate: bool,
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
        /// Write a found structure as a document.
        #[arg(long)]
        emit_structure: Option<PathBuf>,
    },
    /// Replay a certificate, against its embedded bracket or against ALGEBRA.
    VerifyCert {
        certificate: String,
        #[arg(long)]
        algebra: Option<String>,
    },
}

#[derive(Args, Debug)]
struct Select {
    #[arg(long)]
    lie: bool,
    /// Left-symmetric identity.
    #[arg(long)]
    lsa: bool,
    #[arg(long)]
    novikov: bool,
    /// Commutator of the product equals the bracket.
    #[arg(long)]
    compat: bool,
    /// `L([x,y]) + ad([x,y]) - [ad(x), L(y)] - [L(x), ad(y)] = 0`.
    #[arg(long)]
    opid: bool,
    /// Ideal and center consequences of the Novikov identities.
    #[arg(long)]
    lemmas: bool,
}

fn configure_threads(threads: Option<usize>) -> Result<()> {
    #[cfg(feature = "parallel")]
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn run(cli: &Cli, report: &mut RunReport) -> Result<(Status, Option<String>)> {
    configure_threads(cli.threads)?;
    let status = match &cli.command {
        Command::Make { name, output } => {
            let raw = commands::make(report, name, output.as_deref())?;
            return Ok((Status::Ok, raw));
        }
        Command::Check { input, all, select } => {
            let sel = CheckSelection {
                lie: select.lie,
                lsa: select.lsa,
                novikov: select.novikov,
                compat: select.compat,
                opid: select.opid,
                lemmas: select.lemmas,
            };
            commands::check(report, input, *all, sel)?
        }
        Command::Series { input } => commands::series(report, input)?,
        Command::Prove {
            input,
            case_split_depth,
            seed,
            no_propagate,
            emit_certificate,
            emit_structure,
        } => {
            let options = ProveOptions {
                config: SolverConfig {
                    shuffle_seed: *seed,
                    propagate: !no_propagate,
                    case_split_depth: *case_split_depth,
                },
                emit_certificate: emit_certificate.clone(),
                emit_structure: emit_structure.clone(),
            };
            commands::prove_command(report, input, &options)?
        }
        Command::VerifyCert {
            certificate,
            algebra,
        } => commands::verify_cert(report, certificate, algebra.as_deref())?,
    };
    Ok((status, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = RunReport::new(std::env::args().skip(1).collect());
    let (report, raw) = match run(&cli, &mut report) {
        Ok((status, raw)) => (report.finish(status), raw),
        Err(e) => {
            eprintln!("error: {e:#}");
            report.messages.push(format!("error: {e:#}"));
            (report.finish(Status::Failed), None)
        }
    };
    match (raw, cli.format) {
        (Some(doc), _) => print!("{doc}"),
        (None, Format::Json) => print!("{}", report.to_json()),
        (None, Format::Text) => print!("{}", report.to_text()),
    }
    ExitCode::from(report.exit_code as u8)
}
