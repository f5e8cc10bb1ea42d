use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use daisy_cli::commands::{self, Family, Outcome, EXIT_USAGE};

/// Daisy cubes: generate, label, verify, decompose and rebuild graphs.
///
/// Graph files are edge lists: `n m`, then `m` lines `u v`, then optional
/// `root r` and `label v bits` lines. A path of `-` reads standard input.
/// Exit codes: 0 success, 1 rejection, 2 usage or parse error.
#[derive(Debug, Parser)]
#[command(name = "daisy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Hypercube,
    Daisy,
    Fibonacci,
    Lucas,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a labelled graph from one of the cube families.
    Generate {
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Generator words for `daisy`, comma separated.
        #[arg(long = "gen", value_delimiter = ',')]
        generators: Vec<String>,
    },
    /// Drop labels and renumber vertices by a seeded permutation.
    Scramble {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Recognise a daisy cube and print it with a proper labelling.
    Label { input: PathBuf },
    /// Report whether the labelling in a file is proper.
    Check { input: PathBuf },
    /// Print a ≤-expansion certificate for a properly labelled graph.
    Decompose { input: PathBuf },
    /// Rebuild a graph from a certificate.
    Replay {
        certificate: PathBuf,
        /// Graph file to compare against up to isomorphism.
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// Expand over the cover (V1, V2); a ≤-expansion for labelled input without --v1.
    Expand {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        v1: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', required = true)]
        v2: Vec<usize>,
    },
    /// Contract one Θ-class of a partial cube.
    Contract {
        input: PathBuf,
        #[arg(long)]
        class: usize,
    },
    /// Print the daisy graph generated by the given vertices of a rooted graph.
    DaisyGraph {
        input: PathBuf,
        #[arg(long = "x", value_delimiter = ',', required = true)]
        generators: Vec<usize>,
    },
    /// Print size, Θ-classes, peripherality and partial cube / median verdicts.
    Stats { input: PathBuf },
    /// Check every daisy cube Q_n(X) with n up to the bound.
    CorpusVerify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

fn read(path: &PathBuf) -> anyhow::Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(text)
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    Ok(match cli.command {
        Command::Generate { kind, n, generators } => {
            let family = match kind {
                Kind::Hypercube => Family::Hypercube,
                Kind::Daisy => Family::Daisy,
                Kind::Fibonacci => Family::Fibonacci,
                Kind::Lucas => Family::Lucas,
            };
            commands::generate(family, n, &generators)
        }
        Command::Scramble { input, seed } => commands::scramble(&read(&input)?, seed),
        Command::Label { input } => commands::label(&read(&input)?),
        Command::Check { input } => commands::check(&read(&input)?),
        Command::Decompose { input } => commands::decompose(&read(&input)?),
        Command::Replay { certificate, verify } => {
            let reference = verify.as_ref().map(read).transpose()?;
            commands::replay(&read(&certificate)?, reference.as_deref())
        }
        Command::Expand { input, v1, v2 } => commands::expand(&read(&input)?, v1.as_deref(), &v2),
        Command::Contract { input, class } => commands::contract_class(&read(&input)?, class),
        Command::DaisyGraph { input, generators } => commands::daisy_graph(&read(&input)?, &generators),
        Command::Stats { input } => commands::stats(&read(&input)?),
        Command::CorpusVerify { max_n } => commands::corpus_verify(max_n),
    })
}

fn main() -> ExitCode {
    let outcome = match run(Cli::parse()) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    if !outcome.stderr.is_empty() {
        eprintln!("{}", outcome.stderr.trim_end());
    }
    ExitCode::from(outcome.code as u8)
}
