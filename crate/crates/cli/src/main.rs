use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qonsager::commands::{self, Output, EXIT_ERROR};
use qonsager::spec_file::max_dim_from_env;
use qonsager::{CliError, CliResult, SpecFile};

/// Build and analyze representations of the q-Onsager algebra.
#[derive(Parser)]
#[command(name = "qonsager", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutArg {
    /// Write the JSON here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the module matrices and the pair (Z, Z*).
    Build {
        #[arg(long, value_name = "PATH")]
        spec: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check relations and decide irreducibility; exit 0 if irreducible,
    /// 1 if reducible.
    Analyze {
        #[arg(long, value_name = "PATH")]
        spec: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Decompose a multiset of scalars into q-strings.
    Qstrings {
        #[arg(long, value_name = "R", allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
        omega: String,
        /// Treat the input as inverse-closed and return strings strongly in
        /// general position.
        #[arg(long)]
        inverse_closed: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compare two irreducible specs; exit 0 iff isomorphic.
    Isomorphic {
        #[arg(long, value_name = "PATH", num_args = 1, required = true)]
        spec: Vec<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Analyze a JSON array of specs, one report per output line.
    Sweep {
        #[arg(long, value_name = "PATH")]
        spec: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

fn load(path: &Path, max_dim: usize) -> CliResult<SpecFile> {
    SpecFile::parse_str(&commands::read_file(path)?, max_dim)
}

fn run(command: Command) -> CliResult<(Output, Option<PathBuf>)> {
    let max_dim = max_dim_from_env()?;
    Ok(match command {
        Command::Build { spec, out } => (commands::build(&load(&spec, max_dim)?)?, out.out),
        Command::Analyze { spec, out } => {
            (commands::analyze_spec(&load(&spec, max_dim)?)?, out.out)
        }
        Command::Qstrings {
            q,
            omega,
            inverse_closed,
            out,
        } => (commands::qstrings(&q, &omega, inverse_closed)?, out.out),
        Command::Isomorphic { spec, out } => {
            let [a, b] = spec.as_slice() else {
                return Err(CliError::Usage(format!(
                    "isomorphic takes exactly two --spec paths, got {}",
                    spec.len()
                )));
            };
            let a = load(a, max_dim).map_err(|e| e.within("spec A: "))?;
            let b = load(b, max_dim).map_err(|e| e.within("spec B: "))?;
            (commands::isomorphic(&a, &b)?, out.out)
        }
        Command::Sweep { spec, out } => {
            let specs = commands::parse_sweep(&commands::read_file(&spec)?, max_dim)?;
            (commands::sweep(&specs)?, out.out)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|(output, out)| {
        let mut text = output.text;
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match out {
            Some(path) => {
                std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?
            }
            None => print!("{text}"),
        }
        Ok(output.code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
