//! Command-line front end. [`run`] returns the exit status and output
//! instead of printing, so the binary and the tests share one path.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::congruences::enumerate_congruences;
use crate::error::Error;
use crate::finite::{io, CayleyTable, Identity, Semigroup};
use crate::report::analyze;
use crate::varieties::{enumerate_semigroups, EnumerationOptions};
use crate::words::{self, Alphabet, NormalWord, Word};

#[derive(Debug, Parser)]
#[command(
    name = "leftlegal",
    about = "Free left legal semigroups and finite semigroup analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form of a word
    Normalize {
        /// Letters, packed (`xxy`) or whitespace-separated
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
    /// Multiply the normal forms of two words
    Mult { left: String, right: String },
    /// Decide whether two words are equal in the free left legal semigroup
    Equiv { left: String, right: String },
    /// Emit the Cayley table of the free left legal semigroup
    FreeTable {
        /// Packed single-character letters (`xy`) or comma-separated tokens
        #[arg(long)]
        letters: String,
    },
    /// Analyse a semigroup given as a Cayley table file
    Analyze { file: PathBuf },
    /// Enumerate semigroups of a given order
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Identity filter such as `ab=ac`; repeatable
        #[arg(long = "identity")]
        identities: Vec<String>,
        #[arg(long)]
        left_legal: bool,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// List all congruences of a semigroup given as a Cayley table file
    Congruences { file: PathBuf },
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::failure(2, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => Outcome::ok(out),
        Err(Failure::Domain(msg)) => Outcome::failure(1, format!("error: {msg}\n")),
        Err(Failure::Usage(msg)) => Outcome::failure(2, format!("error: {msg}\n")),
    }
}

fn load_semigroup(path: &PathBuf) -> Result<Semigroup, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let table: CayleyTable =
        io::parse_table(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    Ok(Semigroup::new(table)?)
}

fn dispatch(command: Command) -> Result<String, Failure> {
    match command {
        Command::Normalize { word } => {
            let (w, format) = Word::parse(&word.join(" "))?;
            Ok(format!("{}\n", words::normalize(&w).render(format)))
        }
        Command::Mult { left, right } => {
            let (w1, format) = Word::parse(&left)?;
            let (w2, _) = Word::parse(&right)?;
            let product: NormalWord = words::circ(&words::normalize(&w1), &words::normalize(&w2));
            Ok(format!("{}\n", product.render(format)))
        }
        Command::Equiv { left, right } => {
            let (w1, _) = Word::parse(&left)?;
            let (w2, _) = Word::parse(&right)?;
            Ok(format!("{}\n", words::are_equivalent(&w1, &w2)))
        }
        Command::FreeTable { letters } => {
            let alphabet = Alphabet::parse(&letters).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(words::free_semigroup(&alphabet)?.table.to_string())
        }
        Command::Analyze { file } => {
            let s = load_semigroup(&file)?;
            Ok(analyze(&s)?.to_string())
        }
        Command::Enumerate {
            order,
            identities,
            left_legal,
            up_to_iso,
        } => {
            let identities = identities
                .iter()
                .map(|t| t.parse::<Identity>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let options = EnumerationOptions {
                order,
                identities,
                left_legal,
                up_to_iso,
            };
            let found = enumerate_semigroups(&options)?;
            Ok(io::format_census(found.iter().map(|s| s.table())))
        }
        Command::Congruences { file } => {
            let s = load_semigroup(&file)?;
            let all = enumerate_congruences(&s)?;
            let mut out = format!("# count: {}\n", all.len());
            for c in &all {
                out.push_str(&c.render(&s));
                out.push('\n');
            }
            Ok(out)
        }
    }
}
