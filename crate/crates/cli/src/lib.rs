//! `qlogic` command line: demos, lattice operations, identity checks and
//! proposition evaluation. Every command produces one JSON report; the text
//! format is a rendering of that report.

mod commands;
mod render;

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit status, standard output and standard error of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(name = "qlogic", version, about = "Exact quantum-logic workbench")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a built-in demonstration.
    Demo {
        #[arg(value_enum)]
        which: DemoKind,
    },
    /// Lattice operation on subspace files.
    Lattice {
        #[arg(value_enum)]
        op: LatticeOp,
        a: PathBuf,
        b: Option<PathBuf>,
    },
    /// Search for a counterexample to a lattice identity.
    Check {
        /// Statement such as "x & (y | z) = (x & y) | (x & z)".
        statement: Option<String>,
        /// Read statements from a file instead, one per line.
        #[arg(long, conflicts_with = "statement")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = StructureKind::Subspace)]
        structure: StructureKind,
        /// Space dimension, or universe size for `boolean`.
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, value_enum, default_value_t = FieldKind::Gaussian)]
        field: FieldKind,
    },
    /// Proposition commands.
    Props {
        #[command(subcommand)]
        command: PropsCommand,
    },
}

#[derive(Debug, Subcommand)]
enum PropsCommand {
    /// Evaluate a proposition file at a state file.
    Eval { prop: PathBuf, state: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DemoKind {
    Spin,
    Hatch,
    TwoState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeOp {
    Meet,
    Join,
    Ortho,
    Leq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StructureKind {
    Subspace,
    Boolean,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldKind {
    Real,
    Gaussian,
}

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Io { path: PathBuf, message: String },
    Core(qlogic::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io { path, message } => write!(f, "{}: {message}", path.display()),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<qlogic::Error> for CliError {
    fn from(e: qlogic::Error) -> Self {
        CliError::Core(e)
    }
}

/// Input files read so far, in order; they feed the report digest.
#[derive(Default)]
pub(crate) struct Inputs {
    files: Vec<Vec<u8>>,
}

impl Inputs {
    pub(crate) fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::Io {
            path: path.into(),
            message: e.to_string(),
        })?;
        let text = String::from_utf8(bytes.clone()).map_err(|_| CliError::Io {
            path: path.into(),
            message: "not valid UTF-8".into(),
        })?;
        self.files.push(bytes);
        Ok(text)
    }

    pub(crate) fn json<T: serde::de::DeserializeOwned>(&mut self, path: &Path) -> Result<T, CliError> {
        let text = self.read(path)?;
        serde_json::from_str(&text).map_err(|e| CliError::Io {
            path: path.into(),
            message: e.to_string(),
        })
    }

    fn digest(&self, command: &[String]) -> String {
        let mut h = Sha256::new();
        for arg in command {
            h.update(arg.as_bytes());
            h.update([0]);
        }
        for f in &self.files {
            h.update((f.len() as u64).to_le_bytes());
            h.update(f);
        }
        hex::encode(h.finalize())
    }
}

/// What a command computed; `failed` marks a found counterexample.
pub(crate) struct Results {
    pub value: Value,
    pub failed: bool,
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a [String],
    inputs_digest: String,
    results: Value,
    seed: u64,
    version: &'static str,
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let command: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut inputs = Inputs::default();
    match dispatch(&cli, &mut inputs) {
        Ok(results) => {
            let report = Report {
                command: &command,
                inputs_digest: inputs.digest(&command),
                results: results.value,
                seed: cli.seed,
                version: VERSION,
            };
            let json = serde_json::to_value(&report).expect("reports are plain JSON");
            let stdout = match cli.format {
                Format::Json => serde_json::to_string_pretty(&json).expect("reports are plain JSON") + "\n",
                Format::Text => render::text(&json),
            };
            Output {
                code: if results.failed { 1 } else { 0 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("qlogic: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli, inputs: &mut Inputs) -> Result<Results, CliError> {
    match &cli.command {
        Command::Demo { which } => match which {
            DemoKind::Spin => commands::demo_spin(),
            DemoKind::Hatch => commands::demo_hatch(),
            DemoKind::TwoState => commands::demo_two_state(),
        },
        Command::Lattice { op, a, b } => commands::lattice(*op, a, b.as_deref(), inputs),
        Command::Check {
            statement,
            file,
            structure,
            dim,
            trials,
            field,
        } => {
            let structure = match structure {
                StructureKind::Subspace => qlogic::dsl::Structure::subspace(
                    *dim,
                    match field {
                        FieldKind::Real => qlogic::ScalarField::RationalReal,
                        FieldKind::Gaussian => qlogic::ScalarField::GaussianRational,
                    },
                )?,
                StructureKind::Boolean => qlogic::dsl::Structure::boolean(*dim)?,
            };
            let source = match (statement, file) {
                (Some(s), None) => commands::Statements::Inline(s.clone()),
                (None, Some(path)) => commands::Statements::File(inputs.read(path)?),
                _ => return Err(CliError::Usage("give a statement or --file".into())),
            };
            commands::check(source, &structure, *trials, cli.seed)
        }
        Command::Props {
            command: PropsCommand::Eval { prop, state },
        } => commands::props_eval(prop, state, inputs),
    }
}
