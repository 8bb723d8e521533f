use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crq_cli::doc::{from_json, InputDocument};
use crq_cli::report::Render;
use crq_cli::{analyze_document, classify, example_document, exit_code, map, semidirect};
use crq_core::crq::{Role, DEFAULT_BUDGET};
use crq_core::CrqError;

#[derive(Parser)]
#[command(
    name = "crq",
    version,
    about = "Exact analysis of CR, co-CR and f-quaternionic subspaces of H^k."
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoleArg {
    Cr,
    Cocr,
}

#[derive(Subcommand)]
enum Command {
    /// Decide, classify and certify the subspaces in one or more documents.
    Analyze {
        files: Vec<PathBuf>,
        #[arg(long, value_enum)]
        role: Option<RoleArg>,
        /// Twistor points tried by the full-witness search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Worker threads; reports keep the input order.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the document of a named example.
    Examples {
        name: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// List the splitting types of co-CR spaces with dim E = 4k, dim ker = l.
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Lift a linear map between two spaces.
    Map { file: PathBuf },
    /// Assemble a semidirect product and test whether it is direct.
    Semidirect { file: PathBuf },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<CrqError> for Failure {
    fn from(e: CrqError) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn in_file(path: &PathBuf, e: CrqError) -> Failure {
    let f = Failure::from(e);
    Failure {
        code: f.code,
        message: format!("{}: {}", path.display(), f.message),
    }
}

fn emit<T: Serialize + Render>(value: &T, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
        Format::Text => value.render(),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Analyze {
            files,
            role,
            budget,
            jobs,
        } => {
            let role = role.map(|r| match r {
                RoleArg::Cr => Role::Cr,
                RoleArg::Cocr => Role::Cocr,
            });
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Failure {
                    code: 3,
                    message: e.to_string(),
                })?;
            let results: Vec<Result<_, Failure>> = pool.install(|| {
                files
                    .par_iter()
                    .map(|path| {
                        let text = read(path)?;
                        let doc: InputDocument = from_json(&text).map_err(|e| in_file(path, e))?;
                        analyze_document(&doc, role, budget, &path.display().to_string())
                            .map_err(|e| in_file(path, e))
                    })
                    .collect()
            });
            let reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;
            Ok(match format {
                Format::Json => {
                    serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n"
                }
                Format::Text => reports
                    .iter()
                    .map(Render::render)
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Command::Examples { name, k, l, out } => {
            let doc = example_document(&name, k, l)?;
            let text = serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n";
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Failure {
                        code: 3,
                        message: format!("cannot write {}: {e}", path.display()),
                    })?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Classify { k, l } => Ok(emit(&classify(k, l)?, format)),
        Command::Map { file } => {
            let doc = from_json(&read(&file)?).map_err(|e| in_file(&file, e))?;
            Ok(emit(&map(&doc).map_err(|e| in_file(&file, e))?, format))
        }
        Command::Semidirect { file } => {
            let doc = from_json(&read(&file)?).map_err(|e| in_file(&file, e))?;
            Ok(emit(
                &semidirect(&doc).map_err(|e| in_file(&file, e))?,
                format,
            ))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("crq: {}", f.message);
            ExitCode::from(u8::try_from(f.code).unwrap_or(1))
        }
    }
}
