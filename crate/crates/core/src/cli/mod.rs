//! Command-line front end. [`run`] is everything the `harrison` binary does,
//! kept in the library so tests can drive it in-process.
//!
//! Exit codes: 0 when every check passes, 1 for a mathematical failure,
//! 2 for usage or I/O errors.

mod cache;
mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub use cache::{Cache, Entry};
pub use commands::{ModuliWhat, OperadWhat, Outcome};

use crate::cinfty::{builtin, builtin_names, load_algebra, mutations, save_algebra, CInftyError};
use crate::graph::BoundaryProfile;
use crate::linalg::LinalgError;
use crate::moduli::ModuliError;
use crate::torus::TorusError;

pub const SCHEMA: &str = "harrison-report/1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Algebra(#[from] CInftyError),
    /// The input algebra failed validation; carries the rendered report.
    #[error("algebra fails validation (use --force to continue)\n{0}")]
    Invalid(String),
    #[error(transparent)]
    Moduli(#[from] ModuliError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "harrison",
    version,
    about = "Exact computations with graph complexes, C-infinity algebras and their Harrison homology"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Result cache location (defaults to a directory under the system temp dir).
    #[arg(long, env = "HARRISON_CACHE_DIR", global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Worker threads for the parallel parts (0 = rayon default).
    #[arg(long, default_value_t = 0, global = true)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the A-infinity relations, shuffle vanishing and cyclicity.
    Validate {
        file: PathBuf,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_arity: u64,
    },
    /// Betti numbers of the torus complex up to a weight cap.
    Harrison {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        weight: u64,
        /// Also run the independent dense computation and diff the results.
        #[arg(long)]
        oracle: bool,
        /// Continue even if the algebra fails validation.
        #[arg(long)]
        force: bool,
    },
    /// Forested graph cells of a boundary profile `g,e,t`.
    Moduli {
        #[arg(long = "v", value_name = "G,E,T")]
        profile: String,
        #[arg(value_enum)]
        what: ModuliWhat,
    },
    /// Bar(Comm)(n) or its cobar resolution.
    Operad {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(value_enum)]
        what: OperadWhat,
    },
    /// Built-in algebras and their documented mutations.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum AlgebraAction {
    /// Names of built-ins and mutations.
    List,
    /// Print the algebra file of a built-in or mutation.
    Export { name: String },
}

/// The machine-readable report shared by every command.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub input: Value,
    pub status: &'static str,
    pub result: Value,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &PathBuf) -> Result<(crate::cinfty::CInftyAlgebra, String), CliError> {
    let a = load_algebra(&read(path)?)?;
    let canonical = save_algebra(&a);
    Ok((a, canonical))
}

fn export(name: &str) -> Result<String, CliError> {
    if let Ok(a) = builtin(name) {
        return Ok(save_algebra(&a));
    }
    mutations()
        .into_iter()
        .find(|m| m.name.eq_ignore_ascii_case(name))
        .map(|m| save_algebra(&m.algebra))
        .ok_or_else(|| CliError::Usage(format!("no built-in or mutation named `{name}`")))
}

fn list() -> String {
    let mut s = String::from("built-ins:\n");
    for n in builtin_names() {
        s.push_str(&format!("  {n}\n"));
    }
    s.push_str("mutations:\n");
    for m in mutations() {
        s.push_str(&format!(
            "  {:<22} breaks {:<10} {}\n",
            m.name, m.breaks, m.description
        ));
    }
    s
}

/// A command to evaluate: a cache key source plus a deferred computation.
struct Job {
    command: String,
    input: Value,
    key_extra: String,
}

fn entry_for(job: &Job, outcome: Outcome) -> Entry {
    let report = Report {
        schema: SCHEMA,
        command: job.command.clone(),
        input: job.input.clone(),
        status: if outcome.passed { "pass" } else { "fail" },
        result: outcome.result,
    };
    let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
    json.push('\n');
    Entry {
        json,
        text: outcome.text,
        exit: if outcome.passed { 0 } else { 1 },
    }
}

fn execute(
    cli: &Cli,
    cache: &Cache,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (job, compute): (Job, Box<dyn FnOnce() -> Result<Outcome, CliError> + Send>) = match &cli
        .command
    {
        Command::Algebra { action } => {
            let text = match action {
                AlgebraAction::List => list(),
                AlgebraAction::Export { name } => export(name)?,
            };
            write_out(out, &text)?;
            return Ok(0);
        }
        Command::Validate { file, max_arity } => {
            let (a, canonical) = load(file)?;
            let n = *max_arity as usize;
            (
                Job {
                    command: "validate".into(),
                    input: json!({"algebra": a.name(), "max_arity": n}),
                    key_extra: canonical,
                },
                Box::new(move || Ok(commands::validate(&a, n))),
            )
        }
        Command::Harrison {
            file,
            weight,
            oracle,
            force,
        } => {
            let (a, canonical) = load(file)?;
            let (w, o, f) = (*weight as usize, *oracle, *force);
            (
                Job {
                    command: "harrison".into(),
                    input: json!({"algebra": a.name(), "weight": w, "oracle": o, "force": f}),
                    key_extra: canonical,
                },
                Box::new(move || commands::harrison(&a, w, o, f)),
            )
        }
        Command::Moduli { profile, what } => {
            let p = BoundaryProfile::parse(profile).map_err(|e| CliError::Usage(e.to_string()))?;
            let what = *what;
            let name = what
                .to_possible_value()
                .expect("not skipped")
                .get_name()
                .to_string();
            (
                Job {
                    command: format!("moduli {name}"),
                    input: json!({
                        "profile": p.to_string(),
                        "g": p.g, "e_in": p.e_in, "e_out": p.e_out, "t_in": p.t_in, "t_out": p.t_out,
                    }),
                    key_extra: String::new(),
                },
                Box::new(move || commands::moduli(&p, what)),
            )
        }
        Command::Operad { n, what } => {
            let (n, what) = (*n as usize, *what);
            let name = what
                .to_possible_value()
                .expect("not skipped")
                .get_name()
                .to_string();
            (
                Job {
                    command: format!("operad {name}"),
                    input: json!({"n": n}),
                    key_extra: String::new(),
                },
                Box::new(move || commands::operad(n, what)),
            )
        }
    };
    let key = Cache::key(&[&job.command, &job.input.to_string(), &job.key_extra]);
    let entry = match cache.get(&key) {
        Some(e) => e,
        None => {
            let e = entry_for(&job, pool.install(compute)?);
            // a failed write only costs a recomputation next time
            let _ = cache.put(&key, &e);
            e
        }
    };
    match cli.format {
        Format::Json => write_out(out, &entry.json)?,
        Format::Text => {
            write_out(out, &entry.text)?;
            write_out(
                out,
                if entry.exit == 0 {
                    "status: pass\n"
                } else {
                    "status: FAIL\n"
                },
            )?;
        }
    }
    Ok(entry.exit)
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes()).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn open_cache(cli: &Cli) -> Cache {
    if cli.no_cache {
        return Cache::disabled();
    }
    let dir = cli
        .cache_dir
        .clone()
        .unwrap_or_else(|| std::env::temp_dir().join("harrison-cache"));
    Cache::open(&dir).unwrap_or_else(|_| Cache::disabled())
}

/// Parses `args` (program name first) and runs the command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start thread pool: {e}");
            return 2;
        }
    };
    let cache = open_cache(&cli);
    match execute(&cli, &cache, &pool, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
