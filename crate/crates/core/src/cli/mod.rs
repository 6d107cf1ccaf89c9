//! The `spk` command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 internal
//! invariant breach.

mod cache;
mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::catalog::{CheckId, FamilyName, SpecName};
use crate::enumerate::Family;
use crate::error::SpkError;
use crate::grammar::GrammarName;

pub use cache::{cache_path, cached_family_poly};

/// Version tag carried by every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "spk", version, about = "Stirling permutation and signed permutation identities, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads; the output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Directory for cached family polynomials.
    #[arg(long, global = true, env = "SPK_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Objects,
    Stats,
    Count,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stream the members of a combinatorial family.
    Enumerate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::Objects)]
        emit: Emit,
    },
    /// Every statistic of every member of a family, then the distributions.
    Stats {
        #[arg(long, default_value = "q")]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// A named polynomial family.
    Poly {
        #[arg(long)]
        family: FamilyName,
        #[arg(long)]
        n: usize,
        /// Substitutions applied afterwards, as `k=v,...` with polynomial values.
        #[arg(long)]
        var_map: Option<String>,
    },
    /// The gamma table, or its substitution under a named spec.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        family: Option<SpecName>,
    },
    /// Iterated formal derivative of a builtin grammar.
    Grammar {
        #[arg(long, alias = "name")]
        family: GrammarName,
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(long)]
        seed_word: Option<String>,
    },
    /// Run identity checks.
    Verify {
        #[arg(long = "check", conflicts_with = "all")]
        checks: Vec<CheckId>,
        #[arg(long)]
        all: bool,
        /// Largest n; each check is further capped by its own ceiling.
        #[arg(long)]
        n_max: Option<usize>,
        /// Raise every ceiling by one.
        #[arg(long)]
        deep: bool,
        /// Also write the report, with timings, as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Root report for a univariate family, or the full zero theorem.
    Zeros {
        #[arg(long, required_unless_present = "theorem")]
        family: Option<FamilyName>,
        #[arg(long, required_unless_present = "theorem")]
        n: Option<usize>,
        #[arg(long)]
        theorem: bool,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
}

/// Result of a command: text lines or one JSON document, plus an exit code.
pub(crate) struct Output {
    pub text: String,
    pub json: Value,
    pub code: i32,
    /// Extra diagnostics for stderr.
    pub notes: String,
}

fn error_code(e: &SpkError) -> i32 {
    match e {
        SpkError::Invariant(_) | SpkError::RouteDisagreement { .. } | SpkError::Io(_) => 3,
        _ => 2,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to `out` and `err`. Returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 3;
        }
    };
    let result = pool.install(|| commands::run(&cli.command, &cli.global));
    match result {
        Ok(o) => {
            let written = match cli.global.format {
                Format::Text => out.write_all(o.text.as_bytes()),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&o.json).unwrap()),
            };
            let _ = err.write_all(o.notes.as_bytes());
            if written.is_err() {
                return 3;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}
