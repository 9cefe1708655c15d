//! Experiment driver for `vanishing-core`.
//!
//! Parses flags and input files, runs one subcommand, re-verifies anything it
//! is about to emit and renders a [`Report`]. The acceptance harness lives in
//! [`acceptance`] and is shared by the `acceptance` subcommand and the test
//! target of the same name.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use vanishing_core::Limits;

pub mod acceptance;
pub mod commands;
pub mod input;
pub mod report;

pub use report::{Format, Report};

/// Malformed flags or input files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Debug, Parser)]
#[command(
    name = "vanishing",
    version,
    about = "Vanishing products, arithmetic sets and coset covers over F_p^n"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Prime modulus.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Dimension.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Multiplicity of every binomial factor.
    #[arg(long, global = true)]
    pub r: Option<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest p^n for dense tables and enumerations.
    #[arg(long = "cap-ring", global = true)]
    pub cap_ring: Option<u64>,
    /// Largest group order for subgroup and cover searches.
    #[arg(long = "cap-group", global = true)]
    pub cap_group: Option<u64>,
    /// Iteration budget for randomized searches.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl GlobalArgs {
    pub fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(c) = self.cap_ring {
            l.max_ring_size = c;
            l.max_enumeration = c;
        }
        if let Some(c) = self.cap_group {
            l.max_group_order = c;
        }
        if let Some(b) = self.budget {
            l.search_budget = b;
        }
        l
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check, minimize or search for r-arithmetic sets.
    ArithmeticSet(ArithmeticArgs),
    /// Decide (r, F_p)-vanishing and optionally (r, C)-vanishing.
    Vanishing(MultisetArgs),
    /// Extract an irredundant vanishing subset.
    Irredundant(MultisetArgs),
    /// Write targets over a union of bases with coefficients in A.
    Decompose(FileArgs),
    /// Least irredundant coset cover with trivial intersection.
    Phi(PhiArgs),
    /// Coset cover queries.
    Covers {
        #[command(subcommand)]
        action: CoversAction,
    },
    /// Choice systems: witnesses or hyperplane-cover certificates.
    Ajt(AjtArgs),
    /// Run the acceptance suite.
    Acceptance(AcceptanceArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ArithmeticArgs {
    /// Residues to check, e.g. "1..10" or "0,1,3".
    #[arg(long)]
    pub set: Option<String>,
    /// Exhaustive minimum.
    #[arg(long)]
    pub min: bool,
    /// Randomized search for a set of size at most 2 floor(log2 p).
    #[arg(long)]
    pub search: bool,
    /// Run over every prime in a range such as "5..199".
    #[arg(long)]
    pub primes: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct MultisetArgs {
    #[arg(long, conflicts_with = "vectors")]
    pub input: Option<PathBuf>,
    /// Inline vectors, e.g. "1,0;0,1;1,1".
    #[arg(long)]
    pub vectors: Option<String>,
    /// Also run the cyclotomic search.
    #[arg(long)]
    pub complex: bool,
}

#[derive(Debug, Clone, Args)]
pub struct FileArgs {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct PhiArgs {
    /// Cyclic factor orders, e.g. "2,2" or "4,2".
    #[arg(long, conflicts_with_all = ["input", "maximal"])]
    pub factors: Option<String>,
    #[arg(long, conflicts_with = "maximal")]
    pub input: Option<PathBuf>,
    /// Restrict to maximal subgroups of F_p^n (takes --p and --n).
    #[arg(long)]
    pub maximal: bool,
}

#[derive(Debug, Subcommand)]
pub enum CoversAction {
    /// Cover, irredundance, intersection index and efficiency of a family.
    Check(FileArgs),
}

#[derive(Debug, Clone, Args)]
pub struct AjtArgs {
    #[arg(long, conflicts_with = "hunt")]
    pub input: Option<PathBuf>,
    /// Random systems with every X = F_p^* (takes --p, --n, --k).
    #[arg(long)]
    pub hunt: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
}

#[derive(Debug, Clone, Args)]
pub struct AcceptanceArgs {
    /// Criteria to run, e.g. "1,3..5".
    #[arg(long)]
    pub only: Option<String>,
}

/// A rendered report and whether every check in it passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub ok: bool,
}

impl Outcome {
    pub fn ok(report: Report) -> Self {
        Outcome { report, ok: true }
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::ArithmeticSet(a) => commands::arithmetic_set(g, a),
        Command::Vanishing(a) => commands::vanishing(g, a),
        Command::Irredundant(a) => commands::irredundant(g, a),
        Command::Decompose(a) => commands::decompose(g, a),
        Command::Phi(a) => commands::phi(g, a),
        Command::Covers {
            action: CoversAction::Check(a),
        } => commands::covers_check(g, a),
        Command::Ajt(a) => commands::ajt(g, a),
        Command::Acceptance(a) => commands::acceptance(g, a),
    }
}

/// 2 for malformed input, 3 for cap violations, 1 for failed checks and
/// every other error.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    use vanishing_core::Error as E;
    if err.downcast_ref::<UsageError>().is_some() || err.downcast_ref::<clap::Error>().is_some() {
        return 2;
    }
    match err.downcast_ref::<E>() {
        Some(E::CapExceeded { .. }) => 3,
        Some(
            E::NotPrime(_)
            | E::InvalidInput(_)
            | E::DimensionMismatch { .. }
            | E::ModulusMismatch { .. },
        ) => 2,
        _ => 1,
    }
}

/// Full driver: parse, run, emit. Returns the process exit status.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            return exit_code(&e);
        }
    };
    let text = outcome.report.render(cli.global.format);
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, &text),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return 1;
    }
    if outcome.ok {
        0
    } else {
        1
    }
}
