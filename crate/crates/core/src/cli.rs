//! The `quandle` command-line tool.
//!
//! Reports go to stdout as JSON, diagnostics to stderr. Exit codes: 0 on
//! success, 1 when a spec fails to parse or validate (or a checked law fails),
//! 2 on usage or I/O errors, 3 when a cap or budget ran out before an answer.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closure::{self, GroupKind, DEFAULT_CAP};
use crate::error::Error;
use crate::euler::{self, EulerReport};
use crate::quandle::{FiniteQuandle, DEFAULT_SEARCH_BUDGET};
use crate::spec::{self, QuandleSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPPED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "quandle", version, about = "Finite quandles, displacement groups and the quandle Euler characteristic")]
struct Cli {
    /// Print reports as single-line JSON instead of pretty-printed JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the quandle axioms for a spec.
    Validate {
        /// Spec file, or "-" for stdin.
        spec: PathBuf,
    },
    /// Size, triviality, connectivity, homogeneity and group orders.
    Info {
        spec: PathBuf,
        /// Node budget for the automorphism search behind homogeneity.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Maximum number of group elements to enumerate.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Compute the Euler characteristic.
    Euler {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Enumerate the translation group of a graph quandle instead of Dis(X).
        #[arg(long)]
        fast_graph: bool,
        /// Random words to try for a fixed-point-free element if enumeration hits the cap.
        #[arg(long, requires = "seed")]
        search_trials: Option<usize>,
        #[arg(long, requires = "search_trials")]
        seed: Option<u64>,
    },
    /// Print the resolved Cayley table as canonical JSON.
    Table { spec: PathBuf },
    /// Check the product or union law for a pair of quandles.
    Check {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum)]
        law: Law,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Law {
    Product,
    Union,
}

enum Failure {
    Invalid(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Invalid(_) => EXIT_INVALID,
            Failure::Usage(_) => EXIT_USAGE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Usage(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e.root() {
            Error::InvalidCap => Failure::Usage(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    json: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let mut text = String::new();
        let result = if path == Path::new("-") {
            self.stdin.read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        result.map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        Ok(text)
    }

    fn load(&mut self, path: &Path) -> Result<(QuandleSpec, FiniteQuandle), Failure> {
        let text = self.read(path)?;
        let parsed = spec::parse_spec(&text)?;
        let q = parsed.resolve()?;
        Ok((parsed, q))
    }

    fn emit<T: Serialize>(&mut self, value: &T) {
        let text = if self.json {
            serde_json::to_string(value)
        } else {
            serde_json::to_string_pretty(value)
        }
        .expect("report serializes");
        let _ = writeln!(self.stdout, "{text}");
    }

    fn warn(&mut self, message: &str) {
        let _ = writeln!(self.stderr, "quandle: {message}");
    }
}

#[derive(Serialize)]
struct ValidateReport {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct InfoReport {
    size: usize,
    trivial: bool,
    connected: bool,
    homogeneous: Option<bool>,
    inn_order: Option<usize>,
    dis_order: Option<usize>,
}

#[derive(Serialize)]
struct CheckReport {
    law: Law,
    chi_left: Option<usize>,
    chi_right: Option<usize>,
    chi_combined: Option<usize>,
    holds: Option<bool>,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
        json: cli.json,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(failure) => {
            io.warn(failure.message());
            failure.code()
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32, Failure> {
    match command {
        Command::Validate { spec } => validate(io, &spec),
        Command::Info { spec, budget, cap } => info(io, &spec, budget, cap),
        Command::Euler {
            spec,
            cap,
            fast_graph,
            search_trials,
            seed,
        } => {
            let search = search_trials.zip(seed);
            run_euler(io, &spec, cap, fast_graph, search)
        }
        Command::Table { spec } => {
            let (_, q) = io.load(&spec)?;
            let _ = writeln!(io.stdout, "{}", spec::table_json(&q));
            Ok(EXIT_OK)
        }
        Command::Check { left, right, law, cap } => check(io, &left, &right, law, cap),
    }
}

fn validate(io: &mut Io<'_>, path: &Path) -> Result<i32, Failure> {
    let text = io.read(path)?;
    match spec::parse_spec(&text).and_then(|s| s.resolve()) {
        Ok(q) => {
            io.emit(&ValidateReport {
                valid: true,
                size: Some(q.size()),
                error: None,
            });
            Ok(EXIT_OK)
        }
        Err(e) => {
            io.emit(&ValidateReport {
                valid: false,
                size: None,
                error: Some(e.to_string()),
            });
            io.warn(&e.to_string());
            Ok(EXIT_INVALID)
        }
    }
}

fn info(io: &mut Io<'_>, path: &Path, budget: u64, cap: usize) -> Result<i32, Failure> {
    let (_, q) = io.load(path)?;
    let homogeneous = match q.is_homogeneous(budget) {
        Ok(h) => Some(h),
        Err(Error::SearchBudgetExceeded(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let inn_order = closure::group_order(&q, GroupKind::Inner, cap)?.exact();
    let dis_order = closure::group_order(&q, GroupKind::Displacement, cap)?.exact();
    io.emit(&InfoReport {
        size: q.size(),
        trivial: q.is_trivial(),
        connected: q.is_connected(),
        homogeneous,
        inn_order,
        dis_order,
    });
    Ok(EXIT_OK)
}

fn compute_euler(
    parsed: &QuandleSpec,
    q: &FiniteQuandle,
    cap: usize,
    fast_graph: bool,
    search: Option<(usize, u64)>,
) -> Result<EulerReport, Failure> {
    let mut report = if fast_graph {
        let graph = parsed.graph_spec().ok_or_else(|| {
            Failure::Usage("--fast-graph needs a spec whose root is graph, cycle or path".into())
        })??;
        euler::euler_graph_fast(&graph, cap)?
    } else {
        euler::euler_characteristic(q, cap)?
    };
    if let (false, Some((trials, seed))) = (report.exact, search) {
        if let Some(witness) = euler::zero_witness_search(q, trials, seed) {
            report = EulerReport {
                chi: Some(0),
                exact: true,
                witness: Some(witness),
                dis_order: None,
                upper_bound: 0,
            };
        }
    }
    Ok(report)
}

fn run_euler(
    io: &mut Io<'_>,
    path: &Path,
    cap: usize,
    fast_graph: bool,
    search: Option<(usize, u64)>,
) -> Result<i32, Failure> {
    let (parsed, q) = io.load(path)?;
    let report = compute_euler(&parsed, &q, cap, fast_graph, search)?;
    io.emit(&report);
    if report.exact {
        Ok(EXIT_OK)
    } else {
        io.warn(&format!("cap of {cap} elements reached without an answer"));
        Ok(EXIT_CAPPED)
    }
}

fn check(io: &mut Io<'_>, left: &Path, right: &Path, law: Law, cap: usize) -> Result<i32, Failure> {
    let (_, x) = io.load(left)?;
    let (_, y) = io.load(right)?;
    let combined = match law {
        Law::Product => FiniteQuandle::direct_product(&x, &y)?,
        Law::Union => FiniteQuandle::free_union(&x, &y)?,
    };
    let chi = |q: &FiniteQuandle| euler::euler_characteristic(q, cap).map(|r| r.chi);
    let (a, b, c) = (chi(&x)?, chi(&y)?, chi(&combined)?);
    let holds = match (a, b, c) {
        (Some(a), Some(b), Some(c)) => Some(match law {
            Law::Product => c == a * b,
            Law::Union => c <= a + b,
        }),
        _ => None,
    };
    io.emit(&CheckReport {
        law,
        chi_left: a,
        chi_right: b,
        chi_combined: c,
        holds,
    });
    Ok(match holds {
        Some(true) => EXIT_OK,
        Some(false) => {
            io.warn(&format!("{law:?} law fails"));
            EXIT_INVALID
        }
        None => {
            io.warn(&format!("cap of {cap} elements reached before the law could be checked"));
            EXIT_CAPPED
        }
    })
}
