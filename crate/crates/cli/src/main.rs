//! Command-line front end: compute polynomial families, enumerate the
//! combinatorial objects behind them, and run the verification suites.
//!
//! Exit codes: 0 = success / everything verified, 1 = a mathematical
//! mismatch was found (two routes disagree or a check failed),
//! 2 = usage error.

mod enumerate;
mod output;
mod poly;
mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stirlab_core::exactmath::Int;

use output::Emitter;

#[derive(Parser)]
#[command(
    name = "stirlab",
    version,
    about = "Exact computation and brute-force verification for 1/k-Eulerian polynomials and k-Stirling permutations",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (csv applies to poly rows only).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Parallel fold width; defaults to the available cores. Results are
    /// identical for any value.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Omit the timestamp field from JSON records.
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one polynomial (--n) or a triangle of rows (--n-max).
    Poly(PolyArgs),
    /// Enumerate a family, one object per line, in deterministic order.
    Enum(EnumArgs),
    /// Run verification suites; exit 0 when every identity holds.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct PolyArgs {
    /// A = 1/k-Eulerian, B = reversed A, C = alternating-run rows,
    /// P = second-order Eulerian, stirling1 = Stirling numbers, first kind.
    #[arg(value_enum)]
    family: Family,

    #[arg(long)]
    n: Option<usize>,

    /// Print one row per n up to this bound.
    #[arg(long, value_name = "N")]
    n_max: Option<usize>,

    /// Copies per letter; required for families A and B.
    #[arg(long)]
    k: Option<usize>,

    /// Computation route(s). Give several (comma-separated or repeated) to
    /// cross-check them; disagreement exits 1. For family B, `ap` selects
    /// the zero-prefixed ascent-plateau route.
    #[arg(long, value_enum, value_delimiter = ',')]
    route: Vec<Route>,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(value_enum)]
    family: EnumFamily,

    #[arg(long)]
    n: usize,

    /// Copies per letter (qnk) or scale (invseq); invalid for perm and dual.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,

    /// Override the largest n exercised by the suite.
    #[arg(long, value_name = "N")]
    n_max: Option<usize>,

    /// Restrict the suite to a single k.
    #[arg(long)]
    k: Option<usize>,

    /// Restrict the suite to k up to this bound.
    #[arg(long, value_name = "K")]
    k_max: Option<usize>,

    /// Truncation order for the generating-function suites.
    #[arg(long, value_name = "N")]
    order: Option<usize>,

    /// quick = small sub-second bounds, full = the complete desk-scale matrix.
    #[arg(long, value_enum, default_value_t = Profile::Quick)]
    profile: Profile,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Family {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "stirling1")]
    Stirling1,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Route {
    Recurrence,
    ExcCyc,
    Invseq,
    Ap,
    Ipk,
    Lpk,
    Run,
    Def,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::ExcCyc => "exc-cyc",
            Route::Invseq => "invseq",
            Route::Ap => "ap",
            Route::Ipk => "ipk",
            Route::Lpk => "lpk",
            Route::Run => "run",
            Route::Def => "def",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum EnumFamily {
    Perm,
    Invseq,
    Qnk,
    Dual,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Suite {
    All,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    #[value(name = "egf-A", alias = "egf-a")]
    EgfA,
    #[value(name = "egf-C", alias = "egf-c")]
    EgfC,
    Axq,
    Counts,
    #[value(name = "id13-14")]
    Id1314,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Profile {
    Quick,
    Full,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Command failures carrying their exit code.
enum CmdError {
    /// Exit 2: bad flags, bad parameters, or an enumeration above the cap.
    Usage(String),
    /// Exit 1: two routes disagreed or a verification check failed.
    Mismatch(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Io(e)
    }
}

type CmdResult = Result<(), CmdError>;

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => 0,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CmdError::Mismatch(msg)) => {
            eprintln!("{msg}");
            1
        }
        Err(CmdError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(CmdError::Io(e)) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> CmdResult {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CmdError::Usage(format!("cannot build thread pool: {e}")))?;

    let writer: Box<dyn Write + Send> = match &cli.out {
        Some(path) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(path)
                .map_err(|e| CmdError::Usage(format!("cannot create {}: {e}", path.display())))?,
        )),
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    };
    let mut emitter = Emitter::new(writer, cli.format, !cli.no_timestamp);

    let outcome = pool.install(|| match &cli.command {
        Command::Poly(args) => poly::run(args, &mut emitter),
        Command::Enum(args) => enumerate::run(args, &mut emitter),
        Command::Verify(args) => verify::run(args, &mut emitter),
    });
    emitter.flush()?;
    outcome
}

/// Enumeration cap: a safety valve against accidentally huge streams.
fn max_objects() -> Int {
    std::env::var("STIRLAB_MAX_OBJECTS")
        .ok()
        .and_then(|raw| raw.parse::<u128>().ok())
        .map(Int::from)
        .unwrap_or_else(|| Int::from(100_000_000u64))
}

fn ensure_within_cap(label: &str, count: &Int) -> CmdResult {
    let cap = max_objects();
    if *count > cap {
        return Err(CmdError::Usage(format!(
            "{label} would enumerate {count} objects, above the STIRLAB_MAX_OBJECTS cap of {cap}"
        )));
    }
    Ok(())
}
