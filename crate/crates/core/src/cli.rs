//! Command-line front end: `reduce`, `betti`, `gen` and `check`.
//!
//! Exit codes: 0 success, 1 parse/IO/argument error, 2 Betti mismatch after
//! `reduce --check-betti`, 3 simplex-enumeration size cap hit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::collapse::collapse_core;
use crate::complex_io::{self, ToplexList};
use crate::error::Error;
use crate::homology::{self, DEFAULT_SIZE_CAP};
use crate::reducer::{self, ReductionStats};
use crate::relation::Relation;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_BETTI_MISMATCH: u8 = 2;
pub const EXIT_SIZE_CAP: u8 = 3;

/// Environment variable overriding the simplex-enumeration cap.
pub const SIZE_CAP_ENV: &str = "DOWKER_SIZE_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "dowker",
    version,
    about = "Reduce simplicial complexes stored as vertex-toplex relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a complex and report sizes before and after.
    Reduce {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write the reduced relation here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write the step log here.
        #[arg(long)]
        log: Option<PathBuf>,
        /// Compare Betti numbers before and after; exit 2 on mismatch.
        #[arg(long)]
        check_betti: bool,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Leave the wall-time line out of the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print mod-2 Betti numbers b0 .. b_maxdim.
    Betti {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Generate a fixture complex as a toplex (or OFF) file.
    Gen {
        #[arg(value_enum)]
        shape: Shape,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        slices: Option<usize>,
        #[arg(long)]
        stacks: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GenFormat::Toplex)]
        format: GenFormat,
    },
    /// Report column irreducibility and strong collapsibility.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Rel,
    Toplex,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Toplex,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Shape {
    SphereCube,
    SphereUv,
    Torus,
    SimplexBoundary,
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeCap { .. } => EXIT_SIZE_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Reduce {
            input,
            format,
            output,
            log,
            check_betti,
            max_dim,
            json,
            no_timing,
        } => cmd_reduce(
            &ReduceArgs {
                input,
                format,
                output,
                log,
                check_betti,
                max_dim,
                json,
                no_timing,
            },
            out,
        ),
        Command::Betti {
            input,
            format,
            max_dim,
        } => cmd_betti(&input, format, max_dim, out),
        Command::Gen {
            shape,
            m,
            n,
            slices,
            stacks,
            output,
            format,
        } => cmd_gen(shape, m, n, slices, stacks, output.as_deref(), format, out),
        Command::Check { input, format } => cmd_check(&input, format, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Simplex cap from the environment, or the default.
pub fn size_cap() -> usize {
    std::env::var(SIZE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

fn infer_format(path: &Path, format: Option<Format>) -> std::result::Result<Format, Failure> {
    if let Some(f) = format {
        return Ok(f);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("rel") => Ok(Format::Rel),
        Some("toplex") => Ok(Format::Toplex),
        Some("off") => Ok(Format::Off),
        _ => Err(Failure {
            code: EXIT_INPUT,
            message: format!("{}: cannot infer format; pass --format", path.display()),
        }),
    }
}

/// Loads a relation from any supported input format.
pub fn load_relation(path: &Path, format: Format) -> crate::Result<Relation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    parse_relation(&text, format)
}

pub fn parse_relation(text: &str, format: Format) -> crate::Result<Relation> {
    Ok(match format {
        Format::Rel => Relation::from_text(text)?,
        Format::Toplex => Relation::from_toplexes(&complex_io::parse_toplex_file(text)?),
        Format::Off => Relation::from_toplexes(&complex_io::parse_off(text)?),
    })
}

fn load(path: &Path, format: Option<Format>) -> std::result::Result<Relation, Failure> {
    let format = infer_format(path, format)?;
    let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    parse_relation(&text, format).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    std::fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn betti_line(b: &[usize]) -> String {
    b.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

struct ReduceArgs {
    input: PathBuf,
    format: Option<Format>,
    output: Option<PathBuf>,
    log: Option<PathBuf>,
    check_betti: bool,
    max_dim: usize,
    json: bool,
    no_timing: bool,
}

#[derive(Serialize)]
struct ReduceReport {
    input_rows: usize,
    input_cols: usize,
    columns_cleaned_on_load: usize,
    output_rows: usize,
    output_cols: usize,
    steps: usize,
    tests: usize,
    budget: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti_before: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti_after: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_ms: Option<f64>,
    stats: ReductionStats,
}

fn cmd_reduce(args: &ReduceArgs, out: &mut dyn Write) -> CmdResult {
    let loaded = load(&args.input, args.format)?;
    let cap = size_cap();
    let betti_before = if args.check_betti {
        Some(homology::betti_gf2_capped(
            &loaded.to_toplexes(),
            args.max_dim,
            cap,
        )?)
    } else {
        None
    };

    let start = Instant::now();
    let input = if loaded.is_column_irreducible() {
        loaded.clone()
    } else {
        loaded.make_column_irreducible(None)
    };
    let reduction = reducer::reduce(&input);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;

    let betti_after = if args.check_betti {
        Some(homology::betti_gf2_capped(
            &reduction.relation.to_toplexes(),
            args.max_dim,
            cap,
        )?)
    } else {
        None
    };

    if let Some(path) = &args.output {
        write_file(path, &reduction.relation.to_text()?)?;
    }
    if let Some(path) = &args.log {
        let mut log = String::new();
        for (i, s) in reduction.steps.iter().enumerate() {
            writeln!(log, "{}", s.log_line(i + 1)).unwrap();
        }
        write_file(path, &log)?;
    }

    let report = ReduceReport {
        input_rows: loaded.n_rows(),
        input_cols: loaded.n_cols(),
        columns_cleaned_on_load: loaded.n_cols() - input.n_cols(),
        output_rows: reduction.relation.n_rows(),
        output_cols: reduction.relation.n_cols(),
        steps: reduction.stats.steps_applied,
        tests: reduction.stats.contractibility_tests,
        budget: reduction.stats.comparison_budget,
        betti_before,
        betti_after,
        wall_ms: (!args.no_timing).then_some(wall_ms),
        stats: reduction.stats,
    };

    let mut text = String::new();
    if args.json {
        writeln!(text, "{}", serde_json::to_string_pretty(&report).unwrap()).unwrap();
    } else {
        writeln!(
            text,
            "input: {} rows {} cols",
            report.input_rows, report.input_cols
        )
        .unwrap();
        if report.columns_cleaned_on_load > 0 {
            writeln!(
                text,
                "cleaned-on-load: {} cols",
                report.columns_cleaned_on_load
            )
            .unwrap();
        }
        writeln!(
            text,
            "output: {} rows {} cols",
            report.output_rows, report.output_cols
        )
        .unwrap();
        writeln!(text, "steps: {}", report.steps).unwrap();
        writeln!(text, "tests: {}", report.tests).unwrap();
        writeln!(text, "budget: {}", report.budget).unwrap();
        writeln!(text, "delta-max: {}", report.stats.delta_max_seen).unwrap();
        writeln!(text, "epsilon-max: {}", report.stats.epsilon_max_seen).unwrap();
        if let (Some(b), Some(a)) = (&report.betti_before, &report.betti_after) {
            writeln!(text, "betti-before: {}", betti_line(b)).unwrap();
            writeln!(text, "betti-after: {}", betti_line(a)).unwrap();
        }
        if let Some(ms) = report.wall_ms {
            writeln!(text, "wall-ms: {ms:.3}").unwrap();
        }
    }
    out.write_all(text.as_bytes())
        .map_err(|e| io_failure(Path::new("<stdout>"), e))?;

    match (&report.betti_before, &report.betti_after) {
        (Some(b), Some(a)) if b != a => Err(Failure {
            code: EXIT_BETTI_MISMATCH,
            message: format!(
                "Betti numbers changed: {} -> {}",
                betti_line(b),
                betti_line(a)
            ),
        }),
        _ => Ok(()),
    }
}

fn cmd_betti(
    input: &Path,
    format: Option<Format>,
    max_dim: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let r = load(input, format)?;
    let betti = homology::betti_gf2_capped(&r.to_toplexes(), max_dim, size_cap())?;
    writeln!(out, "{}", betti_line(&betti)).map_err(|e| io_failure(Path::new("<stdout>"), e))
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    shape: Shape,
    m: Option<usize>,
    n: Option<usize>,
    slices: Option<usize>,
    stacks: Option<usize>,
    output: Option<&Path>,
    format: GenFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let tl: ToplexList = match shape {
        Shape::SphereCube => complex_io::gen_sphere_cube(),
        Shape::SphereUv => complex_io::gen_sphere_uv(slices.unwrap_or(24), stacks.unwrap_or(21))?,
        Shape::Torus => complex_io::gen_torus_grid(m.unwrap_or(4), n.unwrap_or(4))?,
        Shape::SimplexBoundary => complex_io::gen_simplex_boundary(n.unwrap_or(2)),
    };
    let text = match format {
        GenFormat::Toplex => complex_io::write_toplex_file(&tl),
        GenFormat::Off => complex_io::write_off(&tl),
    };
    match output {
        Some(path) => write_file(path, &text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| io_failure(Path::new("<stdout>"), e)),
    }
}

fn cmd_check(input: &Path, format: Option<Format>, out: &mut dyn Write) -> CmdResult {
    let r = load(input, format)?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut text = String::new();
    writeln!(
        text,
        "column-irreducible: {}",
        yes_no(r.is_column_irreducible())
    )
    .unwrap();
    if r.is_empty() {
        writeln!(text, "strong-collapsible: no (empty)").unwrap();
    } else {
        let core = collapse_core(&r);
        writeln!(
            text,
            "strong-collapsible: {} (core {}x{})",
            yes_no(core.shape() == (1, 1)),
            core.n_rows(),
            core.n_cols()
        )
        .unwrap();
    }
    out.write_all(text.as_bytes())
        .map_err(|e| io_failure(Path::new("<stdout>"), e))
}
