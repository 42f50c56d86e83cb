//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors
//! (bad flags, malformed weights, weights outside `P_ℓ`).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::prv::{PRVReport, SweepFilter, SweepSummary};
use crate::rootsys::{AlgebraData, Limits, SimpleType};
use crate::weight::Weight;

/// Version of the JSON layout emitted by `prv-sweep` and `algebra`.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fusionkit", version, about = "Tensor and fusion products of simple Lie algebra representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose V(λ) ⊗ V(μ) into irreducibles.
    Tensor {
        /// Simple type, e.g. A2 or G2.
        algebra: SimpleType,
        /// Highest weight λ as comma-separated fundamental-weight coordinates.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight,
        #[arg(long, allow_hyphen_values = true)]
        mu: Weight,
        /// One summand per line with dimensions, followed by the total.
        #[arg(long)]
        table: bool,
    },
    /// Decompose the level-ℓ fusion product V(λ) ⊗^F V(μ).
    Fusion {
        algebra: SimpleType,
        #[arg(long)]
        level: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight,
        #[arg(long, allow_hyphen_values = true)]
        mu: Weight,
    },
    /// Check multiplicity one of PRV components over all λ ≫ μ in P_ℓ.
    PrvSweep(SweepArgs),
    /// Print the root datum as JSON.
    Algebra { algebra: SimpleType },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Simple types to sweep; repeat the flag or separate with commas.
    #[arg(long, required = true, value_delimiter = ',')]
    pub series: Vec<SimpleType>,
    #[arg(long, default_value_t = 1)]
    pub min_level: i64,
    #[arg(long)]
    pub max_level: i64,
    /// Only pairs with this λ.
    #[arg(long)]
    pub lambda: Option<Weight>,
    /// Only pairs with this μ.
    #[arg(long)]
    pub mu: Option<Weight>,
    /// Skip μ = 0.
    #[arg(long)]
    pub nontrivial: bool,
    /// Write all reports to this file.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidType { .. }
        | Error::Parse { .. }
        | Error::DimensionMismatch { .. }
        | Error::IndexOutOfRange { .. }
        | Error::NotDominant(_)
        | Error::NotInAlcove { .. }
        | Error::InvalidLevel(_)
        | Error::NotDominating { .. }
        | Error::DimensionCap { .. }
        | Error::OrbitCap { .. } => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn algebra(kind: SimpleType) -> Result<AlgebraData> {
    AlgebraData::with_limits(kind, Limits::from_env()?)
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Internal(format!("i/o: {e}"))
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Tensor {
            algebra: kind,
            lambda,
            mu,
            table,
        } => {
            let alg = algebra(kind)?;
            let product = alg.tensor_decompose(&lambda, &mu)?;
            if table {
                for (nu, c) in product.iter().rev() {
                    writeln!(out, "{c} V({nu})  dim {}", alg.dimension_exact(nu)?).map_err(io_err)?;
                }
                writeln!(out, "total dim {}", product.dimension(&alg)?).map_err(io_err)?;
            } else {
                writeln!(out, "{}", product.to_string_descending()).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Fusion {
            algebra: kind,
            level,
            lambda,
            mu,
        } => {
            let alg = algebra(kind)?;
            writeln!(out, "{}", alg.fusion_product(&lambda, &mu, level)?).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Algebra { algebra: kind } => {
            let mut dump = algebra(kind)?.debug_dump();
            dump["schema"] = json!(SCHEMA_VERSION);
            writeln!(out, "{}", serde_json::to_string_pretty(&dump).map_err(io_err)?).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::PrvSweep(args) => prv_sweep(args, out, err),
    }
}

fn prv_sweep(args: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if args.min_level < 1 {
        return Err(Error::InvalidLevel(args.min_level));
    }
    if args.max_level < args.min_level {
        return Err(Error::Parse {
            what: "level range",
            input: format!("{}..={}", args.min_level, args.max_level),
        });
    }
    let filter = SweepFilter {
        lambda: args.lambda.clone(),
        mu: args.mu.clone(),
        nontrivial: args.nontrivial,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = args.jobs {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(io_err)?;

    let mut reports = Vec::new();
    for &kind in &args.series {
        let alg = algebra(kind)?;
        for w in [&filter.lambda, &filter.mu].into_iter().flatten() {
            if w.rank() != alg.rank() {
                return Err(Error::DimensionMismatch {
                    expected: alg.rank(),
                    found: w.rank(),
                });
            }
        }
        reports.extend(pool.install(|| alg.sweep(args.min_level..=args.max_level, &filter))?);
    }
    let summary = SweepSummary::from_reports(&reports);

    if let Some(path) = &args.output {
        let file = File::create(path).map_err(io_err)?;
        let mut sink = BufWriter::new(file);
        match args.format {
            Format::Json => write_json(&mut sink, &args, &summary, &reports)?,
            Format::Csv => write_csv(&mut sink, &reports)?,
        }
        sink.flush().map_err(io_err)?;
    }

    for r in reports.iter().filter(|r| !r.ok()) {
        writeln!(err, "{}", serde_json::to_string(r).map_err(io_err)?).map_err(io_err)?;
    }
    let line = if summary.failures > 0 {
        format!("{} of {} pairs failed", summary.failures, summary.applicable_pairs)
    } else if summary.applicable_pairs == 0 {
        "0 applicable pairs".to_string()
    } else {
        format!(
            "all {} pairs passed ({} PRV components verified, {} proposition witnesses)",
            summary.applicable_pairs, summary.prv_components, summary.witnesses
        )
    };
    writeln!(out, "{line}").map_err(io_err)?;
    Ok(if summary.failures > 0 { EXIT_FAILED } else { EXIT_OK })
}

fn write_json(sink: &mut dyn Write, args: &SweepArgs, summary: &SweepSummary, reports: &[PRVReport]) -> Result<()> {
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "algebras": args.series.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "min_level": args.min_level,
        "max_level": args.max_level,
        "summary": summary,
        "reports": reports,
    });
    serde_json::to_writer_pretty(&mut *sink, &doc).map_err(io_err)?;
    writeln!(sink).map_err(io_err)
}

#[derive(serde::Serialize)]
struct CsvRow<'a> {
    algebra: &'a str,
    level: i64,
    lambda: String,
    mu: String,
    applicable: bool,
    prv_components: usize,
    min_multiplicity: Option<i64>,
    max_multiplicity: Option<i64>,
    witnesses: usize,
    proposition_holds: bool,
    explicit_matches: bool,
    passed: bool,
}

fn write_csv(sink: &mut dyn Write, reports: &[PRVReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    for r in reports {
        let mults = r.fusion_multiplicities.iter().map(|c| c.multiplicity);
        w.serialize(CsvRow {
            algebra: &r.algebra,
            level: r.level,
            lambda: r.lambda.to_string(),
            mu: r.mu.to_string(),
            applicable: r.applicable,
            prv_components: r.prv_weights_in_p_ell.len(),
            min_multiplicity: mults.clone().min(),
            max_multiplicity: mults.max(),
            witnesses: r.proposition_witnesses.len(),
            proposition_holds: r.proposition_holds,
            explicit_matches: r.explicit_matches,
            passed: r.passed,
        })
        .map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
