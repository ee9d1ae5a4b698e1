mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Weight reduction and verification tools for CSS codes.
#[derive(Debug, Parser)]
#[command(name = "layerwr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Report format on stdout.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Replace every check and qubit by a surface patch (layer construction).
    Sparsify {
        input: PathBuf,
        /// Coloring file; otherwise colors come from greedy coloring.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Palette override as X,Q,Z.
        #[arg(long, value_parser = commands::parse_chi)]
        chi: Option<(usize, usize, usize)>,
        /// Greedy strategy when no coloring is given.
        #[arg(long, value_enum, default_value_t = commands::Strategy::Induced)]
        strategy: commands::Strategy,
        /// Output code file. The cell table goes next to it as `<out>.cells.tsv`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cell table path, overriding the default next to `--out`.
        #[arg(long)]
        cells: Option<PathBuf>,
        /// Emit the report and output even when a verification fails.
        #[arg(long)]
        allow_failures: bool,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// X-reduction, Z-thickening and coning.
    Hastings {
        input: PathBuf,
        /// Cone only these Z-checks, comma separated.
        #[arg(long, value_delimiter = ',')]
        partial: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        allow_failures: bool,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Print n, k, weight profile and commutation status.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Exact distance by enumeration or a seeded upper bound.
    Distance {
        input: PathBuf,
        /// X or Z; both when omitted.
        #[arg(long)]
        side: Option<layerwr::Side>,
        /// Exhaustive enumeration (the default).
        #[arg(long, conflicts_with = "search")]
        exact: bool,
        /// Number of randomized trials.
        #[arg(long, requires = "seed")]
        search: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Coexpansion constants of repetition and square complexes.
    Expansion {
        /// Repetition complex R(L), every projection width.
        #[arg(long, conflicts_with = "square")]
        rep: Option<usize>,
        /// Square complex with projection width w: L1 L2 w.
        #[arg(long, num_args = 3, value_names = ["L1", "L2", "W"])]
        square: Option<Vec<usize>>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Convert alist parity-check matrices into a code file.
    ImportAlist {
        /// Hx and Hz, or one or two classical matrices with `--hgp`.
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<PathBuf>,
        /// Build the hypergraph product of the inputs (a single input is
        /// multiplied with itself).
        #[arg(long)]
        hgp: bool,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("LAYERWR_THREADS") else {
        return Ok(());
    };
    let n: usize = v.parse().map_err(|_| format!("LAYERWR_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("LAYERWR_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    let outcome = match cli.command {
        Command::Sparsify {
            input,
            coloring,
            chi,
            strategy,
            out,
            cells,
            allow_failures,
            report,
        } => commands::sparsify(&commands::SparsifyArgs {
            input,
            coloring,
            chi,
            strategy,
            out,
            cells,
            allow_failures,
            report,
        }),
        Command::Hastings {
            input,
            partial,
            out,
            allow_failures,
            report,
        } => commands::hastings(&input, partial, out.as_deref(), allow_failures, &report),
        Command::Verify { input, report } => commands::verify(&input, report),
        Command::Distance {
            input,
            side,
            exact: _,
            search,
            seed,
            report,
        } => commands::distance(&input, side, search.zip(seed), &report),
        Command::Expansion { rep, square, report } => commands::expansion(rep, square.as_deref(), &report),
        Command::ImportAlist { inputs, hgp, name, out } => commands::import_alist(&inputs, hgp, name, out.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
