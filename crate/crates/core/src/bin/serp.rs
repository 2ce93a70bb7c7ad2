use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serpentine::error::SerpError;
use serpentine::fusion::ZChoice;
use serpentine::harness::{run_subcommand, OutputFormat, RunConfig, SUBCOMMANDS};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ZArg {
    Consecutive,
    Shifted,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
    Pretty,
}

/// Exact verification of tableau, fusion and free-boson identities.
#[derive(Debug, Parser)]
#[command(name = "serp", version)]
struct Cli {
    /// Subcommand to run.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUBCOMMANDS))]
    subcommand: String,

    /// Number of cells / tensor factors (a single value instead of the default range).
    #[arg(long)]
    n: Option<usize>,

    /// Box size for the vertex-operator and singular-vector checks.
    #[arg(long)]
    k: Option<usize>,

    /// Degree bound for symmetric-function computations.
    #[arg(long = "degree", default_value_t = 12)]
    degree: u32,

    /// Largest N for fusion-check when --n is absent.
    #[arg(long, default_value_t = 12)]
    n_max: usize,

    /// Largest k when --k is absent.
    #[arg(long, default_value_t = 3)]
    k_max: usize,

    /// Evaluation points: 1..N or N+1..2N.
    #[arg(long, value_enum, default_value = "consecutive")]
    z: ZArg,

    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,

    /// Directory of golden reports to diff against.
    #[arg(long)]
    corpus: Option<PathBuf>,

    /// With --corpus, rewrite the golden reports.
    #[arg(long, requires = "corpus")]
    bless: bool,

    /// Level of the tableau set T^(L) listed by `serpentine`.
    #[arg(long)]
    seed_level: Option<usize>,

    /// Record elapsed wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        degree_bound: cli.degree,
        n_max: cli.n_max,
        k_max: cli.k_max,
        n: cli.n,
        k: cli.k,
        z_choice: match cli.z {
            ZArg::Consecutive => ZChoice::Consecutive,
            ZArg::Shifted => ZChoice::Shifted,
        },
        output_format: match cli.format {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Tsv => OutputFormat::Tsv,
            FormatArg::Pretty => OutputFormat::Pretty,
        },
        corpus: cli.corpus,
        bless: cli.bless,
        seed_level: cli.seed_level,
        timing: cli.timing,
    };
    match run_subcommand(&cli.subcommand, &config) {
        Ok(report) => {
            print!("{}", report.render(config.output_format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e @ SerpError::VerificationFailed { .. }) => {
            eprintln!("serp: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("serp: {e}");
            ExitCode::from(2)
        }
    }
}
