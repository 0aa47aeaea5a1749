//! Thin command-line front end: argument parsing and dispatch into the
//! library's command layer. All real work, including JSON serialization,
//! lives in `coverscan::io`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coverscan::io::{self, CmdOutcome};
use coverscan::Metric;

/// Image cover analysis: cover decisions, minimal covers, and Wang tilings.
///
/// Inputs are grid files (`H W` header, then H rows of W tokens) or plain
/// PGM (`P2`); the format is sniffed from the content. All coordinates in
/// the JSON output are 0-based (row, col). The COVERSCAN_THREADS environment
/// variable caps internal parallelism (0 = sequential, the default).
#[derive(Parser)]
#[command(name = "coverscan", version, about, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Area,
    L1,
    Linf,
}

impl From<MetricArg> for Metric {
    fn from(arg: MetricArg) -> Metric {
        match arg {
            MetricArg::Area => Metric::Area,
            MetricArg::L1 => Metric::L1,
            MetricArg::Linf => Metric::Linf,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the top-left h x w sub-image covers the text.
    ///
    /// The candidate shape comes from --dims or from a pattern file; a
    /// pattern that differs from the text's top-left sub-image cannot cover
    /// it and is rejected with a reason. Exit code: 0 covered, 1 not
    /// covered, 2 input error.
    #[command(verbatim_doc_comment)]
    Check {
        /// Text image (grid or PGM file).
        text: PathBuf,
        /// Candidate pattern image; must equal the text's top-left corner.
        #[arg(conflicts_with = "dims")]
        pattern: Option<PathBuf>,
        /// Candidate shape as HEIGHT WIDTH.
        #[arg(long, num_args = 2, value_names = ["H", "W"])]
        dims: Option<Vec<usize>>,
    },
    /// Find the metric-minimal cover of an image.
    Mincover {
        /// Text image (grid or PGM file).
        text: PathBuf,
        /// Evaluation metric ordering the candidates.
        #[arg(long, value_enum, default_value_t = MetricArg::Area)]
        metric: MetricArg,
        /// Check candidates in metric order without pruning.
        #[arg(long)]
        no_prune: bool,
        /// Include pruning statistics in the report.
        #[arg(long)]
        stats: bool,
    },
    /// Report every covering prefix length of a string (one symbol per char).
    Covers1d {
        string: String,
    },
    /// Operations on Wang tiling files.
    Wang {
        #[command(subcommand)]
        action: WangAction,
    },
}

#[derive(Subcommand)]
enum WangAction {
    /// Validate tile definitions and edge adjacency.
    Check { file: PathBuf },
    /// Smallest tile-aligned cover, in tile units.
    Mincover { file: PathBuf },
}

fn run(cli: Cli) -> coverscan::Result<CmdOutcome> {
    match cli.command {
        Command::Check {
            text,
            pattern,
            dims,
        } => {
            let dims = dims.map(|d| (d[0], d[1]));
            io::cmd_check(&text, pattern.as_deref(), dims)
        }
        Command::Mincover {
            text,
            metric,
            no_prune,
            stats,
        } => io::cmd_mincover(
            &text,
            &metric.into(),
            no_prune,
            stats,
            io::threads_from_env(),
        ),
        Command::Covers1d { string } => io::cmd_covers1d(&string),
        Command::Wang { action } => match action {
            WangAction::Check { file } => io::cmd_wang_check(&file),
            WangAction::Mincover { file } => io::cmd_wang_mincover(&file),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            println!("{}", outcome.stdout);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
