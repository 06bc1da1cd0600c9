mod catalog;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use report::RunReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Homomorphism,
    Preceq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

/// Validate finite systems and module systems, compute negated tensor
/// products and verify Morita-context statements on concrete instances.
///
/// Exit codes: 0 success, 1 a checked property fails (or a bound was hit),
/// 2 malformed input.
#[derive(Debug, Parser)]
#[command(name = "sysalg", version)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Morphism-search budget (value assignments tried).
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub node_bound: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every axiom check applicable to a structure file.
    Check { file: PathBuf },
    /// Negated tensor product of a right and a left module over a ground system.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        ground: PathBuf,
        /// Class cap [default: $SYSALG_MAX_CLASSES, else 20000].
        #[arg(long)]
        cap: Option<usize>,
        /// Write the presentation as a structure file.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Enumerate morphisms between two modules.
    Homs {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, value_enum, default_value = "homomorphism")]
        kind: KindArg,
        /// Scalar side respected [default: the source's acting side].
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        /// Print every morphism.
        #[arg(long)]
        list: bool,
    },
    /// Trace ideal of a module in its ground.
    Trace {
        module: PathBuf,
        /// Use ≼-morphisms instead of homomorphisms.
        #[arg(long)]
        preceq: bool,
    },
    /// Decide whether a module is a ≼-generator, three ways.
    Generator {
        module: PathBuf,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
    },
    /// Dual-basis search and lifting check.
    Projective {
        module: PathBuf,
        #[arg(long, default_value_t = 4)]
        t_max: usize,
        /// Extra modules for the lifting check (regular, zero and the module itself are always included).
        #[arg(long)]
        pool: Vec<PathBuf>,
        #[arg(long, default_value_t = 10_000_000)]
        work_bound: u64,
    },
    /// Validate a Morita context and its matrix semiring.
    MoritaCheck { context: PathBuf },
    /// Verify the Morita statements on a context.
    Verify {
        context: PathBuf,
        #[arg(long)]
        mor1: bool,
        #[arg(long)]
        morplus: bool,
        /// Also verify the context with the roles of (A, M) and (A', M') exchanged.
        #[arg(long)]
        swap: bool,
        /// Treat an unmet hypothesis as a failure.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = 4)]
        t_max: usize,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// Class cap [default: $SYSALG_MAX_CLASSES, else 20000].
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Built-in structures.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    /// List the built-in structures.
    List,
    /// Emit a built-in structure as a structure file.
    Dump {
        name: String,
        /// Write to a file instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut command = vec!["sysalg".to_string()];
    command.extend(std::env::args().skip(1));
    let started = Instant::now();
    let mut report = RunReport::new(command);
    if let Some(doc) = commands::run(&cli, &mut report) {
        // `corpus dump` to stdout prints the document alone.
        print!("{doc}");
        return ExitCode::from(report.exit_code as u8);
    }
    report.elapsed_ms = started.elapsed().as_millis();
    match cli.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code as u8)
}
