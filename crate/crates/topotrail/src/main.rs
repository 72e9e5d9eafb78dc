use std::path::PathBuf;
use std::process::exit;

use clap::{Args, Parser, Subcommand};

use topotrail::cli::{self, CommandKind};

/// Topological signatures for 2-D trajectories: persistence diagrams,
/// Wasserstein comparisons, barycenters, and image-based classification.
#[derive(Parser)]
#[command(name = "topotrail", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plot one trajectory and export its diagrams and persistence image.
    Analyze(RunArgs),
    /// Wasserstein distance between consecutive days of one patch.
    DistanceSeries(RunArgs),
    /// Barycenter diagram and image per maintenance period.
    Barycenters(RunArgs),
    /// Train the patch-identity classifier on persistence images.
    ClassifyPatch(RunArgs),
    /// Train the before/after-maintenance classifier.
    ClassifyMaintenance(RunArgs),
    /// Generate a synthetic trajectory dataset.
    Synth(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Experiment configuration file (`key = value` lines).
    #[arg(long)]
    config: PathBuf,
    /// Override the configured output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the configured seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Override the configured target patch.
    #[arg(long)]
    target_patch: Option<u32>,
    /// Permute labels before splitting, as a null control.
    #[arg(long)]
    shuffle_labels: bool,
}

fn dispatch(kind: CommandKind, args: RunArgs) -> topotrail::Result<()> {
    let mut config = cli::load_config(&args.config)?;
    if let Some(out) = args.out {
        config.out = out;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(target) = args.target_patch {
        config.target_patch = Some(target);
    }
    if args.shuffle_labels {
        config.shuffle_labels = true;
    }
    cli::run(kind, &config)
}

fn main() {
    let parsed = Cli::parse();
    let (kind, args) = match parsed.command {
        Command::Analyze(a) => (CommandKind::Analyze, a),
        Command::DistanceSeries(a) => (CommandKind::DistanceSeries, a),
        Command::Barycenters(a) => (CommandKind::Barycenters, a),
        Command::ClassifyPatch(a) => (CommandKind::ClassifyPatch, a),
        Command::ClassifyMaintenance(a) => (CommandKind::ClassifyMaintenance, a),
        Command::Synth(a) => (CommandKind::Synth, a),
    };
    if let Err(err) = dispatch(kind, args) {
        eprintln!("error: {err}");
        exit(err.exit_code());
    }
}
