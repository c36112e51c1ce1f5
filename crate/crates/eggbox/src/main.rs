//! Thin command-line wrapper around [`eggbox::cli`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use eggbox::cli::{run, CommandKind, RunConfig};

#[derive(Parser)]
#[command(
    name = "eggbox",
    about = "Exact Green's relations and idempotent-manifold dimensions in linear matrix monoids",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Monoid spec file (JSON).
    #[arg(long)]
    monoid: Option<PathBuf>,
    /// Input file (JSON); shape depends on the command.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Seed for every randomized sub-task of the run.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trial count for randomized checks and default sample size.
    #[arg(long, default_value_t = 16)]
    trials: usize,
    /// Where to write the JSON result; omit to skip the file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension reports for a list of idempotents.
    Dims(CommonArgs),
    /// L/R/H/D verdicts for pairs of members, with conjugacy witnesses.
    Classify(CommonArgs),
    /// Run the property suite on a monoid or the built-in families.
    Verify(CommonArgs),
    /// Sample Green classes of the input elements.
    Sample(CommonArgs),
    /// Regularity spot check of the monoid.
    Regularity(CommonArgs),
}

fn main() {
    let cli = Cli::parse();
    let (kind, args) = match cli.command {
        Command::Dims(args) => (CommandKind::Dims, args),
        Command::Classify(args) => (CommandKind::Classify, args),
        Command::Verify(args) => (CommandKind::Verify, args),
        Command::Sample(args) => (CommandKind::Sample, args),
        Command::Regularity(args) => (CommandKind::Regularity, args),
    };
    let config = RunConfig {
        monoid_path: args.monoid,
        input_path: args.input,
        seed: args.seed,
        trials: args.trials,
        out_path: args.out,
    };
    std::process::exit(run(kind, &config));
}
