use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use signed_search::SubgraphDescriptor;
use signed_search_cli::{
    cmd_classical, cmd_fig2, cmd_simulate, cmd_spectrum, cmd_speedup, cmd_verify, resolve_subgraph,
    CliError, CliResult, ExperimentConfig,
};

#[derive(Parser)]
#[command(
    name = "signed-search",
    version,
    about = "Signed-graph quantum walk search on complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the walk from the uniform state and write the finding-probability series.
    Simulate(RunArgs),
    /// Exact classical hitting time, with an optional Monte-Carlo estimate.
    Classical(RunArgs),
    /// Check every bound on one instance and write the ledger.
    Verify(RunArgs),
    /// Spectrum of the discriminant matrix and its principal pair.
    Spectrum(RunArgs),
    /// P2, P3 and P4 marked in K_100, 100 steps each.
    Fig2 {
        #[arg(long, default_value = "results")]
        out: PathBuf,
    },
    /// Scaling table of t_f and t_c over several n.
    Speedup {
        /// Comma-separated host sizes, e.g. 64,128,256.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        n_list: Vec<usize>,
        /// Descriptor JSON or a path to one; defaults to a single edge.
        #[arg(long)]
        subgraph: Option<String>,
        #[arg(long, default_value = "results")]
        out: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Load a persisted config.json; other flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Host graph is K_(n+1).
    #[arg(long)]
    n: Option<usize>,
    /// Descriptor JSON (e.g. '{"kind":"path","k":2}') or a path to one.
    #[arg(long)]
    subgraph: Option<String>,
    #[arg(long)]
    t_max: Option<u64>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn into_config(self) -> CliResult<ExperimentConfig> {
        let mut config = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Config(format!("cannot read {}: {e}", path.display()))
                })?;
                ExperimentConfig::from_json(&text)?
            }
            None => {
                let n = self
                    .n
                    .ok_or_else(|| CliError::Config("--n is required".into()))?;
                let subgraph = self
                    .subgraph
                    .as_deref()
                    .ok_or_else(|| CliError::Config("--subgraph is required".into()))?;
                ExperimentConfig::new(n, resolve_subgraph(subgraph)?)
            }
        };
        if self.config.is_some() {
            if let Some(n) = self.n {
                config.n = n;
            }
            if let Some(s) = &self.subgraph {
                config.subgraph = resolve_subgraph(s)?;
            }
        }
        if self.t_max.is_some() {
            config.t_max = self.t_max;
        }
        if let Some(trials) = self.trials {
            config.trials = trials;
        }
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(out) = self.out {
            config.output_dir = out;
        }
        config.validate()?;
        Ok(config)
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Simulate(args) => print_json(&cmd_simulate(&args.into_config()?)?),
        Command::Classical(args) => print_json(&cmd_classical(&args.into_config()?)?),
        Command::Verify(args) => {
            let (report, _) = cmd_verify(&args.into_config()?)?;
            print_json(&report);
        }
        Command::Spectrum(args) => print_json(&cmd_spectrum(&args.into_config()?)?),
        Command::Fig2 { out } => print_json(&cmd_fig2(&out)?),
        Command::Speedup {
            n_list,
            subgraph,
            out,
        } => {
            let subgraph = match subgraph {
                Some(s) => resolve_subgraph(&s)?,
                None => SubgraphDescriptor::Edges {
                    edges: vec![[0, 1]],
                },
            };
            print_json(&cmd_speedup(&n_list, &subgraph, &out)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!(
                "{}",
                serde_json::to_string_pretty(&e.to_json()).expect("serializable")
            );
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
