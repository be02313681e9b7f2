use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dynpanel_cli::pipeline::DEFAULT_SEED;
use dynpanel_cli::{run, CliError, RunConfig, RunOptions, Stage};

/// Dynamic panel analysis: descriptive statistics, panel unit-root and
/// Granger non-causality tests, and difference/system GMM estimation.
#[derive(Parser)]
#[command(name = "dynpanel", version)]
struct Cli {
    /// TOML run configuration; the built-in replication run when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true, default_value = "dynpanel-out")]
    out: PathBuf,
    /// Never touch the network; fetches must be served from the cache.
    #[arg(long, global = true)]
    offline: bool,
    /// Seed for the synthetic fixture, overriding the config.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load, classify and transform the data; writes panel.csv.
    Ingest,
    /// Descriptive statistics table.
    Describe,
    /// LLC and IPS panel unit-root tests.
    Unitroot,
    /// Dumitrescu–Hurlin Granger non-causality tests.
    Causality,
    /// GMM estimation with specification tests.
    Estimate,
    /// Every stage of the configured run.
    Replicate,
    /// Print the built-in replication configuration as TOML.
    ShowConfig,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stages = match cli.command {
        Command::Ingest => vec![Stage::Ingest],
        Command::Describe => vec![Stage::Describe],
        Command::Unitroot => vec![Stage::UnitRoot],
        Command::Causality => vec![Stage::Causality],
        Command::Estimate => vec![Stage::Estimate],
        Command::Replicate => Stage::ALL.to_vec(),
        Command::ShowConfig => {
            print!("{}", RunConfig::replication(cli.seed.unwrap_or(DEFAULT_SEED)).to_toml());
            return ExitCode::SUCCESS;
        }
    };
    let code = match execute(&cli, stages) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn execute(cli: &Cli, stages: Vec<Stage>) -> Result<i32, CliError> {
    let cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::replication(cli.seed.unwrap_or(DEFAULT_SEED)),
    };
    let opts = RunOptions {
        out: cli.out.clone(),
        offline: cli.offline,
        seed: cli.seed,
        stages,
        base_dir: cli.config.as_ref().and_then(|p| p.parent()).map(PathBuf::from),
    };
    let summary = run(&cfg, &opts)?;
    for e in &summary.errors {
        eprintln!("error: {e}");
    }
    println!(
        "wrote {} files to {}: {} errors, {} warnings (see run.log)",
        summary.files.len(),
        cli.out.display(),
        summary.errors.len(),
        summary.warnings.len()
    );
    Ok(summary.exit_code())
}
