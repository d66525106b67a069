use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sun_bch::sampling::DEFAULT_SPECTRAL_CAP;
use sun_bch::wire::Emit;
use sun_bch_cli::{
    cmd_basis, cmd_compose, cmd_similarity, cmd_verify, error_output, parse_vector, CmdOutput,
    RunConfig,
};

/// BCH composition and adjoint similarity for SU(N).
#[derive(Debug, Parser)]
#[command(name = "sun-bch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// R with exp(-iR.L) = exp(-iM.L) exp(-iN.L).
    Compose(PairArgs),
    /// N' = exp(-iM.L) N exp(iM.L).
    Similarity(PairArgs),
    /// Export structure tensors and generators.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EmitArg::All)]
        emit: EmitArg,
    },
    /// Run every property suite on seeded random instances.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_SPECTRAL_CAP)]
        spectral_cap: f64,
    },
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    n: usize,
    /// JSON array of N²−1 coordinates; drawn from --seed when omitted.
    #[arg(long, value_parser = vector)]
    m: Option<JsonVector>,
    /// JSON array of N²−1 coordinates; drawn from --seed when omitted.
    #[arg(long, value_parser = vector)]
    nvec: Option<JsonVector>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SPECTRAL_CAP)]
    spectral_cap: f64,
}

impl PairArgs {
    fn config(&self) -> RunConfig {
        RunConfig {
            n: self.n,
            seed: self.seed,
            spectral_cap: self.spectral_cap,
            ..RunConfig::default()
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EmitArg {
    F,
    D,
    Generators,
    All,
}

impl From<EmitArg> for Emit {
    fn from(e: EmitArg) -> Self {
        match e {
            EmitArg::F => Emit::F,
            EmitArg::D => Emit::D,
            EmitArg::Generators => Emit::Generators,
            EmitArg::All => Emit::All,
        }
    }
}

/// A whole JSON array in one flag value; a bare `Vec` would make clap
/// collect repeated flags instead.
#[derive(Debug, Clone)]
struct JsonVector(Vec<f64>);

fn vector(s: &str) -> Result<JsonVector, String> {
    parse_vector(s)
        .map(JsonVector)
        .map_err(|e| format!("{e:#}"))
}

fn run(command: Command) -> anyhow::Result<CmdOutput> {
    match command {
        Command::Compose(a) => cmd_compose(&a.config(), a.m.map(|v| v.0), a.nvec.map(|v| v.0)),
        Command::Similarity(a) => {
            cmd_similarity(&a.config(), a.m.map(|v| v.0), a.nvec.map(|v| v.0))
        }
        Command::Basis { n, emit } => cmd_basis(n, emit.into()),
        Command::Verify {
            n,
            seed,
            trials,
            tol,
            spectral_cap,
        } => cmd_verify(&RunConfig {
            n,
            seed,
            trials,
            tol,
            spectral_cap,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(cli.command).unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        error_output(&e)
    });
    let text = out.render();
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(out.exit_code as u8)
}
