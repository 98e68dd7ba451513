//! Thin command-line front end over the library's `cli` module.
//!
//! Exit codes: 0 = success/golden match, 1 = golden mismatch,
//! 2 = usage error, 3 = guard violation.

use clap::{Parser, Subcommand, ValueEnum};
use depthzero::cli::{
    cmd_enumerate, cmd_golden, cmd_hecke, cmd_lfactor, cmd_packets, parse_case, CliError,
    Emission, EtaSpec, RunConfig, Shape,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Emit {
    Md,
    Json,
}

#[derive(Parser)]
#[command(name = "depthzero", about = "Exact depth-zero packet combinatorics", version)]
struct Args {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Md)]
    emit: Emit,
    /// Test-data directory (overrides DEPTHZERO_DATA_DIR).
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
    /// Value modulus N for Weil-character values (even).
    #[arg(long, global = true)]
    value_modulus: Option<u64>,
    /// Seed recorded for sampling sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the packet tables (golden-checked when unfiltered).
    Packets {
        /// Restrict to one parameter shape: irreducible | split.
        #[arg(long)]
        shape: Option<String>,
    },
    /// Centralizer walls and principal-series reducibility for a case.
    Hecke {
        /// Parahoric case: plus | minus | dagger | ddagger.
        #[arg(long)]
        case: String,
        /// Rank parameter (1 or 2; only the plus case depends on it).
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        q: u64,
    },
    /// Enumerate discrete-parameter classes of dimension 2n.
    Enumerate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
    },
    /// L-factor of a tame-character pair, with optional reports.
    Lfactor {
        #[arg(long)]
        q: u64,
        /// First character as d:inertia:frob.
        #[arg(long)]
        eta1: String,
        /// Second character as d:inertia:frob (defaults to eta1).
        #[arg(long)]
        eta2: Option<String>,
        /// Include the Sym²-term invariant report.
        #[arg(long)]
        sym2: bool,
        /// Run the packet-agreement pipeline.
        #[arg(long)]
        packets_agree: bool,
    },
    /// Verify all golden files (or regenerate them with --write).
    Golden {
        #[arg(long)]
        write: bool,
    },
}

fn run(args: &Args) -> Result<Emission, CliError> {
    let cfg = RunConfig {
        data_dir: args.data_dir.clone(),
        value_modulus: args.value_modulus,
        seed: args.seed,
    };
    match &args.command {
        Command::Packets { shape } => {
            let shape = shape.as_deref().map(Shape::parse).transpose()?;
            cmd_packets(&cfg, shape)
        }
        Command::Hecke { case, m, q } => cmd_hecke(&cfg, parse_case(case)?, *m, *q),
        Command::Enumerate { q, n } => cmd_enumerate(&cfg, *q, *n),
        Command::Lfactor { q, eta1, eta2, sym2, packets_agree } => {
            let e1 = EtaSpec::parse(eta1)?;
            let e2 = eta2.as_deref().map(EtaSpec::parse).transpose()?;
            cmd_lfactor(&cfg, *q, e1, e2, *sym2, *packets_agree)
        }
        Command::Golden { write } => cmd_golden(&cfg, *write),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(emission) => {
            match args.emit {
                Emit::Md => println!("{}", emission.markdown),
                Emit::Json => println!("{}", serde_json::to_string_pretty(&emission.json).unwrap()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
