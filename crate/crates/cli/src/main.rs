//! `bks`: exact reports on BKS proofs from real Pauli eigenstates.
//!
//! Exit status: 0 verified or found, 1 colorable or not found, 2 input error.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bks_core::proofs::SearchParams;
use clap::{ArgGroup, Parser, Subcommand};

use commands::{AutTarget, ProofSource};
use report::{render, Format, Header, Status};

#[derive(Parser, Debug)]
#[command(name = "bks", version, about = "Exact enumeration and verification of small BKS proofs")]
struct Cli {
    /// Output format; `distances` defaults to csv, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for randomized commands; recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the ray catalog.
    Rays {
        #[arg(long)]
        qubits: usize,
        /// Regenerate from the joint eigenbases of the magic configuration.
        #[arg(long)]
        generated: bool,
    },
    /// List the complete orthogonal bases of a catalog.
    Bases {
        #[arg(long)]
        qubits: usize,
    },
    /// Squared-distance classes with pair counts.
    Distances {
        #[arg(long)]
        qubits: Option<usize>,
        /// Restrict the pair counts to the bases of a proof.
        #[arg(long)]
        proof: Option<PathBuf>,
    },
    /// Enumerate and classify parity proofs.
    ParityProofs {
        #[arg(long)]
        qubits: usize,
        /// List the proofs of one type, e.g. 18-9 or 22-13B.
        #[arg(long = "type")]
        proof_type: Option<String>,
    },
    /// Decide whether a set of bases admits a coloring.
    #[command(group(ArgGroup::new("input").required(true).args(["proof_file", "paper_proof"])))]
    Verify {
        proof_file: Option<PathBuf>,
        #[arg(long)]
        paper_proof: Option<String>,
    },
    /// Basis and ray criticality of a non-colorable set.
    #[command(group(ArgGroup::new("input").required(true).args(["proof_file", "paper_proof"])))]
    Critical {
        proof_file: Option<PathBuf>,
        #[arg(long)]
        paper_proof: Option<String>,
    },
    /// Randomized search for a four-qubit proof.
    Search4q {
        /// Partition nodes examined per restart.
        #[arg(long, default_value_t = SearchParams::default().budget)]
        budget: u64,
        #[arg(long, default_value_t = SearchParams::default().restarts)]
        restarts: usize,
        /// Write the found proof as a proof file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Automorphism group order of a configuration or crossing graph.
    #[command(group(ArgGroup::new("graph").required(true).args(["config", "crossing", "paper_proof", "family"])))]
    Aut {
        /// square2q, pentagram3q or rectangle4q.
        #[arg(long)]
        config: Option<String>,
        /// Proof file, or a JSON array of proof files.
        #[arg(long)]
        crossing: Option<PathBuf>,
        /// Crossing graph of a named reference proof's bases.
        #[arg(long)]
        paper_proof: Option<String>,
        /// Crossing graph of a reference proof family: square or proofsbis.
        #[arg(long)]
        family: Option<String>,
        /// Shared elements that make two vertices adjacent.
        #[arg(long)]
        overlap: Option<usize>,
    },
    /// Histogram tables per proof type.
    EmitTables {
        #[arg(long)]
        qubits: usize,
    },
    /// Emit a reference proof in printed basis order.
    PaperProof {
        #[arg(long)]
        name: String,
    },
}

impl Command {
    fn default_format(&self) -> Format {
        match self {
            Command::Distances { .. } => Format::Csv,
            _ => Format::Text,
        }
    }

    fn supports_csv(&self) -> bool {
        matches!(
            self,
            Command::Rays { .. }
                | Command::Bases { .. }
                | Command::Distances { .. }
                | Command::ParityProofs { .. }
                | Command::EmitTables { .. }
        )
    }
}

fn proof_source<'a>(file: &'a Option<PathBuf>, name: &'a Option<String>) -> ProofSource<'a> {
    match (file, name) {
        (Some(path), _) => ProofSource::File(path),
        (None, Some(name)) => ProofSource::Named(name),
        (None, None) => unreachable!("clap enforces one input"),
    }
}

fn run(cli: &Cli) -> commands::CmdResult {
    match &cli.command {
        Command::Rays { qubits, generated } => commands::rays(*qubits, *generated),
        Command::Bases { qubits } => commands::bases(*qubits),
        Command::Distances { qubits, proof } => commands::distances(*qubits, proof.as_deref()),
        Command::ParityProofs { qubits, proof_type } => commands::parity_proofs(*qubits, proof_type.as_deref()),
        Command::Verify { proof_file, paper_proof } => commands::verify(&proof_source(proof_file, paper_proof)),
        Command::Critical { proof_file, paper_proof } => commands::critical(&proof_source(proof_file, paper_proof)),
        Command::Search4q { budget, restarts, out } => {
            if *budget == 0 || *restarts == 0 {
                return Err("--budget and --restarts must be positive".into());
            }
            let params = SearchParams { budget: *budget, restarts: *restarts };
            commands::search4q(cli.seed, params, out.as_deref())
        }
        Command::Aut { config, crossing, paper_proof, family, overlap } => {
            let need_overlap = || overlap.ok_or_else(|| "--overlap is required for crossing graphs".to_string());
            let target = match (config, crossing, paper_proof, family) {
                (Some(c), ..) => AutTarget::Config(c),
                (_, Some(path), ..) => AutTarget::Crossing(path, need_overlap()?),
                (_, _, Some(name), _) => AutTarget::Named(name, need_overlap()?),
                (.., Some(name)) => AutTarget::Family(name, need_overlap()?),
                _ => unreachable!("clap enforces one graph"),
            };
            commands::aut(&target)
        }
        Command::EmitTables { qubits } => commands::emit_tables(*qubits),
        Command::PaperProof { name } => commands::paper_proof(name),
    }
}

/// Caps the rayon pool from `BKS_THREADS`.
fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("BKS_THREADS") else { return Ok(()) };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("BKS_THREADS must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let header = Header { command: std::iter::once("bks".to_string()).chain(args).collect::<Vec<_>>().join(" "), seed: cli.seed };
    let format = cli.format.unwrap_or_else(|| cli.command.default_format());
    let checked = if format == Format::Csv && !cli.command.supports_csv() {
        Err("csv output is not available for this command".to_string())
    } else {
        configure_threads()
    };
    match checked.and_then(|()| run(&cli)) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(render(&header, format, &report).as_bytes()).is_err() {
                return ExitCode::from(Status::InputError as u8);
            }
            ExitCode::from(report.status as u8)
        }
        Err(message) => {
            eprintln!("bks: {message}");
            ExitCode::from(Status::InputError as u8)
        }
    }
}
