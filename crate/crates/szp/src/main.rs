use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use szp::cert;

#[derive(Parser)]
#[command(
    name = "szp",
    version,
    about = "Exact toolkit for transversal-critical graphs, weighted pair systems, \
             and forced clique configurations in 3-uniform hypergraphs",
    after_help = "Every command prints a JSON certificate to stdout and a claim \
                  summary to stderr; the exit code is 0 exactly when no claim FAILs. \
                  Usage problems exit with 2 before any certificate is produced."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the order bound C(m+2,2) for one deficiency m.
    Verify {
        /// Deficiency m = order minus clique number; 2, 3, or 4.
        #[arg(long)]
        m: usize,
    },
    /// Build and check the order-15 construction with clique number 11.
    Extremal {
        /// Write the hypergraph as a triple-list file.
        #[arg(long)]
        export: Option<PathBuf>,
        /// Also verify the privacy structure of the pair system.
        #[arg(long)]
        check_private_pairs: bool,
    },
    /// Exhaustively search clique configurations at a given order.
    Oracle {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Deficiency; the members have n - m vertices each.
        #[arg(long)]
        m: usize,
    },
    /// List the critical graphs at a transversal number, with bounds.
    EnumerateCritical {
        /// Transversal number, 1 through 5.
        #[arg(long)]
        tau: usize,
    },
    /// Enumerate the deficiency-4 candidate table.
    Candidates {
        /// Deficiency; only 4 has a case table.
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Write one DOT file per candidate into this directory.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        /// Diff the per-class bound multisets against this JSON file.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Recompute every claim of a stored certificate and compare.
    CheckCert {
        /// Path to a certificate produced by another command.
        path: PathBuf,
    },
}

fn run(command: &Command) -> Result<cert::Certificate, String> {
    match command {
        Command::Verify { m } => cert::run_verify(*m),
        Command::Extremal {
            export,
            check_private_pairs,
        } => {
            if let Some(path) = export {
                let (h, _) = szp::realize::extremal_construct();
                std::fs::write(path, h.to_triple_list())
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            cert::run_extremal(export.as_deref(), *check_private_pairs)
        }
        Command::Oracle { n, m } => cert::run_oracle(*n, *m),
        Command::EnumerateCritical { tau } => cert::run_enumerate_critical(*tau),
        Command::Candidates {
            m,
            emit_dot,
            golden,
        } => {
            if let Some(dir) = emit_dot {
                std::fs::create_dir_all(dir)
                    .map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
                for (name, body) in cert::candidate_dot_files() {
                    let file = dir.join(name);
                    std::fs::write(&file, body)
                        .map_err(|e| format!("cannot write {}: {e}", file.display()))?;
                }
            }
            cert::run_candidates(*m, emit_dot.as_deref(), golden.as_deref())
        }
        Command::CheckCert { path } => cert::run_check(path),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(certificate) => {
            let json = certificate.to_json();
            let pretty = serde_json::to_string_pretty(&json).expect("serializable");
            // A reader that closes the pipe early (szp ... | head) must not
            // kill the run; the exit code still carries the verdict.
            if let Err(e) = writeln!(std::io::stdout(), "{pretty}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: cannot write certificate: {e}");
                    return ExitCode::from(2);
                }
            }
            for claim in &certificate.claims {
                eprintln!("{}: {}", claim.name, claim.status);
            }
            let findings = certificate.findings().len();
            let verdict = if certificate.passed() { "PASS" } else { "FAIL" };
            eprintln!(
                "result: {verdict} ({} claims, {findings} findings, {} ms)",
                certificate.claims.len(),
                certificate.runtime_ms
            );
            if certificate.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
