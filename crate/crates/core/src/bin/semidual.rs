use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use semidual::cli::{format_session, parse_session, run_corpus, run_session, session_exit_code, shipped_corpus, RunOutcome};
use semidual::Error;

#[derive(Parser)]
#[command(name = "semidual", version, about = "Verify semidualizing-module identities on graded examples")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every `run` block of a session file.
    Run {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the shipped corpus and compare against its expectations.
    Corpus {
        /// Only entries whose name contains PAT.
        #[arg(long, value_name = "PAT")]
        filter: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print a session file in canonical layout.
    Fmt { file: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("semidual: {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("semidual: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn print_text(runs: &[RunOutcome]) {
    for r in runs {
        println!("{}: exit {}", r.command, r.exit_code);
        if let Some(m) = r.report.as_object() {
            for (k, v) in m {
                println!("  {k}: {v}");
            }
        }
        for e in &r.expectations {
            let tag = e.provenance.map_or(String::new(), |p| format!(" [{}]", p.name()));
            let status = if e.passed { "pass" } else { "FAIL" };
            println!("  expect {} = {}{tag}: {status}", e.key, e.expected);
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match args.cmd {
        Cmd::Run { file, json } => {
            let src = match read(&file) {
                Ok(s) => s,
                Err(c) => return c,
            };
            let runs = match parse_session(&src).and_then(|s| run_session(&s)) {
                Ok(r) => r,
                Err(e) => return fail(&e),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&runs).expect("reports serialize"));
            } else {
                print_text(&runs);
            }
            ExitCode::from(session_exit_code(&runs) as u8)
        }
        Cmd::Corpus { filter, json } => match run_corpus(&shipped_corpus(), filter.as_deref()) {
            Ok(summary) => {
                if json {
                    println!("{}", summary.to_json());
                } else {
                    print!("{}", summary.to_table());
                }
                ExitCode::from(summary.exit_code() as u8)
            }
            Err(e) => fail(&e),
        },
        Cmd::Fmt { file } => {
            let src = match read(&file) {
                Ok(s) => s,
                Err(c) => return c,
            };
            match parse_session(&src) {
                Ok(s) => {
                    print!("{}", format_session(&s));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
    }
}
