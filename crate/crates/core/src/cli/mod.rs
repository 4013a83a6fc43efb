//! The session language: `ring`, `module` and `run` blocks, their
//! pretty-printer, command dispatch and the shipped corpus.
//!
//! ```text
//! ring R { char 101; vars x y; }
//! module k over R = residue();
//! run verify-ab(R, k) {
//!   expect c_dim = 2 trivial "Koszul complex";
//! }
//! ```

mod ast;
mod corpus;
mod parser;
mod printer;
mod session;

pub use ast::*;
pub use corpus::{run_corpus, shipped_corpus, CorpusEntry, CorpusSummary, EntryResult};
pub use parser::parse_session;
pub use printer::format_session;
pub use session::{
    error_report, execute, run_command, run_config, run_session, session_exit_code, Env, ExpectOutcome, RunConfig,
    RunOutcome,
};

#[cfg(test)]
mod tests;
