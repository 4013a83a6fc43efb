use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::ast::{Item, Session};
use super::parser::parse_session;
use super::session::{run_session, RunOutcome};
use crate::error::{Error, Result};

/// A named session file whose expectations form a regression check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub source: String,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, source: impl Into<String>) -> Self {
        CorpusEntry {
            name: name.into(),
            source: source.into(),
        }
    }

    /// Parse and require a provenance tag on every expectation.
    pub fn parse(&self) -> Result<Session> {
        let s = parse_session(&self.source).map_err(|e| match e {
            Error::Parse { line, column, message } => Error::Parse {
                line,
                column,
                message: format!("{}: {message}", self.name),
            },
            e => e,
        })?;
        for item in &s.items {
            if let Item::Run(r) = item {
                if let Some(e) = r.expects.iter().find(|e| e.provenance.is_none()) {
                    return Err(Error::Semantic(format!(
                        "{}: {}: expectation `{}` in `{}` has no provenance tag",
                        self.name,
                        r.pos,
                        e.key,
                        r.signature()
                    )));
                }
            }
        }
        Ok(s)
    }
}

const SHIPPED: &[(&str, &str)] = &[
    ("line", include_str!("../../corpus/line.sd")),
    ("plane", include_str!("../../corpus/plane.sd")),
    ("hypersurface", include_str!("../../corpus/hypersurface.sd")),
    ("semigroup", include_str!("../../corpus/semigroup.sd")),
];

/// The corpus compiled into the binary.
pub fn shipped_corpus() -> Vec<CorpusEntry> {
    SHIPPED.iter().map(|(n, s)| CorpusEntry::new(*n, *s)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryResult {
    pub name: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    pub runs: Vec<RunOutcome>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub entries: Vec<EntryResult>,
    pub passed: usize,
    pub failed: usize,
}

impl CorpusSummary {
    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }

    /// Failed expectations and unexpected errors across all entries.
    pub fn failures(&self) -> usize {
        self.entries.iter().map(|e| e.failures).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{:<16} {:>5} {:>7} {:>9}  status\n", "entry", "runs", "checks", "time");
        for e in &self.entries {
            out.push_str(&format!(
                "{:<16} {:>5} {:>7} {:>8.2}s  {}\n",
                e.name,
                e.runs.len(),
                e.checks,
                e.elapsed.as_secs_f64(),
                if e.passed { "ok".to_string() } else { format!("FAILED ({})", e.failures) }
            ));
            for r in e.runs.iter().filter(|r| !r.clean()) {
                for x in r.expectations.iter().filter(|x| !x.passed) {
                    let actual = x.actual.as_ref().map_or("<missing>".to_string(), |a| a.to_string());
                    out.push_str(&format!("    {}: {} expected {}, got {}\n", r.command, x.key, x.expected, actual));
                }
                if r.passed() {
                    out.push_str(&format!("    {}: unexpected error {}\n", r.command, r.report));
                }
            }
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

/// Run every entry whose name contains `filter`, in parallel. Entries come
/// back in input order.
pub fn run_corpus(entries: &[CorpusEntry], filter: Option<&str>) -> Result<CorpusSummary> {
    let selected: Vec<&CorpusEntry> = entries
        .iter()
        .filter(|e| filter.is_none_or(|f| e.name.contains(f)))
        .collect();
    let sessions = selected.iter().map(|e| e.parse()).collect::<Result<Vec<_>>>()?;
    let results = selected
        .par_iter()
        .zip(sessions.par_iter())
        .map(|(entry, session)| {
            let start = Instant::now();
            let runs = run_session(session)?;
            let failures = runs
                .iter()
                .map(|r| r.expectations.iter().filter(|x| !x.passed).count() + usize::from(r.passed() && !r.clean()))
                .sum();
            Ok(EntryResult {
                name: entry.name.clone(),
                passed: failures == 0,
                checks: runs.iter().map(|r| r.expectations.len()).sum(),
                failures,
                runs,
                elapsed: start.elapsed(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let passed = results.iter().filter(|e| e.passed).count();
    Ok(CorpusSummary {
        failed: results.len() - passed,
        passed,
        entries: results,
    })
}
