//! Golden fixtures: pinned command outputs checked by `ivhs fixtures`.
//!
//! A fixture file holds a JSON array of fixtures. Each fixture runs one
//! command with `--json` and compares values at JSON pointers into the
//! report. A fixture may also carry a reference matrix in its own basis
//! order together with the row and column permutation that maps our
//! graded-lex order onto it, and published values that are known to
//! differ from the computed ones.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::command::run_command;

const BUILTIN: &str = include_str!("../fixtures/golden.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    /// Arguments after the program name; `--json` is appended.
    pub args: Vec<String>,
    #[serde(default)]
    pub exit: i32,
    /// Substring expected in the output of a failing command.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_contains: Option<String>,
    /// JSON pointer → expected value.
    #[serde(default)]
    pub expect: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<ReferenceMatrix>,
    /// JSON pointer → value stated elsewhere that disagrees with the
    /// computation. Reported, never enforced.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub published: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceMatrix {
    pub pointer: String,
    /// Row `i` of the reference is row `row_order[i]` of the computed matrix.
    pub row_order: Vec<usize>,
    pub column_order: Vec<usize>,
    pub matrix: Vec<Vec<String>>,
}

impl ReferenceMatrix {
    /// Reorders `computed` into the reference basis order.
    pub fn permute(&self, computed: &[Vec<String>]) -> Result<Vec<Vec<String>>, String> {
        let cols = computed.first().map_or(0, Vec::len);
        if !is_permutation(&self.row_order, computed.len()) {
            return Err(format!("row_order is not a permutation of 0..{}", computed.len()));
        }
        if !is_permutation(&self.column_order, cols) {
            return Err(format!("column_order is not a permutation of 0..{cols}"));
        }
        Ok(self
            .row_order
            .iter()
            .map(|&i| self.column_order.iter().map(|&j| computed[i][j].clone()).collect())
            .collect())
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
}

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
}

pub fn parse_fixtures(text: &str, path: &Path) -> Result<Vec<Fixture>, FixtureError> {
    serde_json::from_str(text).map_err(|source| FixtureError::Parse {
        path: path.to_owned(),
        source,
    })
}

/// The suite compiled into the binary.
pub fn builtin() -> Result<Vec<Fixture>, FixtureError> {
    parse_fixtures(BUILTIN, Path::new("fixtures/golden.json"))
}

/// Every `*.json` file directly inside `dir`, in file name order.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>, FixtureError> {
    let io = |source| FixtureError::Io {
        path: dir.to_owned(),
        source,
    };
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    paths.retain(|p| p.is_file() && p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        let text = std::fs::read_to_string(&path).map_err(|source| FixtureError::Io {
            path: path.clone(),
            source,
        })?;
        out.extend(parse_fixtures(&text, &path)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub pointer: String,
    pub computed: Value,
    pub published: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub passed: bool,
    pub exit: i32,
    pub failures: Vec<String>,
    pub discrepancies: Vec<Discrepancy>,
    pub note: Option<String>,
    /// The computed matrix in the reference basis order, when one is declared.
    pub reference_view: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteSummary {
    pub outcomes: Vec<FixtureOutcome>,
}

impl SuiteSummary {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.outcomes.len() - self.passed()
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed() == 0 {
            0
        } else {
            1
        }
    }

    /// One JSON object per line, one line per fixture.
    pub fn render_json_lines(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let value = serde_json::to_value(o).expect("outcomes serialize");
            out.push_str(&value.to_string());
            out.push('\n');
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let _ = writeln!(out, "{} {}", if o.passed { "PASS" } else { "FAIL" }, o.name);
            for f in &o.failures {
                let _ = writeln!(out, "  failure: {f}");
            }
            for d in &o.discrepancies {
                let _ = writeln!(
                    out,
                    "  {}: computed {} vs published {}",
                    d.pointer, d.computed, d.published
                );
            }
            if let Some(note) = &o.note {
                let _ = writeln!(out, "  note: {note}");
            }
            if let Some(m) = &o.reference_view {
                let _ = writeln!(out, "  matrix in reference order:");
                for row in m {
                    let _ = writeln!(out, "    {}", row.join(" "));
                }
            }
        }
        let _ = writeln!(out, "{} passed, {} failed", self.passed(), self.failed());
        out
    }
}

pub fn run_fixture(fixture: &Fixture) -> FixtureOutcome {
    let argv = std::iter::once("ivhs".to_string())
        .chain(fixture.args.iter().cloned())
        .chain(std::iter::once("--json".to_string()));
    let (exit, output) = run_command(argv);
    let mut outcome = FixtureOutcome {
        name: fixture.name.clone(),
        passed: false,
        exit,
        failures: Vec::new(),
        discrepancies: Vec::new(),
        note: fixture.note.clone(),
        reference_view: None,
    };
    if exit != fixture.exit {
        outcome.failures.push(format!("exit {exit}, expected {}", fixture.exit));
    }
    if let Some(needle) = &fixture.error_contains {
        if !output.contains(needle.as_str()) {
            outcome.failures.push(format!("output does not mention {needle:?}"));
        }
    }
    if exit == 0 {
        match serde_json::from_str::<Value>(&output) {
            Ok(report) => check_report(fixture, &report, &mut outcome),
            Err(e) => outcome.failures.push(format!("output is not JSON: {e}")),
        }
    }
    outcome.passed = outcome.failures.is_empty();
    outcome
}

fn check_report(fixture: &Fixture, report: &Value, outcome: &mut FixtureOutcome) {
    for (pointer, expected) in &fixture.expect {
        match report.pointer(pointer) {
            Some(actual) if actual == expected => {}
            Some(actual) => outcome
                .failures
                .push(format!("{pointer}: got {actual}, expected {expected}")),
            None => outcome.failures.push(format!("{pointer}: missing")),
        }
    }
    for (pointer, published) in &fixture.published {
        let computed = report.pointer(pointer).cloned().unwrap_or(Value::Null);
        outcome.discrepancies.push(Discrepancy {
            pointer: pointer.clone(),
            computed,
            published: published.clone(),
        });
    }
    if let Some(reference) = &fixture.reference {
        let computed: Option<Vec<Vec<String>>> = report
            .pointer(&reference.pointer)
            .and_then(|v| serde_json::from_value(v.clone()).ok());
        match computed.map(|m| reference.permute(&m)) {
            None => outcome.failures.push(format!("{}: no matrix", reference.pointer)),
            Some(Err(e)) => outcome.failures.push(e),
            Some(Ok(view)) => {
                if view != reference.matrix {
                    outcome
                        .failures
                        .push(format!("{}: differs from the reference matrix", reference.pointer));
                }
                outcome.reference_view = Some(view);
            }
        }
    }
}

pub fn run_fixture_suite(fixtures: &[Fixture]) -> SuiteSummary {
    SuiteSummary {
        outcomes: fixtures.iter().map(run_fixture).collect(),
    }
}
