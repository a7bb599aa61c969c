//! Degeneration specs stored as JSON:
//!
//! ```json
//! {"pa": 6, "steps": [{"initial": "node", "target": "smooth"}]}
//! ```
//!
//! Kinds are `node`, `cusp`, `tacnode`, `ordinary:m`, `A:k`, and `smooth`
//! for targets.

use std::path::{Path, PathBuf};

use ivhs_core::degeneration::{rank_defect, DegenerationSpec, SmoothingStep};
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum SpecFileError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: schema error: {message}")]
    Schema { path: PathBuf, message: String },
    #[error("{path}: {field}: {source}")]
    Invalid {
        path: PathBuf,
        field: String,
        source: ivhs_core::Error,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDocument {
    pa: u64,
    steps: Vec<StepDocument>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StepDocument {
    initial: String,
    target: String,
}

pub fn load_degeneration_spec(path: &Path) -> Result<DegenerationSpec, SpecFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| SpecFileError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_degeneration_spec(&text, path)
}

/// Parses and validates a spec; `path` only labels diagnostics.
pub fn parse_degeneration_spec(text: &str, path: &Path) -> Result<DegenerationSpec, SpecFileError> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(|e| SpecFileError::Schema {
        path: path.to_owned(),
        message: e.to_string(),
    })?;
    let invalid = |field: String, source| SpecFileError::Invalid {
        path: path.to_owned(),
        field,
        source,
    };
    let mut steps = Vec::with_capacity(doc.steps.len());
    for (i, step) in doc.steps.iter().enumerate() {
        let initial = step
            .initial
            .parse()
            .map_err(|e| invalid(format!("steps[{i}].initial"), e))?;
        let target = step
            .target
            .parse()
            .map_err(|e| invalid(format!("steps[{i}].target"), e))?;
        steps.push(SmoothingStep::new(initial, target));
    }
    let spec = DegenerationSpec { pa: doc.pa, steps };
    rank_defect(&spec).map_err(|e| invalid("steps".to_string(), e))?;
    Ok(spec)
}
