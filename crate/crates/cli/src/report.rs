//! Serializable reports and their two renderings.
//!
//! Every report is first converted to a `serde_json::Value`; both the JSON
//! and the text output are produced from that value, so the two renderings
//! always carry the same numbers. Keys come out sorted because
//! `serde_json::Map` is a `BTreeMap` here.

use std::fmt::Write as _;

use ivhs_core::canonical::MultiplicationReport;
use ivhs_core::degeneration::{DegenerationReport, EquisingularRank, MhsDims};
use ivhs_core::invariants::{ClassMuReport, CurveInvariants, MaxIvhsRank};
use ivhs_core::jacobian::{IvhsReport, JacobianContext, MaxRankSearch};
use ivhs_core::ExactMatrix;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Degeneration reports include the limiting matrix only up to this genus.
pub const LIMITING_MATRIX_MAX_PA: u64 = 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    #[serde(flatten)]
    pub body: ReportBody,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum ReportBody {
    PlaneMu(MuPayload),
    CiMu(MuPayload),
    HyperellipticMu(MuPayload),
    JacobianIvhs(JacobianPayload),
    ClassReport(ClassPayload),
    Invariants(InvariantsPayload),
    Degeneration(DegenerationPayload),
}

impl ReportBody {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::PlaneMu(_) => "plane_mu",
            Self::CiMu(_) => "ci_mu",
            Self::HyperellipticMu(_) => "hyperelliptic_mu",
            Self::JacobianIvhs(_) => "jacobian_ivhs",
            Self::ClassReport(_) => "class_report",
            Self::Invariants(_) => "invariants",
            Self::Degeneration(_) => "degeneration",
        }
    }
}

/// The command line that produced a report, without the program name and
/// without rendering flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub args: Vec<String>,
}

/// Exact entries, one string per entry (`"0"`, `"-3/4"`).
pub type MatrixRows = Vec<Vec<String>>;

pub fn matrix_rows(m: &ExactMatrix) -> MatrixRows {
    m.row_iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub coefficients: Vec<String>,
    pub label: String,
    pub quadric: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuPayload {
    pub model: String,
    pub description: String,
    pub sections: Vec<String>,
    pub coordinates: Vec<String>,
    pub source_labels: Vec<String>,
    pub target_labels: Vec<String>,
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: MatrixRows,
    pub rank: usize,
    pub kernel_dim: usize,
    pub kernel_basis: Vec<Relation>,
}

impl From<&MultiplicationReport> for MuPayload {
    fn from(r: &MultiplicationReport) -> Self {
        let kernel_basis = r
            .kernel_basis
            .iter()
            .zip(r.kernel_quadrics())
            .map(|(rel, quadric)| Relation {
                coefficients: rel.coefficients.iter().map(ToString::to_string).collect(),
                label: rel.label.clone(),
                quadric: quadric.to_string(),
            })
            .collect();
        Self {
            model: r.model.tag().to_string(),
            description: r.description.clone(),
            sections: r.sections.clone(),
            coordinates: r.coordinates.clone(),
            source_labels: r.source_labels.clone(),
            target_labels: r.target_labels.clone(),
            source_dim: r.source_dim,
            target_dim: r.target_dim,
            matrix: matrix_rows(&r.matrix),
            rank: r.rank,
            kernel_dim: r.kernel_dim,
            kernel_basis,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IvhsPayload {
    pub xi: String,
    pub matrix: MatrixRows,
    pub rank: usize,
    pub is_max: bool,
}

impl From<&IvhsReport> for IvhsPayload {
    fn from(r: &IvhsReport) -> Self {
        Self {
            xi: r.xi.to_string(),
            matrix: matrix_rows(&r.matrix),
            rank: r.rank,
            is_max: r.is_max,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchPayload {
    pub budget: usize,
    pub evaluated: usize,
    pub achieved_max: bool,
    pub best: IvhsPayload,
}

impl SearchPayload {
    pub fn new(budget: usize, s: &MaxRankSearch) -> Self {
        Self {
            budget,
            evaluated: s.evaluated,
            achieved_max: s.achieved_max,
            best: IvhsPayload::from(&s.best),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianPayload {
    pub polynomial: String,
    pub degree: u32,
    pub socle_degree: u32,
    pub canonical_dim: usize,
    pub deformation_dim: usize,
    pub cotangent_dim: usize,
    pub canonical_basis: Vec<String>,
    pub cotangent_basis: Vec<String>,
    pub direction: Option<IvhsPayload>,
    pub search: Option<SearchPayload>,
}

impl JacobianPayload {
    pub fn new(ctx: &JacobianContext, direction: Option<IvhsPayload>, search: Option<SearchPayload>) -> Self {
        let vars = ctx.polynomial().vars();
        let names = |q: &ivhs_core::quotient::GradedQuotientContext| -> Vec<String> {
            q.basis().iter().map(|m| m.display(vars).to_string()).collect()
        };
        Self {
            polynomial: ctx.polynomial().to_string(),
            degree: ctx.degree(),
            socle_degree: ctx.socle_degree(),
            canonical_dim: ctx.canonical().dim(),
            deformation_dim: ctx.deformations().dim(),
            cotangent_dim: ctx.cotangent().dim(),
            canonical_basis: names(ctx.canonical()),
            cotangent_basis: names(ctx.cotangent()),
            direction,
            search,
        }
    }
}

/// A known rank, or the string `"undocumented"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MaxRankValue {
    Known(u64),
    Marker(String),
}

impl From<MaxIvhsRank> for MaxRankValue {
    fn from(r: MaxIvhsRank) -> Self {
        match r {
            MaxIvhsRank::Known(n) => Self::Known(n),
            MaxIvhsRank::Undocumented => Self::Marker(r.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPayload {
    pub genus: u64,
    pub class: String,
    pub sym2: u64,
    pub target: u64,
    pub mu_rank: u64,
    pub mu_kernel: u64,
    pub max_ivhs_rank: MaxRankValue,
}

impl From<&ClassMuReport> for ClassPayload {
    fn from(r: &ClassMuReport) -> Self {
        Self {
            genus: r.genus,
            class: r.class.tag().to_string(),
            sym2: r.sym2,
            target: r.target,
            mu_rank: r.mu_rank,
            mu_kernel: r.mu_kernel,
            max_ivhs_rank: r.max_ivhs_rank.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityPayload {
    pub kind: String,
    pub delta: u64,
    pub branches: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquisingularPayload {
    pub total: u64,
    pub from_normalization: u64,
    pub from_singularities: u64,
}

impl From<EquisingularRank> for EquisingularPayload {
    fn from(r: EquisingularRank) -> Self {
        Self {
            total: r.total,
            from_normalization: r.from_normalization,
            from_singularities: r.from_singularities,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrillNoetherPayload {
    pub r: u64,
    pub d: u64,
    pub rho: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsPayload {
    /// How the arithmetic genus was obtained, e.g. `plane degree 5`.
    pub source: String,
    pub arithmetic_genus: u64,
    pub geometric_genus: u64,
    pub total_delta: u64,
    pub singularities: Vec<SingularityPayload>,
    pub gr_w1: u64,
    pub gr_w2: u64,
    pub h1_dim: u64,
    pub equisingular_rank: EquisingularPayload,
    pub sym2: u64,
    /// `None` below genus 2.
    pub h0_omega_sq: Option<u64>,
    pub brill_noether: Option<BrillNoetherPayload>,
}

impl InvariantsPayload {
    pub fn new(
        source: String,
        inv: &CurveInvariants,
        mhs: MhsDims,
        equisingular: EquisingularRank,
        sym2: u64,
        h0_omega_sq: Option<u64>,
        brill_noether: Option<BrillNoetherPayload>,
    ) -> Self {
        Self {
            source,
            arithmetic_genus: inv.arithmetic_genus,
            geometric_genus: inv.geometric_genus,
            total_delta: inv.total_delta,
            singularities: inv
                .singularities
                .iter()
                .map(|s| SingularityPayload {
                    kind: s.kind.to_string(),
                    delta: s.delta,
                    branches: s.branches,
                })
                .collect(),
            gr_w1: mhs.gr_w1,
            gr_w2: mhs.gr_w2,
            h1_dim: mhs.total(),
            equisingular_rank: equisingular.into(),
            sym2,
            h0_omega_sq,
            brill_noether,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationPayload {
    pub pa: u64,
    pub steps: Vec<String>,
    pub delta_initial: u64,
    pub delta_target: u64,
    pub delta_drop: u64,
    pub predicted_max_rank: u64,
    pub gr_w1_dim: u64,
    pub gr_w2_dim: u64,
    pub h1_dim: u64,
    pub vanishing_cycle_dim: u64,
    /// Identity of size `pa` with the last `delta_drop` diagonal entries
    /// cleared; omitted for `pa` above [`LIMITING_MATRIX_MAX_PA`].
    pub limiting_matrix: Option<MatrixRows>,
}

impl DegenerationPayload {
    pub fn new(steps: Vec<String>, r: &DegenerationReport) -> Self {
        let limiting_matrix = (r.pa <= LIMITING_MATRIX_MAX_PA).then(|| {
            let n = r.pa as usize;
            let keep = r.predicted_max_rank as usize;
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j && i < keep { "1" } else { "0" }.to_string())
                        .collect()
                })
                .collect()
        });
        Self {
            pa: r.pa,
            steps,
            delta_initial: r.delta_initial,
            delta_target: r.delta_target,
            delta_drop: r.delta_drop,
            predicted_max_rank: r.predicted_max_rank,
            gr_w1_dim: r.gr_w1_dim,
            gr_w2_dim: r.gr_w2_dim,
            h1_dim: r.gr_w1_dim + r.gr_w2_dim,
            vanishing_cycle_dim: r.vanishing_cycle_dim,
            limiting_matrix,
        }
    }
}

pub fn to_value(report: &Report) -> Value {
    serde_json::to_value(report).expect("reports always serialize")
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(&to_value(report)).expect("values always serialize");
    out.push('\n');
    out
}

pub fn parse_json(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    write_value(&mut out, &to_value(report), 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn is_matrix(items: &[Value]) -> bool {
    !items.is_empty()
        && items
            .iter()
            .all(|row| row.as_array().is_some_and(|r| r.iter().all(|e| scalar(e).is_some())))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (key, value) in map {
                match inline(value) {
                    Some(text) => {
                        let _ = writeln!(out, "{pad}{key}: {text}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{key}:");
                        write_value(out, value, indent + 2);
                    }
                }
            }
        }
        Value::Array(items) if is_matrix(items) => write_matrix(out, items, indent),
        Value::Array(items) => {
            for item in items {
                match inline(item) {
                    Some(text) => {
                        let _ = writeln!(out, "{pad}- {text}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        write_value(out, item, indent + 2);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// Scalars and flat lists of scalars fit on the key's line.
fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    let items = v.as_array()?;
    let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
    parts.map(|p| format!("[{}]", p.join(", ")))
}

/// One row per line, columns right-aligned.
fn write_matrix(out: &mut String, rows: &[Value], indent: usize) {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.as_array().into_iter().flatten().filter_map(scalar).collect())
        .collect();
    let ncols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| {
            cells
                .iter()
                .filter_map(|r| r.get(j))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let pad = " ".repeat(indent);
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        let _ = writeln!(out, "{pad}{}", line.join(" "));
    }
}
