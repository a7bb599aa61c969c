//! The canonical multiplication map `μ: Sym² H^0(ω) → H^0(ω^⊗2)` as an
//! explicit matrix for three concrete models.
//!
//! * plane curves of degree `d`: `ω = O(d-3)`, so sections are forms of
//!   degree `d-3` and the target is `(S/F)_{2d-6}`;
//! * complete intersections of type `(a, b)` in three-space: `ω = O(a+b-4)`;
//! * hyperelliptic curves: sections `x^i dx/y` for `0 ≤ i < g`, products
//!   are exponent sums.
//!
//! `Sym²` is indexed by unordered pairs `(i, j)` with `i ≤ j` in
//! lexicographic order; the column for a pair is the class of `s_i s_j`,
//! counted once.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::invariants::{curve_invariants, plane_pa, SingularityRecord};
use crate::linalg::{ExactMatrix, Rational};
use crate::poly::{Monomial, Polynomial, VariableSet};
use crate::quotient::{check_regular_pair, GradedQuotientContext};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveModel {
    Plane,
    SingularPlane,
    CompleteIntersection,
    Hyperelliptic,
}

impl CurveModel {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Plane => "plane",
            Self::SingularPlane => "singular-plane",
            Self::CompleteIntersection => "complete-intersection",
            Self::Hyperelliptic => "hyperelliptic",
        }
    }
}

impl fmt::Display for CurveModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A kernel vector of `μ`, i.e. a quadric through the canonical model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticRelation {
    /// Primitive integer coordinates over the pair basis.
    pub coefficients: Vec<BigInt>,
    /// Human-readable form such as `[x0]*[x1]-[x2]*[x3]`.
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationReport {
    pub model: CurveModel,
    pub description: String,
    /// Basis of `H^0(ω)`.
    pub sections: Vec<String>,
    /// Names of the canonical coordinates used by [`Self::kernel_quadrics`].
    pub coordinates: Vec<String>,
    /// Pair basis of `Sym² H^0(ω)`, one label per matrix column.
    pub source_labels: Vec<String>,
    /// Basis of `H^0(ω^⊗2)`, one label per matrix row.
    pub target_labels: Vec<String>,
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub kernel_dim: usize,
    pub kernel_basis: Vec<QuadraticRelation>,
}

impl MultiplicationReport {
    fn build(
        model: CurveModel,
        description: String,
        sections: Vec<String>,
        coordinates: Vec<String>,
        target_labels: Vec<String>,
        columns: Vec<Vec<Rational>>,
    ) -> Self {
        let pairs = sym2_pairs(sections.len());
        let source_labels: Vec<String> = pairs
            .iter()
            .map(|&(i, j)| format!("[{}]*[{}]", sections[i], sections[j]))
            .collect();
        let matrix = ExactMatrix::from_columns(target_labels.len(), &columns);
        let rank = matrix.rank();
        let kernel_basis: Vec<QuadraticRelation> = matrix
            .kernel_basis()
            .into_iter()
            .map(|coefficients| QuadraticRelation {
                label: relation_label(&coefficients, &source_labels),
                coefficients,
            })
            .collect();
        Self {
            model,
            description,
            sections,
            coordinates,
            source_dim: source_labels.len(),
            target_dim: target_labels.len(),
            source_labels,
            target_labels,
            rank,
            kernel_dim: kernel_basis.len(),
            kernel_basis,
            matrix,
        }
    }

    /// Kernel vectors lifted to quadratic forms in the canonical coordinates:
    /// the relation `Σ c_ij [s_i][s_j]` becomes `Σ c_ij w_i w_j`.
    pub fn kernel_quadrics(&self) -> Vec<Polynomial> {
        let vars = VariableSet::new(&self.coordinates).expect("coordinate names are valid");
        let n = vars.len();
        let pairs = sym2_pairs(n);
        self.kernel_basis
            .iter()
            .map(|rel| {
                Polynomial::from_terms(
                    &vars,
                    pairs.iter().zip(&rel.coefficients).map(|(&(i, j), c)| {
                        (
                            Monomial::var(n, i).mul(&Monomial::var(n, j)),
                            Rational::from_integer(c.clone()),
                        )
                    }),
                )
            })
            .collect()
    }
}

/// Unordered index pairs `(i, j)`, `i ≤ j < n`, in lexicographic order.
pub fn sym2_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

fn relation_label(coefficients: &[BigInt], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in coefficients.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let abs = c.abs();
        if !abs.is_one() {
            out.push_str(&format!("{abs}*"));
        }
        out.push_str(label);
    }
    out
}

fn require_form(f: &Polynomial, nvars: usize) -> Result<u32> {
    if f.vars().len() != nvars {
        return Err(Error::VariableCount {
            expected: nvars,
            found: f.vars().len(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    f.homogeneous_degree().ok_or(Error::NotHomogeneous)
}

/// Columns `reduce(s_i * s_j)` for section monomials `sections`.
fn product_columns(sections: &[Monomial], target: &GradedQuotientContext) -> Result<Vec<Vec<Rational>>> {
    sym2_pairs(sections.len())
        .into_iter()
        .map(|(i, j)| {
            let product = Polynomial::monomial(target.vars(), sections[i].mul(&sections[j]), Rational::one());
            target.reduce(&product)
        })
        .collect()
}

fn linear_coordinates(sections: &[Monomial], vars: &VariableSet) -> Vec<String> {
    let linear = sections.iter().all(|m| m.degree() == 1);
    if linear {
        sections.iter().map(|m| m.display(vars).to_string()).collect()
    } else {
        (0..sections.len()).map(|i| format!("w{i}")).collect()
    }
}

/// `μ` for a plane curve `F = 0` of degree `d ≥ 4` in three variables.
pub fn plane_mu(f: &Polynomial) -> Result<MultiplicationReport> {
    plane_mu_declared(f, &[])
}

/// As [`plane_mu`], for a plane curve with declared singular points. The
/// dualizing sheaf is still `O(d-3)`, so the construction is unchanged;
/// only the model label and the δ bookkeeping differ.
pub fn plane_mu_declared(f: &Polynomial, singularities: &[SingularityRecord]) -> Result<MultiplicationReport> {
    let d = require_form(f, 3)?;
    if d < 4 {
        return Err(Error::DegreeTooSmall { degree: d, min: 4 });
    }
    let pa = plane_pa(u64::from(d));
    let inv = curve_invariants(pa, singularities)?;
    let gens = [f.clone()];
    let source = GradedQuotientContext::new(f.vars(), &gens, d - 3)?;
    let target = GradedQuotientContext::new(f.vars(), &gens, 2 * d - 6)?;
    let sections = source.basis();
    let columns = product_columns(&sections, &target)?;
    let (model, description) = if singularities.is_empty() {
        (CurveModel::Plane, format!("plane curve {f} of degree {d}, p_a = {pa}"))
    } else {
        let kinds: Vec<String> = singularities.iter().map(|s| s.kind.to_string()).collect();
        (
            CurveModel::SingularPlane,
            format!(
                "plane curve {f} of degree {d}, p_a = {pa}, singularities [{}], geometric genus {}",
                kinds.join(", "),
                inv.geometric_genus
            ),
        )
    };
    Ok(MultiplicationReport::build(
        model,
        description,
        sections.iter().map(|m| m.display(f.vars()).to_string()).collect(),
        linear_coordinates(&sections, f.vars()),
        target.basis().iter().map(|m| m.display(f.vars()).to_string()).collect(),
        columns,
    ))
}

/// `μ` for the complete intersection `Q = C = 0` in three-space.
///
/// The pair must be a regular sequence; the quotient dimensions are checked
/// against the Koszul count in the source and target degrees.
pub fn ci_mu(q: &Polynomial, c: &Polynomial) -> Result<MultiplicationReport> {
    let a = require_form(q, 4)?;
    let b = require_form(c, 4)?;
    if q.vars() != c.vars() {
        return Err(Error::VariableMismatch {
            left: q.vars().names().to_vec(),
            right: c.vars().names().to_vec(),
        });
    }
    let (q, c, a, b) = if a <= b { (q, c, a, b) } else { (c, q, b, a) };
    if a + b < 5 {
        return Err(Error::DegreeTooSmall { degree: a + b, min: 5 });
    }
    let k = a + b - 4;
    check_regular_pair(q, c, &[k, 2 * k])?;
    let gens = [q.clone(), c.clone()];
    let source = GradedQuotientContext::new(q.vars(), &gens, k)?;
    let target = GradedQuotientContext::new(q.vars(), &gens, 2 * k)?;
    let sections = source.basis();
    let columns = product_columns(&sections, &target)?;
    Ok(MultiplicationReport::build(
        CurveModel::CompleteIntersection,
        format!("complete intersection ({q}, {c}) of type ({a}, {b})"),
        sections.iter().map(|m| m.display(q.vars()).to_string()).collect(),
        linear_coordinates(&sections, q.vars()),
        target.basis().iter().map(|m| m.display(q.vars()).to_string()).collect(),
        columns,
    ))
}

fn power_label(i: usize) -> String {
    match i {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x^{i}"),
    }
}

/// `μ` for a hyperelliptic curve of genus `g`, with sections `x^i dx/y`,
/// `0 ≤ i < g`, and target spanned by `x^k (dx/y)^2`, `0 ≤ k ≤ 2g-2`.
pub fn hyperelliptic_mu(g: u64) -> Result<MultiplicationReport> {
    if g < 2 {
        return Err(Error::GenusOutOfRange { genus: g, min: 2 });
    }
    let g = g as usize;
    let target_dim = 2 * g - 1;
    let columns = sym2_pairs(g)
        .into_iter()
        .map(|(i, j)| {
            let mut col = vec![Rational::zero(); target_dim];
            col[i + j] = Rational::one();
            col
        })
        .collect();
    Ok(MultiplicationReport::build(
        CurveModel::Hyperelliptic,
        format!("hyperelliptic curve of genus {g}"),
        (0..g).map(power_label).collect(),
        (0..g).map(|i| format!("w{i}")).collect(),
        (0..target_dim).map(power_label).collect(),
        columns,
    ))
}
