//! Cup product for smooth plane curves through the Jacobian ring
//! `R = S/(∂F/∂x, ∂F/∂y, ∂F/∂z)`.
//!
//! For `F` of degree `d`, `H^0(ω) ≅ R_{d-3}`, first-order deformations are
//! `R_d` and `H^1(O) ≅ R_{2d-3}`; the IVHS of a direction `ξ ∈ R_d` is
//! multiplication by `ξ`.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::linalg::{ExactMatrix, Rational};
use crate::poly::{graded_monomials, Polynomial};
use crate::quotient::GradedQuotientContext;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct JacobianContext {
    f: Polynomial,
    degree: u32,
    partials: Vec<Polynomial>,
    canonical: GradedQuotientContext,
    deformations: GradedQuotientContext,
    cotangent: GradedQuotientContext,
}

impl JacobianContext {
    /// Builds `R_{d-3}`, `R_d` and `R_{2d-3}` for a smooth plane curve of
    /// degree `d ≥ 4`.
    ///
    /// Smoothness is tested by checking that `R` vanishes one degree above
    /// the socle degree `3(d-2)`. Some `R_k` vanishes exactly when the
    /// partials have no common zero, so this is a complete test.
    pub fn new(f: &Polynomial) -> Result<Self> {
        if f.vars().len() != 3 {
            return Err(Error::VariableCount {
                expected: 3,
                found: f.vars().len(),
            });
        }
        if f.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if d < 4 {
            return Err(Error::DegreeTooSmall { degree: d, min: 4 });
        }
        let partials: Vec<Polynomial> = (0..3)
            .map(|i| f.partial_derivative(i))
            .filter(|p| !p.is_zero())
            .collect();
        let above_socle = 3 * (d - 2) + 1;
        let check = GradedQuotientContext::new(f.vars(), &partials, above_socle)?;
        if check.dim() != 0 {
            return Err(Error::NotSmooth {
                degree: above_socle,
                dim: check.dim(),
            });
        }
        Ok(Self {
            canonical: GradedQuotientContext::new(f.vars(), &partials, d - 3)?,
            deformations: GradedQuotientContext::new(f.vars(), &partials, d)?,
            cotangent: GradedQuotientContext::new(f.vars(), &partials, 2 * d - 3)?,
            f: f.clone(),
            degree: d,
            partials,
        })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn socle_degree(&self) -> u32 {
        3 * (self.degree - 2)
    }

    /// `R_{d-3}`, modelling `H^0(ω)`.
    pub fn canonical(&self) -> &GradedQuotientContext {
        &self.canonical
    }

    /// `R_d`, modelling first-order deformations.
    pub fn deformations(&self) -> &GradedQuotientContext {
        &self.deformations
    }

    /// `R_{2d-3}`, modelling `H^1(O)`.
    pub fn cotangent(&self) -> &GradedQuotientContext {
        &self.cotangent
    }

    /// Any graded piece `R_k`.
    pub fn piece(&self, k: u32) -> Result<GradedQuotientContext> {
        GradedQuotientContext::new(self.f.vars(), &self.partials, k)
    }
}

/// Shorthand for [`JacobianContext::new`].
pub fn jacobian_context(f: &Polynomial) -> Result<JacobianContext> {
    JacobianContext::new(f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IvhsReport {
    pub xi: Polynomial,
    /// `dim R_{2d-3} × dim R_{d-3}`; column `j` is the class of `ξ·b_j`.
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub is_max: bool,
}

/// Matrix of multiplication by `ξ` from `R_{d-3}` to `R_{2d-3}` in the
/// monomial bases of the two pieces.
pub fn ivhs_matrix(ctx: &JacobianContext, xi: &Polynomial) -> Result<IvhsReport> {
    if xi.vars() != ctx.f.vars() {
        return Err(Error::VariableMismatch {
            left: ctx.f.vars().names().to_vec(),
            right: xi.vars().names().to_vec(),
        });
    }
    if !xi.is_zero() {
        let found = xi.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if found != ctx.degree {
            return Err(Error::DegreeMismatch {
                expected: ctx.degree,
                found,
            });
        }
    }
    let columns = ctx
        .canonical
        .basis()
        .iter()
        .map(|b| ctx.cotangent.reduce(&xi.mul_monomial(b)))
        .collect::<Result<Vec<_>>>()?;
    let matrix = ExactMatrix::from_columns(ctx.cotangent.dim(), &columns);
    let rank = matrix.rank();
    Ok(IvhsReport {
        xi: xi.clone(),
        is_max: rank == ctx.canonical.dim(),
        matrix,
        rank,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxRankSearch {
    pub best: IvhsReport,
    pub achieved_max: bool,
    /// Number of candidates whose matrix was computed.
    pub evaluated: usize,
}

/// Deterministic search for a direction `ξ` of maximal IVHS rank.
///
/// Candidates are, in order, every degree-`d` monomial and then sums of
/// `k = 2, 3, ...` distinct monomials with unit coefficients, taken in
/// lexicographic order of index sets over the graded-lex monomial list. A
/// candidate whose class in `R_d` equals that of an earlier candidate is
/// skipped and does not count against `budget`; consequently sums only
/// range over monomials with pairwise distinct nonzero classes. The search
/// stops at the first candidate reaching `dim R_{d-3}`; ties keep the
/// earliest candidate.
pub fn ivhs_max_rank(ctx: &JacobianContext, budget: usize) -> Result<MaxRankSearch> {
    let budget = budget.max(1);
    let vars = ctx.f.vars();
    let target = ctx.canonical.dim();
    let monomials: Vec<Polynomial> = graded_monomials(vars.len(), ctx.degree)
        .into_iter()
        .map(|m| Polynomial::monomial(vars, m, Rational::one()))
        .collect();

    let mut seen: HashSet<Vec<Rational>> = HashSet::new();
    let mut best: Option<IvhsReport> = None;
    let mut evaluated = 0;
    let mut distinct = Vec::new();

    // (stop, candidate had a new nonzero class)
    let mut consider = |xi: Polynomial, best: &mut Option<IvhsReport>| -> Result<(bool, bool)> {
        let class = ctx.deformations.reduce(&xi)?;
        let fresh_nonzero = class.iter().any(|c| !c.is_zero());
        if !seen.insert(class) {
            return Ok((false, false));
        }
        evaluated += 1;
        let report = ivhs_matrix(ctx, &xi)?;
        if best.as_ref().is_none_or(|b| report.rank > b.rank) {
            *best = Some(report);
        }
        let done = evaluated >= budget || best.as_ref().is_some_and(|b| b.rank == target);
        Ok((done, fresh_nonzero))
    };

    let mut done = false;
    for (i, m) in monomials.iter().enumerate() {
        let (stop, fresh) = consider(m.clone(), &mut best)?;
        if fresh {
            distinct.push(i);
        }
        if stop {
            done = true;
            break;
        }
    }

    let n = distinct.len();
    let mut k = 2;
    while !done && k <= n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut xi = Polynomial::zero(vars);
            for &i in &idx {
                xi = xi.try_add(&monomials[distinct[i]])?;
            }
            if consider(xi, &mut best)?.0 {
                done = true;
                break;
            }
            // Advance to the next k-subset in lexicographic order.
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
                break;
            };
            idx[pos] += 1;
            for p in pos + 1..k {
                idx[p] = idx[p - 1] + 1;
            }
        }
        k += 1;
    }

    let best = best.expect("at least one candidate is always evaluated");
    Ok(MaxRankSearch {
        achieved_max: best.rank == target,
        best,
        evaluated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableSet;

    fn xyz(text: &str) -> Polynomial {
        Polynomial::parse(text, &VariableSet::xyz()).unwrap()
    }

    fn fermat_quartic() -> JacobianContext {
        jacobian_context(&xyz("x^4+y^4+z^4")).unwrap()
    }

    #[test]
    fn fermat_quartic_pieces() {
        let ctx = fermat_quartic();
        assert_eq!(ctx.canonical().dim(), 3);
        assert_eq!(ctx.deformations().dim(), 6);
        assert_eq!(ctx.cotangent().dim(), 3);
        assert_eq!(ctx.socle_degree(), 6);
        let r5: Vec<String> = ctx
            .cotangent()
            .basis()
            .iter()
            .map(|m| m.display(&VariableSet::xyz()).to_string())
            .collect();
        assert_eq!(r5, ["x^2*y^2*z", "x^2*y*z^2", "x*y^2*z^2"]);
    }

    #[test]
    fn fermat_quintic_canonical_piece() {
        let ctx = jacobian_context(&xyz("x^5+y^5+z^5")).unwrap();
        assert_eq!(ctx.canonical().dim(), 6);
    }

    #[test]
    fn cone_is_not_smooth() {
        assert!(matches!(
            jacobian_context(&xyz("x^4+y^4")),
            Err(Error::NotSmooth { degree: 7, .. })
        ));
        assert!(matches!(
            jacobian_context(&xyz("x^4+y^4+x^2z^2")),
            Err(Error::NotSmooth { .. })
        ));
    }

    #[test]
    fn jacobian_input_errors() {
        assert!(matches!(
            jacobian_context(&xyz("x^3+y^3+z^3")),
            Err(Error::DegreeTooSmall { .. })
        ));
        assert!(matches!(jacobian_context(&xyz("x^4+y")), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn x3y_direction_is_trivial() {
        let r = ivhs_matrix(&fermat_quartic(), &xyz("x^3y")).unwrap();
        assert!(r.matrix.is_zero());
        assert_eq!(r.rank, 0);
        assert!(!r.is_max);
    }

    #[test]
    fn symmetric_direction_has_full_rank() {
        let r = ivhs_matrix(&fermat_quartic(), &xyz("x^2yz+xy^2z+xyz^2")).unwrap();
        assert_eq!(
            r.matrix,
            ExactMatrix::from_i64_rows(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
        );
        assert_eq!(r.rank, 3);
        assert!(r.is_max);
    }

    #[test]
    fn zero_direction() {
        let ctx = fermat_quartic();
        let r = ivhs_matrix(&ctx, &Polynomial::zero(&VariableSet::xyz())).unwrap();
        assert_eq!(r.rank, 0);
        assert_eq!((r.matrix.rows(), r.matrix.cols()), (3, 3));
    }

    #[test]
    fn direction_degree_checked() {
        assert!(matches!(
            ivhs_matrix(&fermat_quartic(), &xyz("x^3")),
            Err(Error::DegreeMismatch { expected: 4, found: 3 })
        ));
    }

    #[test]
    fn search_budget_one_sees_only_x4() {
        let s = ivhs_max_rank(&fermat_quartic(), 1).unwrap();
        assert_eq!(s.best.xi, xyz("x^4"));
        assert_eq!(s.best.rank, 0);
        assert!(!s.achieved_max);
        assert_eq!(s.evaluated, 1);
    }

    #[test]
    fn search_finds_full_rank_on_quartic() {
        let s = ivhs_max_rank(&fermat_quartic(), 50).unwrap();
        assert!(s.achieved_max);
        assert_eq!(s.best.rank, 3);
        assert!(s.evaluated <= 50);
        assert!(s.best.matrix.row_iter().flatten().any(|x| !x.is_zero()));
    }
}
