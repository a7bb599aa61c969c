//! Degree-`k` pieces of graded quotients `S/I` of a polynomial ring.
//!
//! Every generator has degree at most `k` or contributes nothing, so `I_k` is
//! the span of the monomial multiples `m*g` with `deg m = k - deg g`. One
//! echelonization of those multiples (columns in decreasing graded-lex
//! order) gives both the dimension and a normal form: the non-pivot
//! monomials form the quotient basis.

use std::collections::HashMap;

use num_traits::Zero;

use crate::linalg::{ExactMatrix, Rational};
use crate::poly::{graded_monomials, monomial_count, Monomial, Polynomial, VariableSet};
use crate::{Error, Result};

/// Concrete model of `(S/I)_k`: a monomial basis plus a reducer mapping any
/// degree-`k` form to its coordinates in that basis.
#[derive(Debug, Clone)]
pub struct GradedQuotientContext {
    vars: VariableSet,
    degree: u32,
    generators: Vec<Polynomial>,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    // Nonzero rows of the reduced echelon form of the generator multiples.
    reducer: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    basis_columns: Vec<usize>,
}

impl GradedQuotientContext {
    pub fn new(vars: &VariableSet, generators: &[Polynomial], degree: u32) -> Result<Self> {
        validate_generators(vars, generators)?;
        let monomials = graded_monomials(vars.len(), degree);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let multiples = multiples_matrix(vars, generators, degree, &index);
        let (reduced, pivots) = multiples.rref();
        let reducer = (0..pivots.len()).map(|r| reduced.row(r).to_vec()).collect();
        let mut is_pivot = vec![false; monomials.len()];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis_columns = (0..monomials.len()).filter(|&c| !is_pivot[c]).collect();
        Ok(Self {
            vars: vars.clone(),
            degree,
            generators: generators.to_vec(),
            monomials,
            index,
            reducer,
            pivots,
            basis_columns,
        })
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Dimension of `I_k`.
    pub fn ideal_dim(&self) -> usize {
        self.pivots.len()
    }

    /// Dimension of `(S/I)_k`.
    pub fn dim(&self) -> usize {
        self.basis_columns.len()
    }

    /// Basis monomials of the quotient, in decreasing graded-lex order.
    pub fn basis(&self) -> Vec<Monomial> {
        self.basis_columns.iter().map(|&c| self.monomials[c].clone()).collect()
    }

    /// Coordinates of the class of `f` in [`Self::basis`].
    pub fn reduce(&self, f: &Polynomial) -> Result<Vec<Rational>> {
        if f.vars() != &self.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.names().to_vec(),
                right: f.vars().names().to_vec(),
            });
        }
        let mut dense = vec![Rational::zero(); self.monomials.len()];
        if !f.is_zero() {
            let degree = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
            if degree != self.degree {
                return Err(Error::DegreeMismatch {
                    expected: self.degree,
                    found: degree,
                });
            }
            for (m, c) in f.terms() {
                dense[self.index[m]] = c.clone();
            }
        }
        for (row, &p) in self.reducer.iter().zip(&self.pivots) {
            if dense[p].is_zero() {
                continue;
            }
            let factor = dense[p].clone();
            for (d, r) in dense.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *d -= &factor * r;
                }
            }
        }
        Ok(self.basis_columns.iter().map(|&c| dense[c].clone()).collect())
    }

    /// The normal-form polynomial with the given basis coordinates.
    pub fn lift(&self, coords: &[Rational]) -> Polynomial {
        assert_eq!(coords.len(), self.dim(), "coordinate vector has wrong length");
        Polynomial::from_terms(
            &self.vars,
            self.basis_columns
                .iter()
                .zip(coords)
                .map(|(&c, x)| (self.monomials[c].clone(), x.clone())),
        )
    }
}

fn validate_generators(vars: &VariableSet, generators: &[Polynomial]) -> Result<()> {
    for g in generators {
        if g.vars() != vars {
            return Err(Error::VariableMismatch {
                left: vars.names().to_vec(),
                right: g.vars().names().to_vec(),
            });
        }
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if g.homogeneous_degree().is_none() {
            return Err(Error::NotHomogeneous);
        }
    }
    Ok(())
}

fn multiples_matrix(
    vars: &VariableSet,
    generators: &[Polynomial],
    degree: u32,
    index: &HashMap<Monomial, usize>,
) -> ExactMatrix {
    let cols = index.len();
    let mut rows = Vec::new();
    for g in generators {
        let gd = g.homogeneous_degree().expect("validated");
        if gd > degree {
            continue;
        }
        for m in graded_monomials(vars.len(), degree - gd) {
            let mut row = vec![Rational::zero(); cols];
            for (mono, c) in g.mul_monomial(&m).terms() {
                row[index[mono]] = c.clone();
            }
            rows.push(row);
        }
    }
    ExactMatrix::from_rows(cols, rows)
}

/// Dimension of `I_k` for the ideal generated by `generators`.
pub fn ideal_degree_dim(vars: &VariableSet, generators: &[Polynomial], k: u32) -> Result<usize> {
    validate_generators(vars, generators)?;
    let monomials = graded_monomials(vars.len(), k);
    let index: HashMap<Monomial, usize> = monomials.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(multiples_matrix(vars, generators, k, &index).rank())
}

/// Expected `dim (S/(f, g))_k` for a regular sequence of degrees `a`, `b`
/// in `nvars` variables:
/// `dim S_k - dim S_{k-a} - dim S_{k-b} + dim S_{k-a-b}`.
pub fn koszul_expected_dim(a: u32, b: u32, nvars: usize, k: u32) -> usize {
    let s = |d: i64| monomial_count(nvars, d);
    let (a, b, k) = (i64::from(a), i64::from(b), i64::from(k));
    s(k) + s(k - a - b) - s(k - a) - s(k - b)
}

/// Checks that `(f, g)` behaves as a regular sequence in each listed degree
/// and in degree `a + b - 1`. Two forms fail to be a regular sequence only
/// through a common factor, and a common factor already produces a
/// non-Koszul syzygy by degree `a + b - 1`.
pub fn check_regular_pair(f: &Polynomial, g: &Polynomial, degrees: &[u32]) -> Result<()> {
    let vars = f.vars();
    let gens = [f.clone(), g.clone()];
    validate_generators(vars, &gens)?;
    let a = f.homogeneous_degree().expect("validated");
    let b = g.homogeneous_degree().expect("validated");
    let mut all: Vec<u32> = degrees.to_vec();
    all.push(a + b - 1);
    all.sort_unstable();
    all.dedup();
    for degree in all {
        let computed = monomial_count(vars.len(), i64::from(degree)) - ideal_degree_dim(vars, &gens, degree)?;
        let expected = koszul_expected_dim(a, b, vars.len(), degree);
        if computed != expected {
            return Err(Error::NotRegularSequence {
                a,
                b,
                degree,
                computed,
                expected,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn p4(text: &str) -> Polynomial {
        Polynomial::parse(text, &VariableSet::indexed("x", 4)).unwrap()
    }

    fn xyz(text: &str) -> Polynomial {
        Polynomial::parse(text, &VariableSet::xyz()).unwrap()
    }

    #[test]
    fn two_cubics_in_degree_four() {
        let vars = VariableSet::indexed("x", 4);
        let gens = [p4("x0^3+x1^3+x2^3+x3^3"), p4("x0^3+2*x1^3+3*x2^3+4*x3^3")];
        assert_eq!(ideal_degree_dim(&vars, &gens, 4).unwrap(), 8);
        let ctx = GradedQuotientContext::new(&vars, &gens, 4).unwrap();
        assert_eq!(ctx.dim(), 27);
    }

    #[test]
    fn generator_above_degree_contributes_nothing() {
        let vars = VariableSet::xyz();
        assert_eq!(ideal_degree_dim(&vars, &[xyz("x^4+y^4+z^4")], 2).unwrap(), 0);
        let ctx = GradedQuotientContext::new(&vars, &[xyz("x^4+y^4+z^4")], 2).unwrap();
        assert_eq!(ctx.dim(), 6);
        assert_eq!(ctx.basis(), graded_monomials(3, 2));
    }

    #[test]
    fn unique_quadric() {
        let vars = VariableSet::indexed("x", 4);
        assert_eq!(ideal_degree_dim(&vars, &[p4("x0x1-x2x3")], 2).unwrap(), 1);
        let ctx = GradedQuotientContext::new(&vars, &[p4("x0x1-x2x3"), p4("x0^3+x1^3+x2^3+x3^3")], 2).unwrap();
        assert_eq!(ctx.dim(), 9);
        assert!(!ctx.basis().contains(&p4("x0x1").terms().next().unwrap().0.clone()));
    }

    #[test]
    fn reduce_uses_the_quadric() {
        let vars = VariableSet::indexed("x", 4);
        let ctx = GradedQuotientContext::new(&vars, &[p4("x0x1-x2x3")], 2).unwrap();
        assert_eq!(ctx.reduce(&p4("x0x1")).unwrap(), ctx.reduce(&p4("x2x3")).unwrap());
        assert_eq!(ctx.lift(&ctx.reduce(&p4("x0x1+x0^2")).unwrap()), p4("x0^2+x2x3"));
    }

    #[test]
    fn reduce_zero_and_multiples() {
        let vars = VariableSet::xyz();
        let ctx = GradedQuotientContext::new(&vars, &[xyz("x^3"), xyz("y^3"), xyz("z^3")], 5).unwrap();
        let zero = ctx.reduce(&Polynomial::zero(&vars)).unwrap();
        assert!(zero.iter().all(Zero::is_zero));
        assert_eq!(zero.len(), ctx.dim());
        assert!(ctx.reduce(&xyz("x^3y^2")).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn reduce_errors() {
        let vars = VariableSet::xyz();
        let ctx = GradedQuotientContext::new(&vars, &[xyz("x^2")], 3).unwrap();
        assert!(matches!(
            ctx.reduce(&xyz("x^2")),
            Err(Error::DegreeMismatch { expected: 3, found: 2 })
        ));
        assert!(matches!(ctx.reduce(&xyz("x^3+y")), Err(Error::NotHomogeneous)));
        assert!(matches!(ctx.reduce(&p4("x0^3")), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn generator_validation() {
        let vars = VariableSet::xyz();
        assert_eq!(ideal_degree_dim(&vars, &[xyz("x^2+y")], 3), Err(Error::NotHomogeneous));
        assert_eq!(
            ideal_degree_dim(&vars, &[Polynomial::zero(&vars)], 3),
            Err(Error::ZeroGenerator)
        );
    }

    #[test]
    fn koszul_counts() {
        assert_eq!(koszul_expected_dim(2, 3, 4, 2), 9);
        assert_eq!(koszul_expected_dim(3, 3, 4, 4), 27);
        assert_eq!(koszul_expected_dim(2, 3, 4, 0), 1);
    }

    #[test]
    fn regular_pair_detection() {
        let q = p4("x0x1-x2x3");
        check_regular_pair(&q, &p4("x0^3+x1^3+x2^3+x3^3"), &[1, 2]).unwrap();
        let ql = q.try_mul(&p4("x0+x3")).unwrap();
        let err = check_regular_pair(&q, &ql, &[1, 2]).unwrap_err();
        assert!(matches!(err, Error::NotRegularSequence { degree: 4, .. }));
    }

    #[test]
    fn rational_generators() {
        let vars = VariableSet::xyz();
        let g = xyz("1/2*x^2-3*y^2");
        let ctx = GradedQuotientContext::new(&vars, std::slice::from_ref(&g), 2).unwrap();
        assert_eq!(ctx.dim(), 5);
        let coords = ctx.reduce(&xyz("x^2")).unwrap();
        assert_eq!(ctx.lift(&coords), xyz("6*y^2"));
        assert_eq!(ctx.reduce(&g.scale(&rat(7))).unwrap(), vec![rat(0); 5]);
    }
}
