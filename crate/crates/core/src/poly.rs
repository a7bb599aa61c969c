//! Homogeneous multivariate polynomials with exact rational coefficients.
//!
//! Monomials are ordered graded-lexicographically with the first variable
//! heaviest: higher degree wins, ties are broken by comparing exponent
//! vectors left to right. Every basis in this crate is listed in decreasing
//! order under this rule, so `x` comes before `y` and `x^2` before `x*y`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::Rational;
use crate::{Error, Result};

/// Ordered list of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet(Arc<[String]>);

impl VariableSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Syntax {
                pos: 0,
                msg: "empty variable set".into(),
            });
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let valid = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("invalid variable name `{name}`"),
                });
            }
            if names[..i].contains(name) {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("duplicate variable `{name}`"),
                });
            }
        }
        Ok(Self(names.into()))
    }

    /// `x, y, z`: coordinates of the projective plane.
    pub fn xyz() -> Self {
        Self::new(&["x", "y", "z"]).expect("valid names")
    }

    /// `prefix0, prefix1, ..., prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names).expect("valid names")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.0.to_vec(),
                right: other.0.to_vec(),
            })
        }
    }
}

/// Exponent vector, one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Renders the monomial with the given variable names, e.g. `x^2*y`.
    /// The constant monomial renders as `1`.
    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, vars }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a VariableSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &e) in self.vars.names().iter().zip(self.mono.exponents()) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of total degree `k` in `nvars` variables, in decreasing
/// graded-lex order. There are `C(k + nvars - 1, nvars - 1)` of them.
pub fn graded_monomials(nvars: usize, k: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, left: usize, k: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(k);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            fill(prefix, left - 1, k - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if k == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(nvars), nvars, k, &mut out);
    out
}

/// Number of monomials of degree `k` in `nvars` variables; zero for negative `k`.
pub fn monomial_count(nvars: usize, k: i64) -> usize {
    if k < 0 || nvars == 0 {
        return usize::from(k == 0 && nvars == 0);
    }
    // C(k + n - 1, n - 1), computed incrementally to stay exact.
    let n = nvars as u128 - 1;
    let mut acc: u128 = 1;
    for i in 1..=n {
        acc = acc * (k as u128 + i) / i;
    }
    acc as usize
}

/// Polynomial with exact rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: VariableSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &VariableSet) -> Self {
        Self {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(vars: &VariableSet, mono: Monomial, coeff: Rational) -> Self {
        assert_eq!(mono.nvars(), vars.len(), "monomial arity does not match variable set");
        let mut p = Self::zero(vars);
        p.add_term(mono, coeff);
        p
    }

    pub fn from_terms(vars: &VariableSet, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len(), "monomial arity does not match variable set");
            p.add_term(m, c);
        }
        p
    }

    pub fn parse(text: &str, vars: &VariableSet) -> Result<Self> {
        Parser::new(text, vars).parse()
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// The common degree of all terms, or `None` for an inhomogeneous or
    /// zero polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.vars.ensure_same(&other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.vars.ensure_same(&other.vars)?;
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    /// Formal partial derivative with respect to the variable at `var`.
    ///
    /// Panics if `var` is out of range.
    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.vars.len(), "variable index {var} out of range");
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            let constant = m.degree() == 0;
            if constant {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.vars))?;
            } else {
                write!(f, "{abs}*{}", m.display(&self.vars))?;
            }
        }
        Ok(())
    }
}

/// Parses a polynomial over `vars`. See [`Polynomial::parse`].
pub fn parse_poly(text: &str, vars: &VariableSet) -> Result<Polynomial> {
    Polynomial::parse(text, vars)
}

/// Recursive-descent parser for sums of terms such as `x0*x1-x2*x3` or
/// `3/4*x^2y+z^2`. Juxtaposed variables multiply; a `*` is required between
/// a number and a letter. Positions in errors are byte offsets.
struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    vars: &'a VariableSet,
}

enum Factor {
    Number(Rational),
    Power(usize, u32),
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: &'a VariableSet) -> Self {
        Self {
            text,
            bytes: text.as_bytes(),
            pos: 0,
            vars,
        }
    }

    fn syntax<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut poly = Polynomial::zero(self.vars);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return self.syntax(self.pos, "empty polynomial"),
            _ => false,
        };
        loop {
            let (mono, mut coeff) = self.term()?;
            if negate {
                coeff = -coeff;
            }
            poly.add_term(mono, coeff);
            match self.peek() {
                None => return Ok(poly),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(c) => return self.syntax(self.pos, format!("unexpected `{}`", c as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = Rational::one();
        let mut last_was_number = false;
        let mut first = true;
        loop {
            let c = self.peek();
            let starts_factor = matches!(c, Some(b) if b.is_ascii_alphanumeric() || b == b'_');
            if !first {
                match c {
                    Some(b'*') => {
                        self.pos += 1;
                        if !matches!(self.peek(), Some(b) if b.is_ascii_alphanumeric() || b == b'_') {
                            return self.syntax(self.pos, "expected a factor after `*`");
                        }
                    }
                    Some(b) if b.is_ascii_digit() => {
                        return self.syntax(self.pos, "`*` is required before a number");
                    }
                    Some(_) if starts_factor => {
                        if last_was_number {
                            return self.syntax(self.pos, "`*` is required between a number and a variable");
                        }
                    }
                    _ => break,
                }
            } else if !starts_factor {
                return self.syntax(self.pos, "expected a coefficient or variable");
            }
            first = false;
            match self.factor()? {
                Factor::Number(n) => {
                    coeff *= n;
                    last_was_number = true;
                }
                Factor::Power(var, e) => {
                    exps[var] = exps[var].checked_add(e).ok_or(Error::Syntax {
                        pos: self.pos,
                        msg: "exponent overflow".into(),
                    })?;
                    last_was_number = false;
                }
            }
        }
        Ok((Monomial(exps), coeff))
    }

    fn factor(&mut self) -> Result<Factor> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes[start].is_ascii_digit() {
            let num = self.integer()?;
            if self.bytes.get(self.pos) == Some(&b'/') {
                self.pos += 1;
                let den_pos = self.pos;
                if !self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return self.syntax(den_pos, "expected a denominator");
                }
                let den = self.integer()?;
                if den.is_zero() {
                    return self.syntax(den_pos, "zero denominator");
                }
                return Ok(Factor::Number(Rational::new(num, den)));
            }
            return Ok(Factor::Number(Rational::from_integer(num)));
        }
        let var = self.variable()?;
        let mut exp = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(b'-') => return Err(Error::NegativeExponent { pos: self.pos }),
                Some(b) if b.is_ascii_digit() => {}
                _ => return self.syntax(self.pos, "expected an exponent after `^`"),
            }
            let e_pos = self.pos;
            exp = self
                .integer()?
                .try_into()
                .or_else(|_| self.syntax(e_pos, "exponent too large"))?;
        }
        Ok(Factor::Power(var, exp))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse()
            .or_else(|_| self.syntax(start, "invalid integer"))
    }

    /// Longest declared variable name that prefixes the remaining input.
    fn variable(&mut self) -> Result<usize> {
        let rest = &self.text[self.pos..];
        let best = self
            .vars
            .names()
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        if let Some((i, name)) = best {
            self.pos += name.len();
            return Ok(i);
        }
        let len = rest
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
            .count();
        Err(Error::UnknownVariable {
            name: rest[..len].to_string(),
            pos: self.pos,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn xyz(text: &str) -> Polynomial {
        Polynomial::parse(text, &VariableSet::xyz()).unwrap()
    }

    #[test]
    fn parses_fermat_quartic() {
        let f = xyz("x^4+y^4+z^4");
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.homogeneous_degree(), Some(4));
        assert_eq!(f.to_string(), "x^4+y^4+z^4");
    }

    #[test]
    fn parses_quadric_in_four_variables() {
        let vars = VariableSet::indexed("x", 4);
        let q = Polynomial::parse("x0*x1-x2*x3", &vars).unwrap();
        assert_eq!(q.num_terms(), 2);
        assert_eq!(q.to_string(), "x0*x1-x2*x3");
        assert_eq!(Polynomial::parse("x0x1 - x2 x3", &vars).unwrap(), q);
    }

    #[test]
    fn parses_zero() {
        assert!(xyz("0").is_zero());
        assert!(xyz("x-x").is_zero());
        assert_eq!(xyz("0").homogeneous_degree(), None);
    }

    #[test]
    fn juxtaposition_and_coefficients() {
        assert_eq!(xyz("x^2yz"), xyz("x^2*y*z"));
        assert_eq!(xyz("-3/4*x y^2 + 2*z^3").to_string(), "-3/4*x*y^2+2*z^3");
        assert_eq!(xyz("2*3*x").coeff(&Monomial::var(3, 0)), rat(6));
    }

    #[test]
    fn parse_errors() {
        let v = VariableSet::xyz();
        assert!(matches!(
            Polynomial::parse("x+w", &v),
            Err(Error::UnknownVariable { pos: 2, .. })
        ));
        assert!(matches!(
            Polynomial::parse("x^-1", &v),
            Err(Error::NegativeExponent { pos: 2 })
        ));
        assert!(matches!(Polynomial::parse("2x", &v), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(Polynomial::parse("x+", &v), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("", &v), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(Polynomial::parse("x^", &v), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("x*(y)", &v), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("x2", &v), Err(Error::Syntax { pos: 1, .. })));
    }

    #[test]
    fn graded_monomial_order() {
        let m1: Vec<String> = graded_monomials(3, 1)
            .iter()
            .map(|m| m.display(&VariableSet::xyz()).to_string())
            .collect();
        assert_eq!(m1, ["x", "y", "z"]);
        let m2: Vec<String> = graded_monomials(3, 2)
            .iter()
            .map(|m| m.display(&VariableSet::xyz()).to_string())
            .collect();
        assert_eq!(m2, ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        assert_eq!(graded_monomials(4, 4).len(), 35);
        assert_eq!(graded_monomials(3, 0), vec![Monomial::one(3)]);
    }

    #[test]
    fn monomial_counts_match_enumeration() {
        for n in 1..=6 {
            for k in 0..=20u32 {
                assert_eq!(graded_monomials(n, k).len(), monomial_count(n, k as i64), "n={n} k={k}");
            }
        }
        assert_eq!(monomial_count(4, -1), 0);
    }

    #[test]
    fn products() {
        assert_eq!(xyz("x").try_mul(&xyz("y")).unwrap(), xyz("xy"));
        assert_eq!(xyz("x+y").try_mul(&xyz("x-y")).unwrap(), xyz("x^2-y^2"));
        assert_eq!(xyz("x^3").try_mul(&xyz("x+y+z")).unwrap(), xyz("x^4+x^3y+x^3z"));
        let other = Polynomial::parse("x0", &VariableSet::indexed("x", 4)).unwrap();
        assert!(matches!(xyz("x").try_mul(&other), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn derivatives() {
        assert_eq!(xyz("x^4+y^4+z^4").partial_derivative(0), xyz("4*x^3"));
        assert!(xyz("x^2").partial_derivative(1).is_zero());
        assert_eq!(xyz("xy").partial_derivative(0), xyz("y"));
    }

    #[test]
    fn inhomogeneous_degree() {
        assert_eq!(xyz("x^2+y").homogeneous_degree(), None);
    }
}
