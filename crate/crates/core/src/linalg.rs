//! Dense exact linear algebra over the rationals.
//!
//! Elimination runs fraction-free (Bareiss) on integer rows: each row is first
//! scaled by the lcm of its denominators, which leaves the row space unchanged.
//! The echelon form is only turned back into rationals for the final reduced
//! row echelon form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    /// Builds a matrix from rows; `cols` fixes the width so that a matrix
    /// with zero rows still has a shape.
    ///
    /// Panics if a row has the wrong length.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            entries.extend(row);
        }
        Self { rows: n, cols, entries }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        for col in columns {
            assert_eq!(col.len(), rows, "column has wrong length");
        }
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        self.row_iter()
            .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn mul_int_vec(&self, v: &[BigInt]) -> Vec<Rational> {
        let v: Vec<Rational> = v.iter().cloned().map(Rational::from_integer).collect();
        self.mul_vec(&v)
    }

    /// `out[i][j] = self[row_perm[i]][col_perm[j]]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        Self::from_fn(row_perm.len(), col_perm.len(), |r, c| {
            self.get(row_perm[r], col_perm[c]).clone()
        })
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.integer_echelon().1.len()
    }

    /// Reduced row echelon form together with the strictly increasing list
    /// of pivot columns. Zero rows are moved to the bottom.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let (echelon, pivots) = self.integer_echelon();
        let mut out = ExactMatrix::zeros(self.rows, self.cols);
        for (r, row) in echelon.iter().take(pivots.len()).enumerate() {
            for (c, x) in row.iter().enumerate() {
                out.set(r, c, Rational::from_integer(x.clone()));
            }
        }
        for (r, &p) in pivots.iter().enumerate().rev() {
            let inv = out.get(r, p).recip();
            for c in p..self.cols {
                let v = out.get(r, c) * &inv;
                out.set(r, c, v);
            }
            for above in 0..r {
                let factor = out.get(above, p).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in p..self.cols {
                    let v = out.get(above, c) - &factor * out.get(r, c);
                    out.set(above, c, v);
                }
            }
        }
        (out, pivots)
    }

    /// Basis of the right null space. Each vector is a primitive integer
    /// vector whose first nonzero entry is positive; there is one vector per
    /// non-pivot column, in increasing column order.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(r, free).clone();
                }
                primitive_integer_vector(&v)
            })
            .collect()
    }

    /// Fraction-free forward elimination. Returns integer rows in echelon
    /// form (only the first `pivots.len()` rows are meaningful) and the pivot
    /// columns. The pivot in each column is the first nonzero entry at or
    /// below the current row.
    fn integer_echelon(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut a: Vec<Vec<BigInt>> = self.row_iter().map(integer_row).collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(found) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, found);
            let (head, tail) = a.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let p = &pivot_row[c];
            for row in tail.iter_mut() {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..self.cols {
                    let num = p * &row[j] - &lead * &pivot_row[j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                    row[j] = num / &prev;
                }
            }
            prev = pivot_row[c].clone();
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let scale = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&scale / x.denom())).collect()
}

/// Scales a rational vector to a primitive integer vector with positive
/// leading entry. The zero vector maps to the zero vector.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let mut ints = integer_row(v);
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return ints;
    }
    let negate = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in &mut ints {
        *x = &*x / &content;
        if negate {
            *x = -&*x;
        }
    }
    ints
}

impl fmt::Display for ExactMatrix {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn proportional_rows() {
        let m = ExactMatrix::from_i64_rows(&[&[1, 1], &[2, 2]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn empty_matrix() {
        let m = ExactMatrix::zeros(0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().len(), 3);
        assert_eq!(ExactMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn single_relation_kernel() {
        let m = ExactMatrix::from_i64_rows(&[&[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![ints(&[1, -1])]);
    }

    #[test]
    fn identity_has_empty_kernel() {
        assert!(ExactMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn rref_scales_pivot() {
        let (r, p) = ExactMatrix::from_i64_rows(&[&[2, 4]]).rref();
        assert_eq!(r, ExactMatrix::from_i64_rows(&[&[1, 2]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_identity_and_permutation() {
        let id = ExactMatrix::identity(3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let swap = ExactMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.rref(), (ExactMatrix::identity(2), vec![0, 1]));
    }

    #[test]
    fn rational_entries_and_skipped_columns() {
        let m = ExactMatrix::from_rows(
            4,
            vec![
                vec![rat(0), Rational::new(1.into(), 2.into()), rat(1), rat(3)],
                vec![rat(0), rat(1), rat(2), rat(6)],
                vec![rat(0), rat(0), Rational::new(2.into(), 3.into()), rat(1)],
            ],
        );
        assert_eq!(m.rank(), 2);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert!(m.mul_int_vec(v).iter().all(Zero::is_zero));
        }
        assert_eq!(kernel[0], ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn kernel_sign_and_content() {
        let m = ExactMatrix::from_i64_rows(&[&[2, 4, -6]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![ints(&[2, -1, 0]), ints(&[3, 0, 1])]);
    }

    #[test]
    fn display_row_per_line() {
        let m = ExactMatrix::from_rows(1, vec![vec![rat(1)], vec![Rational::new((-3).into(), 4.into())]]);
        assert_eq!(m.to_string(), "1\n-3/4");
    }
}
