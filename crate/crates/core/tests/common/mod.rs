//! Independent brute-force oracles. Nothing here calls into the elimination
//! or monomial-enumeration code under test.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Plain Gauss–Jordan over the rationals, pivot = first nonzero in column.
pub fn oracle_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for x in rows[rank].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                let pivot_row = rows[rank].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exponent triples of degree `k` in three variables, by nested loops.
pub fn monomials3(k: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=k - a {
            out.push([a, b, k - a - b]);
        }
    }
    out
}

/// Exponent vectors of degree `k` in `n` variables.
pub fn monomials_n(n: usize, k: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for e in 0..=k {
        for mut rest in monomials_n(n - 1, k - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

pub type Dense = HashMap<Vec<u32>, Q>;

pub fn dense_mul_monomial(p: &Dense, m: &[u32]) -> Dense {
    p.iter()
        .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
        .collect()
}

pub fn dense_row(p: &Dense, basis: &[Vec<u32>]) -> Vec<Q> {
    basis
        .iter()
        .map(|m| p.get(m).cloned().unwrap_or_else(Q::zero))
        .collect()
}

/// `dim (S/(gens))_k` by stacking every monomial multiple and ranking.
pub fn oracle_quotient_dim(n: usize, gens: &[(Dense, u32)], k: u32) -> usize {
    let basis = monomials_n(n, k);
    let mut rows = Vec::new();
    for (g, d) in gens {
        if *d > k {
            continue;
        }
        for m in monomials_n(n, k - d) {
            rows.push(dense_row(&dense_mul_monomial(g, &m), &basis));
        }
    }
    basis.len() - oracle_rank(rows)
}

pub fn monomial_dense(e: Vec<u32>) -> Dense {
    let mut d = Dense::new();
    d.insert(e, Q::one());
    d
}
