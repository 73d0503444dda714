//! Exhaustive enumeration of `GL_n(F_q)` and the regular elliptic search.

use num_bigint::BigInt;
use thiserror::Error;

use super::matrix::{assert_prime, MatrixFq};
use super::poly::PolyFq;

/// Default ceiling on `n^2 log2(q)`: at most `2^25` raw matrices are scanned.
pub const DEFAULT_ENUM_BITS: f64 = 25.0;

#[derive(Debug, Error, PartialEq)]
pub enum GlError {
    #[error("enumeration budget exceeded: n^2 log2(q) = {bits:.1} > {max:.1} bits")]
    EnumerationBudget { bits: f64, max: f64 },
}

/// `|GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)`.
pub fn group_order(n: usize, q: u64) -> BigInt {
    assert_prime(q);
    let qn = BigInt::from(q).pow(n as u32);
    let mut acc = BigInt::from(1);
    for i in 0..n {
        acc *= &qn - BigInt::from(q).pow(i as u32);
    }
    acc
}

/// All invertible `n x n` matrices over `F_q` in row-major lexicographic
/// order of their entry vectors, each exactly once.
pub fn enumerate_gl(n: usize, q: u64) -> Result<GlIter, GlError> {
    enumerate_gl_with_budget(n, q, DEFAULT_ENUM_BITS)
}

pub fn enumerate_gl_with_budget(n: usize, q: u64, max_bits: f64) -> Result<GlIter, GlError> {
    assert_prime(q);
    let bits = (n * n) as f64 * (q as f64).log2();
    if bits > max_bits {
        return Err(GlError::EnumerationBudget {
            bits,
            max: max_bits,
        });
    }
    Ok(GlIter {
        n,
        q,
        entries: vec![0; n * n],
        done: false,
    })
}

/// Odometer over entry vectors; yields only invertible matrices.
pub struct GlIter {
    n: usize,
    q: u64,
    entries: Vec<u64>,
    done: bool,
}

impl Iterator for GlIter {
    type Item = MatrixFq;

    fn next(&mut self) -> Option<MatrixFq> {
        while !self.done {
            let m = MatrixFq::new(self.n, self.q, self.entries.clone());
            self.advance();
            if m.is_invertible() {
                return Some(m);
            }
        }
        None
    }
}

impl GlIter {
    fn advance(&mut self) {
        // increment the last entry first: row-major lexicographic order
        for k in (0..self.entries.len()).rev() {
            self.entries[k] += 1;
            if self.entries[k] < self.q {
                return;
            }
            self.entries[k] = 0;
        }
        self.done = true;
    }
}

/// First (in coefficient order) regular elliptic element of `GL_n(F_q)`:
/// the companion matrix of a monic irreducible polynomial of degree `n`.
///
/// With `want_singer`, the element must additionally generate a cyclic group
/// of the full order `q^n - 1`.
pub fn find_regular_elliptic(n: usize, q: u64, want_singer: bool) -> MatrixFq {
    assert_prime(q);
    assert!(n >= 1);
    let total = q.checked_pow((n) as u32).expect("q^n fits u64");
    for code in 0..total {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut c = code;
        for _ in 0..n {
            coeffs.push(c % q);
            c /= q;
        }
        coeffs.push(1);
        let f = PolyFq::new(q, coeffs);
        if !f.is_irreducible() {
            continue;
        }
        let m = f.companion();
        if want_singer && !has_full_order(&m) {
            continue;
        }
        return m;
    }
    unreachable!("irreducible polynomials exist for every n and q");
}

/// True when the multiplicative order of `m` is exactly `q^n - 1`.
fn has_full_order(m: &MatrixFq) -> bool {
    let n = m.dim() as u32;
    let q = m.modulus();
    let full = q.pow(n) - 1;
    let id = MatrixFq::identity(m.dim(), q);
    if m.pow(full) != id {
        return false;
    }
    for p in prime_factors(full) {
        if m.pow(full / p) == id {
            return false;
        }
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
