//! Subspace-tuple counts: the linear-algebra interpretation of the
//! alternating `M`-sums.
//!
//! Subspaces of `F_q^m` are represented as bitmasks over point codes
//! (a vector `(v_0..v_(m-1))` has code `sum v_i q^i`), so intersection is a
//! bitwise AND. This caps `q^m` at 128 points, ample for oracle scale.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gl::OracleConfig;
use super::OracleError;

fn decode(code: u64, m: usize, q: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(m);
    let mut c = code;
    for _ in 0..m {
        v.push(c % q);
        c /= q;
    }
    v
}

fn encode(v: &[u64], q: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &x| acc * q + x)
}

/// All subspaces of `F_q^m` of each dimension `0..=m`, as point bitmasks.
fn subspaces_by_dim(m: usize, q: u64) -> Vec<Vec<u128>> {
    let points = (q as u32).pow(m as u32) as u64;
    assert!(points <= 128, "q^m must fit in a 128-bit mask");
    let zero_mask: u128 = 1; // just the zero vector
    let mut by_dim: Vec<Vec<u128>> = vec![vec![zero_mask]];
    for d in 1..=m {
        let mut seen = std::collections::BTreeSet::new();
        for &span in &by_dim[d - 1] {
            for v in 1..points {
                if span >> v & 1 == 1 {
                    continue; // already inside
                }
                // close the span under adding multiples of v
                let vv = decode(v, m, q);
                let mut bigger: u128 = 0;
                for w in 0..points {
                    if span >> w & 1 == 0 {
                        continue;
                    }
                    let ww = decode(w, m, q);
                    for a in 0..q {
                        let sum: Vec<u64> =
                            ww.iter().zip(&vv).map(|(&x, &y)| (x + a * y) % q).collect();
                        bigger |= 1 << encode(&sum, q);
                    }
                }
                seen.insert(bigger);
            }
        }
        by_dim.push(seen.into_iter().collect());
    }
    by_dim
}

/// Number of tuples `(W_1, ..., W_k)` of subspaces of `F_q^m` with
/// `dim W_i = r_i` and trivial common intersection.
pub fn subspace_meet_count(
    m: usize,
    q: u64,
    rs: &[usize],
    cfg: &OracleConfig,
) -> Result<BigInt, OracleError> {
    assert!(rs.iter().all(|&r| r <= m));
    let by_dim = subspaces_by_dim(m, q);
    let mut needed = BigInt::one();
    for &r in rs {
        needed *= BigInt::from(by_dim[r].len());
    }
    if needed > BigInt::from(cfg.budget) {
        return Err(OracleError::BudgetExceeded {
            needed: needed.to_string(),
            budget: cfg.budget,
        });
    }
    let mut count = BigInt::zero();
    let full: u128 = u128::MAX;
    fn rec(by_dim: &[Vec<u128>], rs: &[usize], level: usize, inter: u128, count: &mut BigInt) {
        if level == rs.len() {
            if inter == 1 {
                *count += 1;
            }
            return;
        }
        for &w in &by_dim[rs[level]] {
            let next = inter & w;
            if next == 1 && level + 1 < rs.len() {
                // intersection already trivial: every completion counts
                let mut tail = BigInt::one();
                for &r in &rs[level + 1..] {
                    tail *= BigInt::from(by_dim[r].len());
                }
                *count += tail;
                continue;
            }
            rec(by_dim, rs, level + 1, next, count);
        }
    }
    rec(&by_dim, rs, 0, full, &mut count);
    Ok(count)
}

/// Number of subspaces of each dimension (for cross-checks against the
/// Gaussian binomial).
pub fn subspace_counts(m: usize, q: u64) -> Vec<usize> {
    subspaces_by_dim(m, q).iter().map(|v| v.len()).collect()
}
