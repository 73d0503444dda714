//! Brute-force factorization counts in `GL_n(F_q)`.
//!
//! Only `k - 1` factors are free: the last one is pinned by the product
//! constraint, so a k-factor count enumerates `|G|^(k-1)` tuples.

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::OracleError;
use crate::glnq::{char_poly, enumerate_gl, group_order, MatrixFq};
use crate::table::CountTable;

/// Enumeration limits and sharding for the oracle.
#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Hard ceiling on the number of enumerated tuples.
    pub budget: u64,
    /// Worker threads for sharded enumeration (1 = sequential).
    pub threads: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: 100_000_000,
            threads: 1,
        }
    }
}

fn check_budget(needed: &BigInt, cfg: &OracleConfig) -> Result<(), OracleError> {
    if *needed > BigInt::from(cfg.budget) {
        return Err(OracleError::BudgetExceeded {
            needed: needed.to_string(),
            budget: cfg.budget,
        });
    }
    Ok(())
}

/// The group as a vector (deterministic enumeration order) together with
/// per-element inverses and fixed space dimensions.
struct GroupCache {
    elements: Vec<MatrixFq>,
    inverses: Vec<MatrixFq>,
    fixed_dims: Vec<usize>,
}

impl GroupCache {
    fn build(n: usize, q: u64) -> Result<Self, OracleError> {
        let elements: Vec<MatrixFq> = enumerate_gl(n, q)?.collect();
        let inverses = elements
            .iter()
            .map(|m| m.inverse().expect("group element"))
            .collect();
        let fixed_dims = elements.iter().map(|m| m.fixed_dim()).collect();
        Ok(GroupCache {
            elements,
            inverses,
            fixed_dims,
        })
    }
}

/// Count factorizations `u_1 ... u_k = c` of a regular elliptic `c` by the
/// vector of fixed space dimensions `(dim fix u_1, ..., dim fix u_k)`.
pub fn brute_count_gl(
    n: usize,
    q: u64,
    k: usize,
    c: &MatrixFq,
    cfg: &OracleConfig,
) -> Result<CountTable<BigInt>, OracleError> {
    assert!(k >= 2);
    assert_eq!(c.dim(), n);
    assert_eq!(c.modulus(), q);
    if !char_poly(c).is_irreducible() {
        return Err(OracleError::NotRegularElliptic);
    }
    let order = group_order(n, q);
    check_budget(&order.pow(k as u32 - 1), cfg)?;
    let cache = GroupCache::build(n, q)?;
    let count = cache.elements.len();
    let table = sharded(count, cfg.threads, k, n, |range| {
        let mut local = CountTable::new(k, n);
        let mut dims = vec![0usize; k];
        for first in range {
            walk(&cache, c, k, first, &mut dims, &mut local);
        }
        local
    });
    Ok(table)
}

/// Recursively choose factors `u_1..u_(k-1)`; the residual product
/// `w = u_i^-1 ... u_1^-1 c` pins the final factor.
fn walk(
    cache: &GroupCache,
    c: &MatrixFq,
    k: usize,
    first: usize,
    dims: &mut Vec<usize>,
    table: &mut CountTable<BigInt>,
) {
    dims[0] = cache.fixed_dims[first];
    let w = cache.inverses[first].mul(c);
    walk_rec(cache, k, 1, &w, dims, table);
}

fn walk_rec(
    cache: &GroupCache,
    k: usize,
    level: usize,
    w: &MatrixFq,
    dims: &mut Vec<usize>,
    table: &mut CountTable<BigInt>,
) {
    if level == k - 1 {
        dims[k - 1] = w.fixed_dim();
        table.bump(dims.clone());
        return;
    }
    for i in 0..cache.elements.len() {
        dims[level] = cache.fixed_dims[i];
        let next = cache.inverses[i].mul(w);
        walk_rec(cache, k, level + 1, &next, dims, table);
    }
}

/// Shard `0..count` over the first free factor and merge partial tables;
/// merging is exact addition, so the result is schedule-independent.
fn sharded(
    count: usize,
    threads: usize,
    arity: usize,
    rank: usize,
    work: impl Fn(Range<usize>) -> CountTable<BigInt> + Sync,
) -> CountTable<BigInt> {
    let threads = threads.clamp(1, count.max(1));
    if threads == 1 {
        return work(0..count);
    }
    let chunk = count.div_ceil(threads);
    let mut partials: Vec<(usize, CountTable<BigInt>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let lo = t * chunk;
                let hi = ((t + 1) * chunk).min(count);
                let work = &work;
                scope.spawn(move || (t, work(lo..hi)))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("shard"))
            .collect()
    });
    partials.sort_by_key(|(t, _)| *t);
    let mut out = CountTable::new(arity, rank);
    for (_, part) in partials {
        out.merge(part);
    }
    out
}

/// Histogram of factorization genus `(k-1) n - sum r_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusHistogram {
    arity: usize,
    rank: usize,
    counts: BTreeMap<i64, BigInt>,
}

impl GenusHistogram {
    pub fn counts(&self) -> &BTreeMap<i64, BigInt> {
        &self.counts
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    /// Exact mean genus.
    pub fn mean(&self) -> BigRational {
        let total = self.total();
        assert!(!total.is_zero());
        let weighted: BigInt = self.counts.iter().map(|(&g, c)| BigInt::from(g) * c).sum();
        BigRational::new(weighted, total)
    }
}

/// Genus distribution of all k-factor factorizations of a regular elliptic
/// element (the first one found for this `n`, `q`).
pub fn genus_stats(
    n: usize,
    q: u64,
    k: usize,
    cfg: &OracleConfig,
) -> Result<GenusHistogram, OracleError> {
    let c = crate::glnq::find_regular_elliptic(n, q, false);
    let table = brute_count_gl(n, q, k, &c, cfg)?;
    let mut counts = BTreeMap::new();
    for (dims, v) in table.iter() {
        let genus = (k as i64 - 1) * n as i64 - dims.iter().map(|&r| r as i64).sum::<i64>();
        *counts.entry(genus).or_insert_with(BigInt::zero) += v;
    }
    Ok(GenusHistogram {
        arity: k,
        rank: n,
        counts,
    })
}

/// Number of surjective linear maps from `F_q^d` onto `F_q^r`:
/// `prod_{i=0}^{r-1} (q^d - q^i)`; zero when `d < r`.
pub fn surjection_count(q: u64, d: usize, r: usize) -> BigInt {
    let qd = BigInt::from(q).pow(d as u32);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc *= &qd - BigInt::from(q).pow(i as u32);
    }
    acc
}

/// Surjection-weighted two-factor count:
/// `sum over u of surj(dim fix u, r) * surj(dim fix u^-1 c, s)`.
pub fn colored_count(
    n: usize,
    q: u64,
    r: usize,
    s: usize,
    cfg: &OracleConfig,
) -> Result<BigInt, OracleError> {
    let order = group_order(n, q);
    check_budget(&order, cfg)?;
    let c = crate::glnq::find_regular_elliptic(n, q, false);
    let cache = GroupCache::build(n, q)?;
    // weights depend only on the fixed space dimension
    let wu: Vec<BigInt> = (0..=n).map(|d| surjection_count(q, d, r)).collect();
    let wv: Vec<BigInt> = (0..=n).map(|d| surjection_count(q, d, s)).collect();
    let mut acc = BigInt::zero();
    for i in 0..cache.elements.len() {
        let du = cache.fixed_dims[i];
        if wu[du].is_zero() {
            continue;
        }
        let v = cache.inverses[i].mul(&c);
        acc += &wu[du] * &wv[v.fixed_dim()];
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glnq::find_regular_elliptic;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn two_factor_table_gl2_f2() {
        let c = find_regular_elliptic(2, 2, false);
        let t = brute_count_gl(2, 2, 2, &c, &cfg()).unwrap();
        assert_eq!(t.get(&[2, 0]), Some(&BigInt::from(1)));
        assert_eq!(t.get(&[0, 2]), Some(&BigInt::from(1)));
        assert_eq!(t.get(&[1, 1]), Some(&BigInt::from(3)));
        assert_eq!(t.get(&[0, 0]), Some(&BigInt::from(1)));
        assert_eq!(t.len(), 4);
        assert_eq!(t.total(), BigInt::from(6));
    }

    #[test]
    fn three_factor_table_gl2_f2() {
        let c = find_regular_elliptic(2, 2, false);
        let t = brute_count_gl(2, 2, 3, &c, &cfg()).unwrap();
        assert_eq!(t.get(&[1, 1, 1]), None); // the (1,1,1) cell is empty
        assert_eq!(t.total(), BigInt::from(36));
    }

    #[test]
    fn count_is_independent_of_regular_elliptic_choice() {
        // Over F_2 there is a single irreducible quadratic, but two distinct
        // regular elliptic elements share it; over F_2 in rank 3 there are
        // two distinct irreducible cubics. Both kinds of variation must
        // leave the table unchanged.
        let both_gl2: Vec<MatrixFq> = crate::glnq::enumerate_gl(2, 2)
            .unwrap()
            .filter(|m| char_poly(m).is_irreducible())
            .collect();
        assert_eq!(both_gl2.len(), 2);
        let t0 = brute_count_gl(2, 2, 2, &both_gl2[0], &cfg()).unwrap();
        let t1 = brute_count_gl(2, 2, 2, &both_gl2[1], &cfg()).unwrap();
        assert_eq!(t0, t1);

        for (n, q) in [(3usize, 2u64), (2, 3)] {
            let mut tables = Vec::new();
            let total = q.pow(n as u32);
            for code in 0..total {
                let mut coeffs = Vec::new();
                let mut v = code;
                for _ in 0..n {
                    coeffs.push(v % q);
                    v /= q;
                }
                coeffs.push(1);
                let f = crate::glnq::PolyFq::new(q, coeffs);
                if f.is_irreducible() {
                    tables.push(brute_count_gl(n, q, 2, &f.companion(), &cfg()).unwrap());
                }
            }
            assert!(tables.len() >= 2, "want several irreducible polynomials");
            for t in &tables[1..] {
                assert_eq!(t, &tables[0], "n={} q={}", n, q);
            }
        }
    }

    #[test]
    fn rejects_non_regular_elliptic() {
        let id = MatrixFq::identity(2, 2);
        assert!(matches!(
            brute_count_gl(2, 2, 2, &id, &cfg()),
            Err(OracleError::NotRegularElliptic)
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let c = find_regular_elliptic(2, 3, false);
        let tight = OracleConfig {
            budget: 10,
            threads: 1,
        };
        assert!(matches!(
            brute_count_gl(2, 3, 2, &c, &tight),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn sharding_does_not_change_results() {
        let c = find_regular_elliptic(3, 2, false);
        let seq = brute_count_gl(3, 2, 2, &c, &cfg()).unwrap();
        let par = brute_count_gl(
            3,
            2,
            2,
            &c,
            &OracleConfig {
                budget: 100_000_000,
                threads: 4,
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn genus_histogram_gl2_f2() {
        let h = genus_stats(2, 2, 2, &cfg()).unwrap();
        let mut expected = BTreeMap::new();
        expected.insert(0, BigInt::from(5));
        expected.insert(2, BigInt::from(1));
        assert_eq!(h.counts(), &expected);
        assert_eq!(h.mean(), BigRational::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(h.total(), BigInt::from(6));
    }

    #[test]
    fn colored_counts_gl2_f2() {
        assert_eq!(colored_count(2, 2, 1, 1, &cfg()).unwrap(), BigInt::from(3));
        assert_eq!(colored_count(2, 2, 2, 0, &cfg()).unwrap(), BigInt::from(6));
        assert_eq!(colored_count(2, 2, 2, 2, &cfg()).unwrap(), BigInt::zero());
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(surjection_count(2, 2, 2), BigInt::from(6));
        assert_eq!(surjection_count(2, 1, 2), BigInt::zero());
        assert_eq!(surjection_count(3, 2, 1), BigInt::from(8));
        assert_eq!(surjection_count(2, 3, 0), BigInt::one());
    }
}
