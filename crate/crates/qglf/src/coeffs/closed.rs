//! Closed-form coefficient and count formulas.
//!
//! The central objects are the two-factor coefficients `b_{t,u}(q)`, their
//! k-factor generalization built from the alternating `M`-sums, the genus-0
//! product formula, and the reflection-factorization count.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{choose2, qbin, qfactorial, qint, qq_pochhammer, Domain};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoeffError {
    #[error("dimension vector has genus {genus}, expected 0")]
    NotGenusZero { genus: i64 },
    #[error("formula undefined when some entry equals the rank")]
    FullFixedSpaceEntry,
    #[error("explicit two-factor formula needs genus > 0 and r, s > 0 (got g={g}, r={r}, s={s})")]
    ExplicitFormulaRange { g: i64, r: i64, s: i64 },
    #[error("the genus polynomial is defined for genus >= 1")]
    PositiveGenusRequired,
}

/// Vector of fixed space dimensions `(r_1, ..., r_k)` for factors in rank `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DimVector {
    entries: Vec<usize>,
    rank: usize,
}

impl DimVector {
    pub fn new(entries: Vec<usize>, rank: usize) -> Self {
        assert!(
            entries.iter().all(|&r| r <= rank),
            "entries must lie in [0, rank]"
        );
        DimVector { entries, rank }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    /// `(k - 1) n - sum r_i`; negative genus means the count is zero.
    pub fn genus(&self) -> i64 {
        let k = self.entries.len() as i64;
        let sum: i64 = self.entries.iter().map(|&r| r as i64).sum();
        (k - 1) * self.rank as i64 - sum
    }
}

fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 || k > m {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

/// The alternating subset count
/// `M^m_{r_1..r_k} = sum_d (-1)^d C(m,d) prod_i C(m-d, r_i-d)`,
/// which counts tuples of subsets `T_i` of `[m]` with `|T_i| = r_i` and
/// empty intersection. The empty index list is 0 by convention.
pub fn m_classical(m: usize, rs: &[usize]) -> BigInt {
    if rs.is_empty() {
        return BigInt::zero();
    }
    let m = m as i64;
    let dmax = rs.iter().copied().min().unwrap() as i64;
    let mut acc = BigInt::zero();
    for d in 0..=dmax {
        let mut term = binomial(m, d);
        for &r in rs {
            term *= binomial(m - d, r as i64 - d);
        }
        if d % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The q-analogue of [`m_classical`]:
/// `M^m_{r}(q) = sum_d (-1)^d q^(C(d+1,2) - kd) [m d]_q prod_i [m-d r_i-d]_q`.
///
/// A Laurent polynomial in `q`; the empty index list is 0 by convention, and
/// `q -> 1` recovers the classical count.
pub fn m_q<D: Domain>(dom: &D, m: i64, rs: &[i64]) -> D::Elem {
    if rs.is_empty() {
        return dom.zero();
    }
    let k = rs.len() as i64;
    let dmax = rs.iter().copied().min().unwrap().min(m);
    let mut acc = dom.zero();
    for d in 0..=dmax.max(0) {
        let sign = if d % 2 == 0 { 1 } else { -1 };
        let mut term = dom.mul(
            &dom.from_int(sign),
            &dom.mul(&dom.q_pow(choose2(d + 1) - k * d), &qbin(dom, m, d)),
        );
        for &r in rs {
            term = dom.mul(&term, &qbin(dom, m - d, r - d));
        }
        acc = dom.add(&acc, &term);
    }
    acc
}

/// Two-factor coefficient `b_{t,u}(q)`: the coefficient of `B_t(x) B_u(y)`
/// in the factorization generating function divided by the group order.
///
/// Values: `0` when `t + u > n` (in particular at `(n,n)`), `1` at `(n,0)`
/// and `(0,n)`, and otherwise
/// `q^(tu-t-u) [n-t-1]!_q [n-u-1]!_q / ([n-1]!_q [n-t-u]!_q)
///  * (q^n - q^t - q^u + 1)/(q - 1)`.
pub fn b_two<D: Domain>(dom: &D, n: i64, t: i64, u: i64) -> D::Elem {
    assert!(n >= 1 && (0..=n).contains(&t) && (0..=n).contains(&u));
    if t + u > n {
        return dom.zero();
    }
    if t == n || u == n {
        // t + u <= n forces the other index to 0
        return dom.one();
    }
    let num = dom.product([
        dom.q_pow(t * u - t - u),
        qfactorial(dom, n - t - 1),
        qfactorial(dom, n - u - 1),
    ]);
    let den = dom.mul(&qfactorial(dom, n - 1), &qfactorial(dom, n - t - u));
    let head = dom.div(&num, &den).expect("nonzero q-factorials");
    let kernel_num = dom.add(
        &dom.sub(&dom.sub(&dom.q_pow(n), &dom.q_pow(t)), &dom.q_pow(u)),
        &dom.one(),
    );
    let kernel = dom
        .div(&kernel_num, &dom.sub(&dom.q_pow(1), &dom.one()))
        .expect("q - 1 nonzero");
    dom.mul(&head, &kernel)
}

/// k-factor coefficient `b_{p_1..p_k}(q) = M^{n-1}_{p~}(q) / prod [n-1 p]_q`
/// where `p~` drops every entry equal to `n`.
pub fn b_multi<D: Domain>(dom: &D, n: i64, p: &[i64]) -> D::Elem {
    assert!(p.iter().all(|&x| (0..=n).contains(&x)));
    let reduced: Vec<i64> = p.iter().copied().filter(|&x| x < n).collect();
    if reduced.is_empty() {
        return dom.zero();
    }
    let m = m_q(dom, n - 1, &reduced);
    let den = dom.product(reduced.iter().map(|&x| qbin(dom, n - 1, x)));
    dom.div(&m, &den).expect("binomials nonzero in range")
}

/// Genus-0 count `q^(sum (n - r_i - 1) r_i) (q^n - 1)^(k-1)`, defined when
/// the genus is 0 and every entry is below the rank.
pub fn genus0_count<D: Domain>(dom: &D, r: &DimVector) -> Result<D::Elem, CoeffError> {
    let genus = r.genus();
    if genus != 0 {
        return Err(CoeffError::NotGenusZero { genus });
    }
    if r.entries().iter().any(|&x| x == r.rank()) {
        return Err(CoeffError::FullFixedSpaceEntry);
    }
    let n = r.rank() as i64;
    let k = r.arity() as i64;
    let exp: i64 = r
        .entries()
        .iter()
        .map(|&x| (n - x as i64 - 1) * x as i64)
        .sum();
    let base = dom.sub(&dom.q_pow(n), &dom.one());
    Ok(dom.mul(&dom.q_pow(exp), &dom.pow(&base, k - 1)))
}

/// Count of factorizations of a regular elliptic element into `l`
/// reflections (fixed space dimension `n - 1`):
///
/// ```text
/// t_q(n,l) = (-[n]_q)^l / (q^(C(n,2)) (q;q)_n) * ((-1)^(n-1) (q;q)_(n-1)
///   + sum_k (-1)^(k+n) q^(C(k+1,2)) [n-1 k]_q (1 + q^(n-k-1) - q^(n-k))^l)
/// ```
pub fn reflection_count<D: Domain>(dom: &D, n: i64, l: i64) -> D::Elem {
    assert!(n >= 1 && l >= 0);
    let mut inner = {
        let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
        dom.mul(&dom.from_int(sign), &qq_pochhammer(dom, n - 1))
    };
    for k in 0..n {
        let sign = if (k + n) % 2 == 0 { 1 } else { -1 };
        let base = dom.sub(
            &dom.add(&dom.one(), &dom.q_pow(n - k - 1)),
            &dom.q_pow(n - k),
        );
        let term = dom.product([
            dom.from_int(sign),
            dom.q_pow(choose2(k + 1)),
            qbin(dom, n - 1, k),
            dom.pow(&base, l),
        ]);
        inner = dom.add(&inner, &term);
    }
    let lead_num = dom.pow(&dom.neg(&qint(dom, n)), l);
    let lead_den = dom.mul(&dom.q_pow(choose2(n)), &qq_pochhammer(dom, n));
    let lead = dom.div(&lead_num, &lead_den).expect("nonzero");
    dom.mul(&lead, &inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qhyper_terminating, NumericQ, QRational, SymbolicQ};

    const SYM: &SymbolicQ = &SymbolicQ;

    #[test]
    fn m_classical_values() {
        assert_eq!(m_classical(2, &[1, 1]), BigInt::from(2));
        assert_eq!(m_classical(4, &[]), BigInt::zero());
        assert_eq!(m_classical(5, &[0, 0, 0]), BigInt::one());
    }

    #[test]
    fn m_classical_matches_subset_enumeration() {
        // independent oracle: enumerate subset tuples with empty intersection
        fn brute(m: usize, rs: &[usize]) -> BigInt {
            let masks: Vec<u32> = (0..1u32 << m).collect();
            let mut count = 0u64;
            let mut stack = vec![(0usize, u32::MAX)];
            while let Some((i, inter)) = stack.pop() {
                if i == rs.len() {
                    if inter & ((1 << m) - 1) == 0 {
                        count += 1;
                    }
                    continue;
                }
                for &mask in &masks {
                    if mask.count_ones() as usize == rs[i] {
                        stack.push((i + 1, inter & mask));
                    }
                }
            }
            BigInt::from(count)
        }
        for m in 0..=4usize {
            for rs in [
                vec![1, 1],
                vec![2, 1],
                vec![2, 2, 1],
                vec![0, 3],
                vec![m, m],
            ] {
                if rs.iter().any(|&r| r > m) {
                    continue;
                }
                assert_eq!(m_classical(m, &rs), brute(m, &rs), "m={} rs={:?}", m, rs);
            }
        }
    }

    #[test]
    fn m_q_values() {
        assert!(SYM.is_zero(&m_q(SYM, 3, &[])));
        // M^2_{1,1}(q) = (1+q)^2 - q^{-1}(1+q)
        let onepq = &QRational::one() + &QRational::q_pow(1);
        let expected = &(&onepq * &onepq) - &(&QRational::q_pow(-1) * &onepq);
        assert_eq!(m_q(SYM, 2, &[1, 1]), expected);
    }

    #[test]
    fn m_q_is_a_laurent_polynomial() {
        // denominators reduce to a plain power of q
        for m in 0..=5i64 {
            for rs in [vec![1, 1], vec![2, 1], vec![1, 2, 3], vec![m, m, m]] {
                if rs.iter().any(|&r| r > m || r < 0) {
                    continue;
                }
                let v = m_q(SYM, m, &rs);
                assert!(v.is_laurent_poly(), "m={} rs={:?}: {}", m, rs, v);
            }
        }
    }

    #[test]
    fn m_q_limits_to_classical() {
        for m in 0..=5i64 {
            for rs in [vec![1, 1], vec![2, 1, 1], vec![0, 2], vec![m, m]] {
                if rs.iter().any(|&r| r > m || r < 0) {
                    continue;
                }
                let sym = m_q(SYM, m, &rs);
                let limit = sym.limit_q1().expect("finite limit");
                let classical = m_classical(
                    m as usize,
                    &rs.iter().map(|&r| r as usize).collect::<Vec<_>>(),
                );
                assert_eq!(limit, classical.into(), "m={} rs={:?}", m, rs);
            }
        }
    }

    #[test]
    fn b_two_values() {
        // b_{1,1} for n = 2 is (q-1)/q
        let expected = &(&QRational::q_pow(1) - &QRational::one()) / &QRational::q_pow(1);
        assert_eq!(b_two(SYM, 2, 1, 1), expected);
        assert_eq!(b_two(SYM, 5, 5, 0), QRational::one());
        assert_eq!(b_two(SYM, 5, 0, 5), QRational::one());
        assert_eq!(b_two(SYM, 3, 2, 2), QRational::zero());
        assert_eq!(b_two(SYM, 4, 4, 4), QRational::zero());
    }

    #[test]
    fn b_two_matches_hypergeometric_form() {
        // b_{t,u}(q) = 2phi1(q^-t, q^-u; q^(1-n); q^(t+u-n)) for t + u < n
        for n in 1..=8i64 {
            for t in 0..n {
                for u in 0..n - t {
                    let phi = qhyper_terminating(
                        &[QRational::q_pow(-t), QRational::q_pow(-u)],
                        &[QRational::q_pow(1 - n)],
                        &QRational::q_pow(t + u - n),
                    )
                    .unwrap();
                    assert_eq!(b_two(SYM, n, t, u), phi, "n={} t={} u={}", n, t, u);
                }
            }
        }
    }

    #[test]
    fn b_multi_reduces_to_b_two() {
        for n in 1..=6i64 {
            for t in 0..=n {
                for u in 0..=n {
                    assert_eq!(
                        b_multi(SYM, n, &[t, u]),
                        b_two(SYM, n, t, u),
                        "n={} t={} u={}",
                        n,
                        t,
                        u
                    );
                }
            }
        }
    }

    #[test]
    fn b_multi_edge_vectors() {
        assert_eq!(b_multi(SYM, 3, &[3, 3, 3]), QRational::zero());
        assert_eq!(b_multi(SYM, 3, &[3, 3, 0]), QRational::one());
    }

    #[test]
    fn genus0_values() {
        // n=2, r=(1,1): q^2 - 1
        let r = DimVector::new(vec![1, 1], 2);
        let expected = &QRational::q_pow(2) - &QRational::one();
        assert_eq!(genus0_count(SYM, &r).unwrap(), expected);
        let num = NumericQ::new(2);
        assert_eq!(genus0_count(&num, &r).unwrap(), num.from_int(3));
        // n=3, r=(2,2,2): exponent sum (n-r_i-1)r_i vanishes, leaving (q^3-1)^2
        // (cross-checked against the reflection count t_q(3,3))
        let r3 = DimVector::new(vec![2, 2, 2], 3);
        let e3 = (&QRational::q_pow(3) - &QRational::one()).pow(2);
        assert_eq!(genus0_count(SYM, &r3).unwrap(), e3);
        assert_eq!(genus0_count(SYM, &r3).unwrap(), reflection_count(SYM, 3, 3));
        // errors
        assert_eq!(
            genus0_count(SYM, &DimVector::new(vec![1, 0], 2)),
            Err(CoeffError::NotGenusZero { genus: 1 })
        );
        assert_eq!(
            genus0_count(SYM, &DimVector::new(vec![2, 0], 2)),
            Err(CoeffError::FullFixedSpaceEntry)
        );
    }

    #[test]
    fn reflection_count_values() {
        // t_q(2,2) = q^2 - 1 = genus-0 count at (1,1)
        let expected = &QRational::q_pow(2) - &QRational::one();
        assert_eq!(reflection_count(SYM, 2, 2), expected);
        for n in 2..=4i64 {
            assert!(SYM.is_zero(&reflection_count(SYM, n, 1)), "n={}", n);
        }
        // t_2(2,3) = 0
        let num = NumericQ::new(2);
        assert!(num.is_zero(&reflection_count(&num, 2, 3)));
        assert_eq!(reflection_count(&num, 2, 2), num.from_int(3));
    }

    #[test]
    fn genus_bookkeeping() {
        let r = DimVector::new(vec![1, 1], 2);
        assert_eq!(r.genus(), 0);
        assert_eq!(DimVector::new(vec![0, 0], 2).genus(), 2);
        assert_eq!(DimVector::new(vec![2, 2, 2], 3).genus(), 0);
    }
}
