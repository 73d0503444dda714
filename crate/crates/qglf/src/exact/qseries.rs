//! q-calculus primitives: Gaussian binomials, q-Pochhammer symbols, the
//! falling basis `B_t(x) = (x;q^-1)_t/(q;q)_t` and its change-of-basis
//! coefficients, and terminating basic hypergeometric series.
//!
//! Notation used below: `[m]_q = 1 + q + ... + q^(m-1)`, `[m]!_q` the
//! q-factorial, `(a;q)_m = (1-a)(1-aq)...(1-aq^(m-1))` the q-Pochhammer
//! symbol, and `C(a,2) = a(a-1)/2`.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::domain::Domain;
use super::qpoly::QPoly;
use super::qrational::QRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("multinomial parts sum to {got}, expected {expected}")]
    PartsSum { expected: i64, got: i64 },
    #[error("hypergeometric series does not terminate: no numerator parameter of the form q^-t")]
    NonTerminating,
    #[error("zero denominator parameter before series termination")]
    ZeroDenominator,
}

/// `C(a, 2) = a(a-1)/2`, defined for all integers.
pub fn choose2(a: i64) -> i64 {
    a * (a - 1) / 2
}

// ---------------------------------------------------------------------------
// Integer-polynomial level (proves polynomiality via exact division)
// ---------------------------------------------------------------------------

/// `[m]_q` as a polynomial.
pub fn qint_poly(m: u32) -> QPoly {
    QPoly::from_pairs((0..m as i64).map(|e| (e, BigInt::one())))
}

/// `[m]!_q` as a polynomial.
pub fn qfactorial_poly(m: u32) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=m {
        acc = acc.mul(&qint_poly(i));
    }
    acc
}

/// Gaussian binomial `[n k]_q`; zero when `k < 0` or `k > n`.
///
/// Computed by iterated exact division, so the result is always an honest
/// polynomial with nonnegative integer coefficients.
pub fn qbinomial(n: u32, k: i64) -> QPoly {
    if k < 0 || k > n as i64 {
        return QPoly::zero();
    }
    let k = k as u32;
    let k = k.min(n - k);
    let mut acc = QPoly::one();
    for i in 1..=k {
        // [n-k+i choose i] = [n-k+i-1 choose i-1] * (1 - q^(n-k+i))/(1 - q^i)
        let num = QPoly::one().sub(&QPoly::q_pow((n - k + i) as i64));
        let den = QPoly::one().sub(&QPoly::q_pow(i as i64));
        acc = acc
            .mul(&num)
            .exact_div(&den)
            .expect("q-binomial step divides");
    }
    acc
}

/// q-multinomial `[n]!_q / prod [p_i]!_q` for parts summing to `n`.
pub fn qmultinomial(n: u32, parts: &[u32]) -> Result<QPoly, ExactError> {
    let total: i64 = parts.iter().map(|&p| p as i64).sum();
    if total != n as i64 {
        return Err(ExactError::PartsSum {
            expected: n as i64,
            got: total,
        });
    }
    let mut acc = QPoly::one();
    let mut partial = 0u32;
    for &p in parts {
        partial += p;
        acc = acc.mul(&qbinomial(partial, p as i64));
    }
    Ok(acc)
}

/// `(q;q)_m` as a polynomial.
pub fn qq_pochhammer_poly(m: u32) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=m as i64 {
        acc = acc.mul(&QPoly::one().sub(&QPoly::q_pow(i)));
    }
    acc
}

/// `|GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)` as a polynomial.
pub fn gl_order_poly(n: u32) -> QPoly {
    let mut acc = QPoly::one();
    for i in 0..n as i64 {
        acc = acc.mul(&QPoly::q_pow(n as i64).sub(&QPoly::q_pow(i)));
    }
    acc
}

// ---------------------------------------------------------------------------
// Domain level (shared by symbolic and numeric computation)
// ---------------------------------------------------------------------------

pub fn qint<D: Domain>(dom: &D, m: i64) -> D::Elem {
    dom.sum((0..m).map(|e| dom.q_pow(e)))
}

pub fn qfactorial<D: Domain>(dom: &D, m: i64) -> D::Elem {
    dom.product((1..=m).map(|i| qint(dom, i)))
}

pub fn qbin<D: Domain>(dom: &D, n: i64, k: i64) -> D::Elem {
    if k < 0 || k > n {
        return dom.zero();
    }
    let num = qfactorial(dom, n);
    let den = dom.mul(&qfactorial(dom, k), &qfactorial(dom, n - k));
    dom.div(&num, &den).expect("q-factorials are nonzero")
}

/// `(a; q^step)_m = prod_{i=0}^{m-1} (1 - a q^(step*i))`.
pub fn pochhammer<D: Domain>(dom: &D, a: &D::Elem, step: i64, m: i64) -> D::Elem {
    let mut acc = dom.one();
    for i in 0..m {
        let factor = dom.sub(&dom.one(), &dom.mul(a, &dom.q_pow(step * i)));
        acc = dom.mul(&acc, &factor);
    }
    acc
}

/// `(q;q)_m` in the domain.
pub fn qq_pochhammer<D: Domain>(dom: &D, m: i64) -> D::Elem {
    pochhammer(dom, &dom.q_pow(1), 1, m)
}

/// `|GL_n(F_q)|` in the domain.
pub fn gl_order<D: Domain>(dom: &D, n: i64) -> D::Elem {
    dom.product((0..n).map(|i| dom.sub(&dom.q_pow(n), &dom.q_pow(i))))
}

// ---------------------------------------------------------------------------
// Basis change between monomials x^k and the falling basis B_m(x)
// ---------------------------------------------------------------------------

/// Coefficient of `x^r` in `B_m(x)`:
/// `(-1)^r q^(C(m-r,2)) [m r]_q / ((q;q)_m q^(C(m,2)))`.
pub fn basis_falling_to_monomial<D: Domain>(dom: &D, m: i64, r: i64) -> D::Elem {
    if r < 0 || r > m {
        return dom.zero();
    }
    let sign = if r % 2 == 0 { 1 } else { -1 };
    let num = dom.mul(
        &dom.from_int(sign),
        &dom.mul(&dom.q_pow(choose2(m - r)), &qbin(dom, m, r)),
    );
    let den = dom.mul(&qq_pochhammer(dom, m), &dom.q_pow(choose2(m)));
    dom.div(&num, &den).expect("nonzero denominator")
}

/// Coefficient of `B_m(x)` in `x^k`:
/// `(-1)^m q^(C(m,2)) (q^k; q^-1)_m`.
pub fn basis_monomial_to_falling<D: Domain>(dom: &D, k: i64, m: i64) -> D::Elem {
    if m < 0 || m > k {
        return dom.zero();
    }
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let poch = pochhammer(dom, &dom.q_pow(k), -1, m);
    dom.mul(&dom.mul(&dom.from_int(sign), &dom.q_pow(choose2(m))), &poch)
}

// ---------------------------------------------------------------------------
// Terminating basic hypergeometric series
// ---------------------------------------------------------------------------

/// Smallest `t >= 0` with `a = q^-t`, if the parameter has that shape.
fn termination_index(a: &QRational) -> Option<i64> {
    let p = a.as_laurent_poly()?;
    if p.is_monomial() && p.leading_coeff() == BigInt::one() {
        let e = p.degree().unwrap_or(0);
        if e <= 0 {
            return Some(-e);
        }
    }
    None
}

/// The terminating series `_r phi_s (a_1..a_r; b_1..b_s; q, z)`:
///
/// `sum_d  (a_1;q)_d ... (a_r;q)_d / ((q;q)_d (b_1;q)_d ... (b_s;q)_d)
///         * ((-1)^d q^(C(d,2)))^(1+s-r) * z^d`.
///
/// Some numerator parameter must be `q^-t` with `t >= 0` so the sum is
/// finite; the sum then runs over `0 <= d <= t`.
pub fn qhyper_terminating(
    numer: &[QRational],
    denom: &[QRational],
    z: &QRational,
) -> Result<QRational, ExactError> {
    let dom = &super::domain::SymbolicQ;
    let t = numer
        .iter()
        .filter_map(termination_index)
        .min()
        .ok_or(ExactError::NonTerminating)?;
    let variant = 1 + denom.len() as i64 - numer.len() as i64;
    let mut acc = QRational::zero();
    for d in 0..=t {
        let mut term = QRational::one();
        for a in numer {
            term = &term * &pochhammer(dom, a, 1, d);
        }
        let mut den = qq_pochhammer(dom, d);
        for b in denom {
            den = &den * &pochhammer(dom, b, 1, d);
        }
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        term = &term / &den;
        if variant != 0 {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            let unit = &QRational::from_int(sign) * &QRational::q_pow(choose2(d));
            term = &term * &unit.pow(variant);
        }
        term = &term * &z.pow(d);
        acc = &acc + &term;
    }
    Ok(acc)
}
