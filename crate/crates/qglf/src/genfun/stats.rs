//! Distribution of fixed space dimension over the whole group, and the
//! expected genus of a uniformly random two-factor factorization.

use crate::exact::{basis_falling_to_monomial, choose2, gl_order, Domain};

/// Census of `GL_n(F_q)` by fixed space dimension: entry `r` counts elements
/// whose fixed space has dimension `r`.
///
/// Obtained by expanding `F(x, 1) = |G| sum_{t=0}^n B_t(x)` in monomials.
pub fn fulman_series<D: Domain>(dom: &D, n: usize) -> Vec<D::Elem> {
    let order = gl_order(dom, n as i64);
    (0..=n as i64)
        .map(|r| {
            let coeff = dom.sum((r..=n as i64).map(|t| basis_falling_to_monomial(dom, t, r)));
            dom.mul(&order, &coeff)
        })
        .collect()
}

/// Expected genus of a uniformly random factorization `c = u v`:
/// `n - 2 sum_{t=1}^n (-1)^t / (q^(C(t,2)) (1 - q^t))`.
pub fn expected_genus<D: Domain>(dom: &D, n: usize) -> D::Elem {
    let sum = dom.sum((1..=n as i64).map(|t| {
        let sign = dom.from_int(if t % 2 == 0 { 1 } else { -1 });
        let den = dom.mul(&dom.q_pow(choose2(t)), &dom.sub(&dom.one(), &dom.q_pow(t)));
        dom.div(&sign, &den).expect("nonzero denominator")
    }));
    dom.sub(&dom.from_int(n as i64), &dom.mul(&dom.from_int(2), &sum))
}
