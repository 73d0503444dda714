//! Character generating functions on the fixed-space-dimension class sums.
//!
//! Only two families of normalized character values enter the counting
//! formulas: generic primary characters (any cuspidal other than the trivial
//! one), and the hook-indexed characters over the trivial cuspidal. Each
//! yields a polynomial `f_V(x) = sum_r (char value on z_r) x^r` which is
//! remarkably sparse in the falling basis.

use crate::exact::{basis_falling_to_monomial, choose2, pochhammer, qbin, qfactorial, Domain};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharKind {
    /// Primary over a nontrivial cuspidal: `f_V = |G| B_n(x)`.
    GenericCuspidal,
    /// Trivial cuspidal with hook shape of arm `d`.
    Hook(usize),
}

/// A character generating function divided by the group order, stored by its
/// falling-basis coefficients (index `m` holds the coefficient of `B_m(x)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSeries<D: Domain> {
    n: usize,
    kind: CharKind,
    falling: Vec<D::Elem>,
}

impl<D: Domain> CharSeries<D> {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> CharKind {
        self.kind
    }

    /// Falling-basis coefficients of `f_V / |G|`, length `n + 1`.
    pub fn falling(&self) -> &[D::Elem] {
        &self.falling
    }

    /// Monomial coefficients of `f_V / |G|`, length `n + 1`.
    pub fn monomial(&self, dom: &D) -> Vec<D::Elem> {
        (0..=self.n as i64)
            .map(|r| {
                dom.sum((r..=self.n as i64).map(|m| {
                    dom.mul(
                        &self.falling[m as usize],
                        &basis_falling_to_monomial(dom, m, r),
                    )
                }))
            })
            .collect()
    }
}

/// Normalized character value on the class sum `z_r` (all elements of fixed
/// space dimension `r`).
///
/// Generic cuspidal: `(-1)^(n-r) q^(C(n-r,2)) [n r]_q`. Hook of arm `d`:
/// the same factor times
/// `[n r]_q + (1-q^n)/[r]!_q sum_{j=1}^{n-max(r,d)} q^(jr-d)
///   [n-j]!_q/[n-r-j]!_q (q^(n-d-j+1);q)_(j-1)`.
pub fn char_zr<D: Domain>(dom: &D, n: usize, kind: CharKind, r: usize) -> D::Elem {
    assert!(r <= n);
    let n = n as i64;
    let r = r as i64;
    let sign = if (n - r) % 2 == 0 { 1 } else { -1 };
    let outer = dom.mul(&dom.from_int(sign), &dom.q_pow(choose2(n - r)));
    let inner = match kind {
        CharKind::GenericCuspidal => qbin(dom, n, r),
        CharKind::Hook(d) => {
            let d = d as i64;
            assert!(d < n, "hook arm must be below the rank");
            let mut sum = dom.zero();
            for j in 1..=(n - r.max(d)) {
                let term = dom.product([
                    dom.q_pow(j * r - d),
                    dom.div(&qfactorial(dom, n - j), &qfactorial(dom, n - r - j))
                        .expect("nonzero factorial"),
                    pochhammer(dom, &dom.q_pow(n - d - j + 1), 1, j - 1),
                ]);
                sum = dom.add(&sum, &term);
            }
            let scale = dom
                .div(&dom.sub(&dom.one(), &dom.q_pow(n)), &qfactorial(dom, r))
                .expect("nonzero factorial");
            dom.add(&qbin(dom, n, r), &dom.mul(&scale, &sum))
        }
    };
    dom.mul(&outer, &inner)
}

/// `f_V / |G|` for a generic cuspidal: the single falling term `B_n(x)`.
pub fn f_easy<D: Domain>(dom: &D, n: usize) -> CharSeries<D> {
    let mut falling = vec![dom.zero(); n + 1];
    falling[n] = dom.one();
    CharSeries {
        n,
        kind: CharKind::GenericCuspidal,
        falling,
    }
}

/// `f_V / |G|` for the hook of arm `d`:
/// `B_n(x) + q^-d sum_{m=d}^{n-1} [m]!_q [n-d-1]!_q / ([m-d]!_q [n-1]!_q) B_m(x)`.
pub fn f_hook<D: Domain>(dom: &D, n: usize, d: usize) -> CharSeries<D> {
    assert!(d < n, "hook arm must be below the rank");
    let ni = n as i64;
    let di = d as i64;
    let mut falling = vec![dom.zero(); n + 1];
    falling[n] = dom.one();
    for m in di..ni {
        let num = dom.mul(&qfactorial(dom, m), &qfactorial(dom, ni - di - 1));
        let den = dom.mul(&qfactorial(dom, m - di), &qfactorial(dom, ni - 1));
        let c = dom.mul(
            &dom.q_pow(-di),
            &dom.div(&num, &den).expect("nonzero factorial"),
        );
        falling[m as usize] = c;
    }
    CharSeries {
        n,
        kind: CharKind::Hook(d),
        falling,
    }
}
