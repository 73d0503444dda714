//! Assembly of the factorization generating function from character values,
//! and extraction of full count tables.
//!
//! `F(x_1..x_k)/|G|^(k-1)` expands in the falling basis as
//! `-(q;q)_(n-1) prod_i B_n(x_i)
//!  + sum_{d=0}^{n-1} (-1)^d q^(C(d+1,2)) [n-1 d]_q prod_i h_d(x_i)`
//! where `h_d = f_hook(n,d)/|G|`; the falling coefficient at `(p_1..p_k)`
//! equals the closed-form coefficient `b_{p_1..p_k}(q)`.

use super::charseries::f_hook;
use crate::coeffs::b_multi;
use crate::exact::{choose2, gl_order, qbin, qq_pochhammer, Basis, Domain, XSeries};
use crate::table::CountTable;

/// Which pipeline produces a count table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TablePath {
    /// Closed-form coefficients placed directly in the falling basis.
    ClosedForm,
    /// Character-sum assembly of the generating function.
    CharSum,
}

/// The normalized generating function `F/|G|^(k-1)` in the falling basis.
pub fn assemble_f<D: Domain>(dom: &D, n: usize, k: usize) -> XSeries<D> {
    assert!(n >= 1 && k >= 1);
    let mut series = XSeries::zero(k, n, Basis::Falling);
    // -(q;q)_(n-1) on the all-n cell
    let mut top = vec![dom.zero(); n + 1];
    top[n] = dom.one();
    series.add_scaled_product(
        dom,
        &dom.neg(&qq_pochhammer(dom, n as i64 - 1)),
        &vec![top; k],
    );
    for d in 0..n {
        let sign = if d % 2 == 0 { 1 } else { -1 };
        let scale = dom.product([
            dom.from_int(sign),
            dom.q_pow(choose2(d as i64 + 1)),
            qbin(dom, n as i64 - 1, d as i64),
        ]);
        let h = f_hook(dom, n, d).falling().to_vec();
        series.add_scaled_product(dom, &scale, &vec![h; k]);
    }
    series
}

/// The closed-form coefficients laid out in the falling basis: coefficient
/// `b_{p_1..p_k}(q)` at every index vector.
pub fn closed_form_series<D: Domain>(dom: &D, n: usize, k: usize) -> XSeries<D> {
    assert!(n >= 1 && k >= 1);
    let mut series = XSeries::zero(k, n, Basis::Falling);
    let mut idx = vec![0usize; k];
    loop {
        let p: Vec<i64> = idx.iter().map(|&x| x as i64).collect();
        series.add_term(dom, idx.clone(), b_multi(dom, n as i64, &p));
        // odometer over [0, n]^k
        let mut axis = 0;
        loop {
            if axis == k {
                return series;
            }
            idx[axis] += 1;
            if idx[axis] <= n {
                break;
            }
            idx[axis] = 0;
            axis += 1;
        }
    }
}

/// Full count table `(r_1..r_k) -> a_{r_1..r_k}(q)`: convert the chosen
/// falling-basis series to monomial coefficients and scale by `|G|^(k-1)`.
pub fn a_table<D: Domain>(dom: &D, n: usize, k: usize, path: TablePath) -> CountTable<D::Elem> {
    let falling = match path {
        TablePath::ClosedForm => closed_form_series(dom, n, k),
        TablePath::CharSum => assemble_f(dom, n, k),
    };
    let monomial = falling.to_monomial(dom);
    let scale = dom.pow(&gl_order(dom, n as i64), k as i64 - 1);
    let mut table = CountTable::new(k, n);
    for (idx, c) in monomial.iter() {
        let v = dom.mul(c, &scale);
        if !dom.is_zero(&v) {
            table.insert(idx.clone(), v);
        }
    }
    table
}
