//! Fixed-genus counts of two-factor factorizations and their growth rate
//! as the rank goes to infinity.
//!
//! For genus `g >= 1` the count `a_{r,s}(q)` with `r + s = n - g` and
//! `r, s > 0` is a fixed Laurent polynomial `P_g` evaluated at
//! `(q^n, q^r, q^s)` times an explicit prefactor; the boundary cells
//! `a_{0,n-g}` and `a_{n-g,0}` are recovered by coefficient extraction from
//! the two-factor generating function instead.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::closed::{b_two, genus0_count, CoeffError, DimVector};
use crate::exact::{
    basis_falling_to_monomial, choose2, gl_order, qfactorial, qmultinomial, Domain, MultiLaurent,
    NumericQ, QRational,
};

/// The genus polynomial `P_g(x, y, z, q)` for `g >= 1`.
///
/// `P_g = (-1)^g q^-g (y^-g z^g prod_{i=1}^g (y q^i - 1)
///                     + y^g z^-g prod_{i=1}^g (z q^i - 1))
///      + sum_{0 <= t,u <= g-1, t+u <= g} (-1)^(t+u) [g; t,u,g-t-u]_q
///        y^(u-t) z^(t-u) q^(tu-t-u) (x - y q^t - z q^u + 1)
///        prod_{i=1}^{g-t-1} (z q^i - 1) prod_{i=1}^{g-u-1} (y q^i - 1)`.
pub fn p_g_polynomial(g: i64) -> Result<MultiLaurent, CoeffError> {
    if g < 1 {
        return Err(CoeffError::PositiveGenusRequired);
    }
    // prod_{i=1}^{m} (v q^i - 1) in the chosen variable slot
    let var_poch = |slot: usize, m: i64| -> MultiLaurent {
        let mut acc = MultiLaurent::monomial(QRational::one(), (0, 0, 0));
        for i in 1..=m {
            let mut f = MultiLaurent::monomial(-QRational::one(), (0, 0, 0));
            let e = match slot {
                1 => (0, 1, 0),
                2 => (0, 0, 1),
                _ => unreachable!(),
            };
            f.add_term(e, QRational::q_pow(i));
            acc = acc.mul(&f);
        }
        acc
    };

    let sign_g = QRational::from_int(if g % 2 == 0 { 1 } else { -1 });
    let head_scale = &sign_g * &QRational::q_pow(-g);
    let head = {
        let a = MultiLaurent::monomial(QRational::one(), (0, -g, g)).mul(&var_poch(1, g));
        let b = MultiLaurent::monomial(QRational::one(), (0, g, -g)).mul(&var_poch(2, g));
        a.add(&b).scale(&head_scale)
    };

    let mut sum = MultiLaurent::zero();
    for t in 0..g {
        for u in 0..=(g - t).min(g - 1) {
            let sign = QRational::from_int(if (t + u) % 2 == 0 { 1 } else { -1 });
            let tri = QRational::from_poly(
                qmultinomial(g as u32, &[t as u32, u as u32, (g - t - u) as u32])
                    .expect("parts sum to g"),
            );
            let scale = &(&sign * &tri) * &QRational::q_pow(t * u - t - u);
            // x - y q^t - z q^u + 1
            let mut kernel = MultiLaurent::monomial(QRational::one(), (1, 0, 0));
            kernel.add_term((0, 1, 0), -QRational::q_pow(t));
            kernel.add_term((0, 0, 1), -QRational::q_pow(u));
            kernel.add_term((0, 0, 0), QRational::one());
            let term = MultiLaurent::monomial(QRational::one(), (0, u - t, t - u))
                .mul(&kernel)
                .mul(&var_poch(2, g - t - 1))
                .mul(&var_poch(1, g - u - 1))
                .scale(&scale);
            sum = sum.add(&term);
        }
    }
    Ok(head.add(&sum))
}

/// Explicit value of `a_{r,s}(q)` when `g = n - r - s > 0` and `r, s > 0`:
///
/// ```text
/// q^(2rs + (g-1)n - C(g,2)) (q^n - 1) / ((q-1)^g [g]!_q) * P_g(q^n, q^r, q^s, q)
/// ```
pub fn a_two_explicit<D: Domain>(dom: &D, n: i64, r: i64, s: i64) -> Result<D::Elem, CoeffError> {
    let g = n - r - s;
    if g <= 0 || r <= 0 || s <= 0 {
        return Err(CoeffError::ExplicitFormulaRange { g, r, s });
    }
    let pg = p_g_polynomial(g)?;
    Ok(a_two_explicit_with(dom, &pg, n, r, s))
}

/// As [`a_two_explicit`] with a precomputed `P_g` (callers looping over `n`
/// build the polynomial once).
pub fn a_two_explicit_with<D: Domain>(
    dom: &D,
    pg: &MultiLaurent,
    n: i64,
    r: i64,
    s: i64,
) -> D::Elem {
    let g = n - r - s;
    debug_assert!(g > 0 && r > 0 && s > 0);
    let pval = pg.eval(dom, &dom.q_pow(n), &dom.q_pow(r), &dom.q_pow(s));
    let num = dom.mul(
        &dom.q_pow(2 * r * s + (g - 1) * n - choose2(g)),
        &dom.sub(&dom.q_pow(n), &dom.one()),
    );
    let den = dom.mul(
        &dom.pow(&dom.sub(&dom.q_pow(1), &dom.one()), g),
        &qfactorial(dom, g),
    );
    let pref = dom.div(&num, &den).expect("nonzero");
    dom.mul(&pref, &pval)
}

/// `a_{r,s}(q)` by direct coefficient extraction from the two-factor
/// generating function:
/// `|G| sum_{t >= r, u >= s, t+u <= n} b_{t,u} [x^r]B_t [y^s]B_u`.
pub fn a_rs_extraction<D: Domain>(dom: &D, n: i64, r: i64, s: i64) -> D::Elem {
    let mut acc = dom.zero();
    for t in r..=n {
        let ct = basis_falling_to_monomial(dom, t, r);
        if dom.is_zero(&ct) {
            continue;
        }
        for u in s..=(n - t) {
            let b = b_two(dom, n, t, u);
            if dom.is_zero(&b) {
                continue;
            }
            let cu = basis_falling_to_monomial(dom, u, s);
            acc = dom.add(&acc, &dom.mul(&dom.mul(&b, &ct), &cu));
        }
    }
    dom.mul(&acc, &gl_order(dom, n))
}

/// One row of a growth-rate sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRatio {
    pub g: i64,
    pub q: u64,
    pub n: i64,
    /// `N_g(n)`: total genus-`g` two-factor factorization count.
    pub count: BigInt,
    /// `N_g(n)^2 |GL_g(F_q)|^2 / q^((n+g)^2)`, exactly.
    pub ratio_squared: BigRational,
    /// `N_g(n) |GL_g(F_q)| / q^((n+g)^2 / 2)` to 30 significant digits.
    pub decimal: String,
}

/// Total number `N_g(n)` of genus-`g` factorizations into two factors,
/// summing the explicit interior formula and the extracted boundary cells.
pub fn genus_total(dom: &NumericQ, pg: Option<&MultiLaurent>, g: i64, n: i64) -> BigInt {
    assert!(n > g, "need n > g");
    let m = n - g;
    let mut acc = dom.zero();
    // boundary cells r = 0 and r = m by extraction
    acc = dom.add(&acc, &a_rs_extraction(dom, n, 0, m));
    if m > 0 {
        acc = dom.add(&acc, &a_rs_extraction(dom, n, m, 0));
    }
    for r in 1..m {
        let s = m - r;
        let cell = if g == 0 {
            genus0_count(
                dom,
                &DimVector::new(vec![r as usize, s as usize], n as usize),
            )
            .expect("interior genus-0 cell")
        } else {
            a_two_explicit_with(dom, pg.expect("P_g supplied for g >= 1"), n, r, s)
        };
        acc = dom.add(&acc, &cell);
    }
    assert!(acc.denom().is_one(), "count must be an integer");
    acc.numer().clone()
}

/// Growth ratio of `N_g(n)` against `q^((n+g)^2/2) / |GL_g(F_q)|`.
///
/// The exponent `(n+g)^2/2` may be half-integral, so the exact report is the
/// squared ratio; the plain ratio is reported as a 30-digit decimal.
pub fn growth_ratio(g: i64, q: u64, n: i64) -> Result<GrowthRatio, CoeffError> {
    assert!(g >= 0 && n > g);
    let dom = NumericQ::new(q);
    let pg = if g >= 1 {
        Some(p_g_polynomial(g)?)
    } else {
        None
    };
    let count = genus_total(&dom, pg.as_ref(), g, n);
    Ok(ratio_from_count(&dom, g, q, n, count))
}

fn ratio_from_count(dom: &NumericQ, g: i64, q: u64, n: i64, count: BigInt) -> GrowthRatio {
    let gl_g = gl_order(dom, g);
    let scaled = BigRational::from(count.clone()) * gl_g;
    let denom_pow = dom.q_pow((n + g) * (n + g));
    let ratio_squared = &scaled * &scaled / denom_pow;
    let decimal = sqrt_decimal(&ratio_squared, 30);
    GrowthRatio {
        g,
        q,
        n,
        count,
        ratio_squared,
        decimal,
    }
}

/// Growth ratios for every `n` in `[lo, hi]`, sharing one `P_g`.
pub fn growth_ratio_sweep(
    g: i64,
    q: u64,
    lo: i64,
    hi: i64,
) -> Result<Vec<GrowthRatio>, CoeffError> {
    assert!(lo > g);
    let dom = NumericQ::new(q);
    let pg = if g >= 1 {
        Some(p_g_polynomial(g)?)
    } else {
        None
    };
    Ok((lo..=hi)
        .map(|n| {
            let count = genus_total(&dom, pg.as_ref(), g, n);
            ratio_from_count(&dom, g, q, n, count)
        })
        .collect())
}

/// Decimal expansion of `sqrt(x)` for positive rational `x`, with the given
/// number of significant digits.
pub fn sqrt_decimal(x: &BigRational, digits: usize) -> String {
    assert!(x.is_positive(), "square root of a positive number only");
    let p = digits as i64 + 12;
    let ten = BigInt::from(10);
    let scaled = x.numer() * ten.pow(2 * p as u32) / x.denom();
    let root = scaled.sqrt(); // floor(sqrt(x) * 10^p)
    let s = root.to_string();
    let int_len = s.len() as i64 - p;
    let digits_only: String = if int_len > 0 {
        s.clone()
    } else {
        format!("{}{}", "0".repeat((-int_len) as usize + 1), s)
    };
    // place the decimal point and trim to significant digits
    let point = int_len.max(1) as usize;
    let (head, tail) = digits_only.split_at(point);
    let mut sig = 0usize;
    let mut out = String::new();
    for c in head.chars() {
        out.push(c);
        if c != '0' || sig > 0 {
            sig += 1;
        }
    }
    out.push('.');
    for c in tail.chars() {
        if sig >= digits {
            break;
        }
        out.push(c);
        if c != '0' || sig > 0 {
            sig += 1;
        }
    }
    out
}
