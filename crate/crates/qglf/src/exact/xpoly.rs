//! Polynomials in a single marker variable `x` with coefficients in an
//! exact domain, plus the q-difference operator acting on them.

use super::domain::Domain;
use super::qseries::{qint, qq_pochhammer};

/// Dense polynomial in `x`; `coeffs[k]` is the coefficient of `x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPoly<D: Domain> {
    coeffs: Vec<D::Elem>,
}

impl<D: Domain> XPoly<D> {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn constant(dom: &D, c: D::Elem) -> Self {
        XPoly { coeffs: vec![c] }.trimmed(dom)
    }

    pub fn x(dom: &D) -> Self {
        XPoly {
            coeffs: vec![dom.zero(), dom.one()],
        }
    }

    pub fn from_coeffs(dom: &D, coeffs: Vec<D::Elem>) -> Self {
        XPoly { coeffs }.trimmed(dom)
    }

    fn trimmed(mut self, dom: &D) -> Self {
        while self.coeffs.last().is_some_and(|c| dom.is_zero(c)) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, dom: &D, k: usize) -> D::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| dom.zero())
    }

    pub fn coeffs(&self) -> &[D::Elem] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&D::Elem> {
        self.coeffs.last()
    }

    pub fn add(&self, dom: &D, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| dom.add(&self.coeff(dom, k), &other.coeff(dom, k)))
            .collect();
        XPoly { coeffs }.trimmed(dom)
    }

    pub fn sub(&self, dom: &D, other: &Self) -> Self {
        self.add(dom, &other.scale(dom, &dom.from_int(-1)))
    }

    pub fn scale(&self, dom: &D, c: &D::Elem) -> Self {
        if dom.is_zero(c) {
            return XPoly::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|a| dom.mul(a, c)).collect(),
        }
        .trimmed(dom)
    }

    pub fn mul(&self, dom: &D, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![dom.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if dom.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = dom.add(&coeffs[i + j], &dom.mul(a, b));
            }
        }
        XPoly { coeffs }.trimmed(dom)
    }

    pub fn eval(&self, dom: &D, x: &D::Elem) -> D::Elem {
        let mut acc = dom.zero();
        for c in self.coeffs.iter().rev() {
            acc = dom.add(&dom.mul(&acc, x), c);
        }
        acc
    }

    /// Substitute `x -> q^a x` (coefficient of `x^k` picks up `q^(a k)`).
    pub fn scale_argument(&self, dom: &D, a: i64) -> Self {
        XPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| dom.mul(c, &dom.q_pow(a * k as i64)))
                .collect(),
        }
    }

    /// The q-difference `(f(qx) - f(x))/((q - 1)x)`, i.e.
    /// `x^k -> [k]_q x^(k-1)`.
    pub fn qdifference(&self, dom: &D) -> Self {
        if self.coeffs.len() <= 1 {
            return XPoly::zero();
        }
        let coeffs = (1..self.coeffs.len())
            .map(|k| dom.mul(&self.coeffs[k], &qint(dom, k as i64)))
            .collect();
        XPoly { coeffs }.trimmed(dom)
    }

    /// `N` applications of the q-difference operator.
    pub fn qdifference_iter(&self, dom: &D, n: u32) -> Self {
        let mut f = self.clone();
        for _ in 0..n {
            f = f.qdifference(dom);
        }
        f
    }
}

/// `(x; q^step)_m` as a polynomial in `x`.
pub fn pochhammer_marker<D: Domain>(dom: &D, step: i64, m: i64) -> XPoly<D> {
    let mut acc = XPoly::constant(dom, dom.one());
    for i in 0..m {
        // 1 - q^(step i) x
        let factor = XPoly::from_coeffs(dom, vec![dom.one(), dom.neg(&dom.q_pow(step * i))]);
        acc = acc.mul(dom, &factor);
    }
    acc
}

/// The falling-basis polynomial `B_t(x) = (x;q^-1)_t/(q;q)_t`.
///
/// At `x = q^N` with integer `N >= 0` this evaluates to `[N t]_q`.
pub fn falling_basis<D: Domain>(dom: &D, t: i64) -> XPoly<D> {
    let poch = pochhammer_marker(dom, -1, t);
    let inv = dom
        .div(&dom.one(), &qq_pochhammer(dom, t))
        .expect("(q;q)_t nonzero");
    poch.scale(dom, &inv)
}
