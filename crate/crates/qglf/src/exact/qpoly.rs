//! Laurent polynomials in the formal variable `q` with arbitrary-precision
//! integer coefficients.
//!
//! Exponents may be negative (terms like `q^-d` show up throughout the
//! counting formulas); call sites that require an honest polynomial assert
//! `ord() >= 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `q` over the integers.
///
/// Invariant: no stored zero coefficients, so equality is coefficient-wise
/// structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        QPoly { terms }
    }

    /// The monomial `q^e` (negative `e` allowed).
    pub fn q_pow(e: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(e, BigInt::one());
        QPoly { terms }
    }

    /// The monomial `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        QPoly { terms }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = QPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Largest exponent with nonzero coefficient. Zero polynomial: `None`.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent with nonzero coefficient. Zero polynomial: `None`.
    pub fn ord(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.degree()
            .map(|d| self.coeff(d))
            .unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// True if this is `c * q^e` for a single term (or zero).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() <= 1
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        // Dense schoolbook over the exponent span; spans here are modest.
        let (alo, ahi) = (self.ord().unwrap(), self.degree().unwrap());
        let (blo, bhi) = (other.ord().unwrap(), other.degree().unwrap());
        let span = (ahi - alo + bhi - blo + 1) as usize;
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); span];
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &other.terms {
                let idx = (ea - alo + eb - blo) as usize;
                acc[idx] += ca * cb;
            }
        }
        let base = alo + blo;
        QPoly {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (base + i as i64, c))
                .collect(),
        }
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> QPoly {
        QPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k + e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            terms: self.terms.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> QPoly {
        let mut out = QPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// GCD of the coefficients (nonnegative; zero polynomial gives 0).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content. Zero stays zero.
    pub fn primitive_part(&self) -> QPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        QPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c / &g)).collect(),
        }
    }

    /// Exact division; `None` if `other` does not divide `self` (or is zero).
    pub fn exact_div(&self, other: &QPoly) -> Option<QPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        // Normalize q-powers away: q is a unit in the Laurent ring.
        let a_ord = self.ord().unwrap();
        let b_ord = other.ord().unwrap();
        let mut rem = self.shift(-a_ord);
        let den = other.shift(-b_ord);
        let den_deg = den.degree().unwrap();
        let den_lc = den.leading_coeff();
        let mut quot = QPoly::zero();
        while !rem.is_zero() {
            let rd = rem.degree().unwrap();
            if rd < den_deg {
                return None;
            }
            let rc = rem.leading_coeff();
            let (qc, r) = rc.div_rem(&den_lc);
            if !r.is_zero() {
                return None;
            }
            let qmono = QPoly::monomial(qc, rd - den_deg);
            rem = rem.sub(&qmono.mul(&den));
            quot = quot.add(&qmono);
        }
        Some(quot.shift(a_ord - b_ord))
    }

    /// GCD as a primitive polynomial with positive leading coefficient and
    /// `ord() == 0` (common `q`-powers are units and are stripped).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.normalized_gcd_rep();
        }
        if other.is_zero() {
            return self.normalized_gcd_rep();
        }
        let ca = self.content();
        let cb = other.content();
        let cg = ca.gcd(&cb);
        let a = self.shift(-self.ord().unwrap()).primitive_part();
        let b = other.shift(-other.ord().unwrap()).primitive_part();
        let pp = primitive_prs(a, b);
        pp.scale(&cg)
    }

    fn normalized_gcd_rep(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut p = self.shift(-self.ord().unwrap());
        if p.leading_coeff().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Evaluate at a rational value of `q` (nonzero required if `ord() < 0`).
    pub fn eval(&self, q: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let ord = self.ord().unwrap();
        // Horner over the shifted (ordinary) polynomial, then scale by q^ord.
        let deg = self.degree().unwrap();
        let mut acc = BigRational::zero();
        let mut e = deg;
        loop {
            acc = acc * q + BigRational::from(self.coeff(e));
            if e == ord {
                break;
            }
            e -= 1;
        }
        if ord != 0 {
            acc *= q_rational_pow(q, ord);
        }
        acc
    }

    /// Value at `q = 1` (sum of coefficients).
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

/// `q^e` for rational `q`, with `e` possibly negative.
pub fn q_rational_pow(q: &BigRational, e: i64) -> BigRational {
    q.pow(i32::try_from(e).expect("exponent fits i32"))
}

/// Primitive polynomial remainder sequence on primitive inputs with
/// nonnegative exponents. Returns the primitive gcd with positive leading
/// coefficient.
fn primitive_prs(mut a: QPoly, mut b: QPoly) -> QPoly {
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_zero() {
            QPoly::zero()
        } else {
            r.shift(-r.ord().unwrap()).primitive_part()
        };
    }
    let mut g = a;
    if g.leading_coeff().is_negative() {
        g = g.neg();
    }
    g
}

/// Pseudo-remainder of `a` by `b` (nonneg exponents, `b` nonzero).
fn pseudo_rem(a: &QPoly, b: &QPoly) -> QPoly {
    let db = b.degree().unwrap();
    let lb = b.leading_coeff();
    let mut rem = a.clone();
    loop {
        let Some(dr) = rem.degree() else {
            return rem;
        };
        if dr < db {
            return rem;
        }
        let lr = rem.leading_coeff();
        rem = rem.scale(&lb).sub(&b.mul(&QPoly::monomial(lr, dr - db)));
    }
}

impl fmt::Display for QPoly {
    /// Canonical text form: terms in descending exponent, `q^k` notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.sign() == Sign::Minus;
            let mag = c.magnitude();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() || e == 0 {
                write!(f, "{}", mag)?;
            }
            if e == 1 {
                write!(f, "q")?;
            } else if e != 0 {
                write!(f, "q^{}", e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> QPoly {
        QPoly::from_pairs(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(0, 1), (1, 1)]); // 1 + q
        let b = p(&[(0, -1), (1, 1)]); // q - 1
        assert_eq!(a.mul(&b), p(&[(2, 1), (0, -1)])); // q^2 - 1
        assert_eq!(a.add(&b), p(&[(1, 2)]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn laurent_support() {
        let a = QPoly::q_pow(-2).add(&QPoly::one());
        assert_eq!(a.ord(), Some(-2));
        assert_eq!(a.mul(&QPoly::q_pow(2)), p(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[(2, 1), (0, -1)]); // q^2 - 1
        let b = p(&[(1, 1), (0, 1)]); // q + 1
        assert_eq!(a.exact_div(&b), Some(p(&[(1, 1), (0, -1)])));
        let c = p(&[(1, 1), (0, 1)]);
        assert_eq!(p(&[(2, 1), (0, 1)]).exact_div(&c), None);
    }

    #[test]
    fn gcd_strips_units() {
        // gcd(q^3 - q, q^2 + q) = q + 1 up to units and content.
        let a = p(&[(3, 1), (1, -1)]);
        let b = p(&[(2, 2), (1, 2)]);
        assert_eq!(a.gcd(&b), p(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn display_descending() {
        let a = p(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]);
        assert_eq!(a.to_string(), "q^4 + q^3 + 2q^2 + q + 1");
        assert_eq!(p(&[(0, -1), (1, 1)]).to_string(), "q - 1");
        assert_eq!(p(&[(-1, 1), (0, -3)]).to_string(), "-3 + q^-1");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn eval_laurent() {
        let a = p(&[(-1, 1), (1, 1)]); // q^-1 + q
        let two = BigRational::from(BigInt::from(2));
        assert_eq!(
            a.eval(&two),
            BigRational::new(BigInt::from(5), BigInt::from(2))
        );
        assert_eq!(a.eval_one(), BigInt::from(2));
    }
}
