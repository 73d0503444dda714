//! The exact coefficient domains every counting formula is generic over.
//!
//! Two modes share one code path: [`SymbolicQ`] computes in the field of
//! rational functions of the formal variable `q`, and [`NumericQ`] computes
//! in arbitrary-precision rationals with `q` fixed to a concrete integer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::{q_rational_pow, QPoly};
use super::qrational::QRational;

/// An exact field containing a distinguished invertible element `q`.
///
/// All values are immutable and operations are pure, so elements may be
/// shared freely across threads.
// from_* constructors take &self: the domain is the conversion context.
#[allow(clippy::wrong_self_convention)]
pub trait Domain: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Eq + std::fmt::Debug + std::fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// `q^e`; negative exponents allowed.
    fn q_pow(&self, e: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Exact division; `None` when `b` is zero.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Image of an integer Laurent polynomial in `q`.
    fn from_qpoly(&self, p: &QPoly) -> Self::Elem {
        let mut acc = self.zero();
        for (&e, c) in p.iter() {
            let c = self.mul(&elem_from_bigint(self, c), &self.q_pow(e));
            acc = self.add(&acc, &c);
        }
        acc
    }

    /// Image of a symbolic rational function; `None` if the denominator
    /// vanishes in this domain.
    fn from_qrational(&self, r: &QRational) -> Option<Self::Elem> {
        let num = self.from_qpoly(r.numerator());
        let den = self.from_qpoly(r.denominator());
        self.div(&num, &den)
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        if e == 0 {
            return self.one();
        }
        let base = if e < 0 {
            self.div(&self.one(), a).expect("invertible base")
        } else {
            a.clone()
        };
        let mut n = e.unsigned_abs();
        let mut acc = self.one();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            n >>= 1;
            if n > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    fn sum(&self, it: impl IntoIterator<Item = Self::Elem>) -> Self::Elem {
        let mut acc = self.zero();
        for x in it {
            acc = self.add(&acc, &x);
        }
        acc
    }

    fn product(&self, it: impl IntoIterator<Item = Self::Elem>) -> Self::Elem {
        let mut acc = self.one();
        for x in it {
            acc = self.mul(&acc, &x);
        }
        acc
    }
}

fn elem_from_bigint<D: Domain + ?Sized>(dom: &D, c: &BigInt) -> D::Elem {
    // i64 covers every coefficient literal we feed this with; larger
    // coefficients arrive via repeated arithmetic instead.
    match i64::try_from(c) {
        Ok(n) => dom.from_int(n),
        Err(_) => {
            // Fall back to digit assembly for oversized coefficients.
            let mut acc = dom.zero();
            let base = dom.from_int(1i64 << 32);
            let mut mag = c.magnitude().clone();
            let mut shift = dom.one();
            use num_traits::ToPrimitive;
            while !mag.is_zero() {
                let low = (&mag & num_bigint::BigUint::from(u32::MAX))
                    .to_u32()
                    .unwrap();
                acc = dom.add(&acc, &dom.mul(&dom.from_int(low as i64), &shift));
                shift = dom.mul(&shift, &base);
                mag >>= 32;
            }
            if c.is_negative() {
                acc = dom.neg(&acc);
            }
            acc
        }
    }
}

/// Rational functions in the formal variable `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SymbolicQ;

impl Domain for SymbolicQ {
    type Elem = QRational;

    fn zero(&self) -> QRational {
        QRational::zero()
    }
    fn one(&self) -> QRational {
        QRational::one()
    }
    fn from_int(&self, n: i64) -> QRational {
        QRational::from_int(n)
    }
    fn q_pow(&self, e: i64) -> QRational {
        QRational::q_pow(e)
    }
    fn add(&self, a: &QRational, b: &QRational) -> QRational {
        a + b
    }
    fn sub(&self, a: &QRational, b: &QRational) -> QRational {
        a - b
    }
    fn mul(&self, a: &QRational, b: &QRational) -> QRational {
        a * b
    }
    fn neg(&self, a: &QRational) -> QRational {
        -a
    }
    fn div(&self, a: &QRational, b: &QRational) -> Option<QRational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn is_zero(&self, a: &QRational) -> bool {
        a.is_zero()
    }
    fn from_qpoly(&self, p: &QPoly) -> QRational {
        QRational::from_poly(p.clone())
    }
    fn from_qrational(&self, r: &QRational) -> Option<QRational> {
        Some(r.clone())
    }
}

/// Arbitrary-precision rationals with `q` fixed to an integer `>= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericQ {
    q: BigRational,
}

impl NumericQ {
    pub fn new(q: u64) -> Self {
        assert!(q >= 2, "q must be at least 2");
        NumericQ {
            q: BigRational::from(BigInt::from(q)),
        }
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }
}

impl Domain for NumericQ {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }
    fn q_pow(&self, e: i64) -> BigRational {
        q_rational_pow(&self.q, e)
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_qpoly(&self, p: &QPoly) -> BigRational {
        p.eval(&self.q)
    }
}
