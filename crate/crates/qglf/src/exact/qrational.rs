//! Rational functions in `q`, kept in a canonical reduced form so that
//! equality is structural.
//!
//! Canonical form: numerator and denominator are integer polynomials with
//! nonnegative exponents, not both divisible by `q`, with no common
//! polynomial factor, with coprime contents, and with positive leading
//! coefficient on the denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QPoly,
    den: QPoly,
}

impl QRational {
    /// Build `num/den`, reducing to canonical form. Panics on zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        QRational { num, den }.reduce()
    }

    pub fn zero() -> Self {
        QRational {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRational {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        QRational {
            num: QPoly::constant(n),
            den: QPoly::one(),
        }
    }

    /// `q^e` as a rational function (negative `e` lands in the denominator).
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            QRational {
                num: QPoly::q_pow(e),
                den: QPoly::one(),
            }
        } else {
            QRational {
                num: QPoly::one(),
                den: QPoly::q_pow(-e),
            }
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRational {
            num: p,
            den: QPoly::one(),
        }
        .reduce()
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn reduce(self) -> Self {
        let QRational { mut num, mut den } = self;
        if num.is_zero() {
            return QRational::zero();
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides");
            den = den.exact_div(&g).expect("gcd divides");
        }
        normalize_units(num, den)
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        // num/den coprime already; only units need renormalizing.
        normalize_units(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return QRational::one();
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let n = e.unsigned_abs() as u32;
        // num and den are already coprime; powers stay coprime.
        QRational {
            num: base.num.pow(n),
            den: base.den.pow(n),
        }
    }

    /// True if the value is a Laurent polynomial, i.e. the reduced
    /// denominator is a monomial `c * q^j`.
    pub fn is_laurent_poly(&self) -> bool {
        self.den.is_monomial()
    }

    /// Convert to a Laurent polynomial when the denominator is `±q^j`.
    pub fn as_laurent_poly(&self) -> Option<QPoly> {
        if !self.is_laurent_poly() {
            return None;
        }
        let e = self.den.degree().unwrap_or(0);
        let c = self.den.leading_coeff();
        if !c.magnitude().is_one() {
            return None;
        }
        let shifted = self.num.shift(-e);
        Some(if c.is_negative() {
            shifted.neg()
        } else {
            shifted
        })
    }

    /// Evaluate at a numeric `q`; `None` if the denominator vanishes there.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q) / d)
    }

    /// Limit as `q -> 1`, cancelling the maximal shared power of `(q - 1)`
    /// first. `None` if the limit is infinite.
    pub fn limit_q1(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let qm1 = QPoly::from_pairs([(1, BigInt::one()), (0, -BigInt::one())]);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let dv = den.eval_one();
            if !dv.is_zero() {
                return Some(BigRational::new(num.eval_one(), dv));
            }
            if !num.eval_one().is_zero() {
                return None; // pole at q = 1
            }
            num = num.exact_div(&qm1).expect("root at 1 divides");
            den = den.exact_div(&qm1).expect("root at 1 divides");
        }
    }
}

/// Normalize units only: joint `q`-power shift, coprime contents, positive
/// leading coefficient on the denominator. Callers guarantee num and den
/// share no polynomial factor.
fn normalize_units(num: QPoly, den: QPoly) -> QRational {
    if num.is_zero() {
        return QRational::zero();
    }
    let shift = num.ord().unwrap().min(den.ord().unwrap());
    let mut num = num.shift(-shift);
    let mut den = den.shift(-shift);
    let c = num.content().gcd(&den.content());
    if !c.is_one() {
        num = num
            .exact_div(&QPoly::constant(c.clone()))
            .expect("content divides");
        den = den.exact_div(&QPoly::constant(c)).expect("content divides");
    }
    if den.leading_coeff().is_negative() {
        num = num.neg();
        den = den.neg();
    }
    QRational { num, den }
}

impl From<QPoly> for QRational {
    fn from(p: QPoly) -> Self {
        QRational::from_poly(p)
    }
}

impl Add for &QRational {
    type Output = QRational;
    fn add(self, other: &QRational) -> QRational {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            // Coprime denominators: the sum is already reduced.
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return normalize_units(num, den);
        }
        let da = self.den.exact_div(&g).expect("gcd divides");
        let db = other.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        // Any factor shared by num and den divides g.
        let h = num.gcd(&g);
        if h.is_one() {
            normalize_units(num, den)
        } else {
            normalize_units(
                num.exact_div(&h).expect("gcd divides"),
                den.exact_div(&h).expect("gcd divides"),
            )
        }
    }
}

impl Sub for &QRational {
    type Output = QRational;
    fn sub(self, other: &QRational) -> QRational {
        self + &(-other)
    }
}

impl Mul for &QRational {
    type Output = QRational;
    fn mul(self, other: &QRational) -> QRational {
        if self.is_zero() || other.is_zero() {
            return QRational::zero();
        }
        // Cross-reduce so the products below are coprime by construction.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let an = self.num.exact_div(&g1).expect("gcd divides");
        let bd = other.den.exact_div(&g1).expect("gcd divides");
        let bn = other.num.exact_div(&g2).expect("gcd divides");
        let ad = self.den.exact_div(&g2).expect("gcd divides");
        normalize_units(an.mul(&bn), ad.mul(&bd))
    }
}

impl Div for &QRational {
    type Output = QRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, other: &QRational) -> QRational {
        self * &other.inverse()
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRational {
            type Output = QRational;
            fn $m(self, other: QRational) -> QRational {
                (&self).$m(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

impl fmt::Display for QRational {
    /// Canonical text form: plain numerator if the denominator is 1, else
    /// `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
