//! Laurent polynomials in three variables `x, y, z` with coefficients that
//! are rational functions of `q`.

use std::collections::BTreeMap;
use std::fmt;

use super::domain::Domain;
use super::qrational::QRational;

/// Exponent triple `(a, b, c)` for the monomial `x^a y^b z^c`.
pub type Exponents = (i64, i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiLaurent {
    terms: BTreeMap<Exponents, QRational>,
}

impl MultiLaurent {
    pub fn zero() -> Self {
        MultiLaurent::default()
    }

    pub fn monomial(c: QRational, e: Exponents) -> Self {
        let mut m = MultiLaurent::zero();
        m.add_term(e, c);
        m
    }

    pub fn add_term(&mut self, e: Exponents, c: QRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiLaurent::zero();
        for (&(a1, b1, c1), u) in &self.terms {
            for (&(a2, b2, c2), v) in &other.terms {
                out.add_term((a1 + a2, b1 + b2, c1 + c2), u * v);
            }
        }
        out
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return MultiLaurent::zero();
        }
        MultiLaurent {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exponents, &QRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitute domain elements for `x, y, z` (coefficients map through
    /// the domain as rational functions of `q`).
    pub fn eval<D: Domain>(&self, dom: &D, x: &D::Elem, y: &D::Elem, z: &D::Elem) -> D::Elem {
        let mut acc = dom.zero();
        for (&(a, b, c), coeff) in &self.terms {
            let coeff = dom
                .from_qrational(coeff)
                .expect("coefficient denominator nonzero in domain");
            let m = dom.mul(&dom.mul(&dom.pow(x, a), &dom.pow(y, b)), &dom.pow(z, c));
            acc = dom.add(&acc, &dom.mul(&coeff, &m));
        }
        acc
    }

    /// Monomials of maximal weight under `weight(x^a y^b z^c) = 2a + b + c`.
    pub fn max_weight_monomials(&self) -> Vec<Exponents> {
        let Some(max) = self.terms.keys().map(|&(a, b, c)| 2 * a + b + c).max() else {
            return Vec::new();
        };
        self.terms
            .keys()
            .copied()
            .filter(|&(a, b, c)| 2 * a + b + c == max)
            .collect()
    }
}

impl fmt::Display for MultiLaurent {
    /// Terms in descending lexicographic exponent order, each rendered as
    /// `(coeff)x^a y^b z^c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b, c), coeff) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", coeff)?;
            for (name, e) in [("x", a), ("y", b), ("z", c)] {
                match e {
                    0 => {}
                    1 => write!(f, "{}", name)?,
                    _ => write!(f, "{}^{}", name, e)?,
                }
            }
        }
        Ok(())
    }
}
