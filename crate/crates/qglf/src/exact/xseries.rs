//! Multivariate series in marker variables `x_1, ..., x_k`, stored either in
//! the monomial basis or in the falling basis `B_t(x) = (x;q^-1)_t/(q;q)_t`,
//! one basis choice shared by all variables.

use std::collections::BTreeMap;

use super::domain::Domain;
use super::qseries::{basis_falling_to_monomial, basis_monomial_to_falling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Falling,
}

/// Finite map from exponent vectors to coefficients.
///
/// Every exponent vector has length `arity` and entries at most `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSeries<D: Domain> {
    arity: usize,
    rank: usize,
    basis: Basis,
    terms: BTreeMap<Vec<usize>, D::Elem>,
}

impl<D: Domain> XSeries<D> {
    pub fn zero(arity: usize, rank: usize, basis: Basis) -> Self {
        XSeries {
            arity,
            rank,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, dom: &D, idx: Vec<usize>, c: D::Elem) {
        assert_eq!(idx.len(), self.arity, "index arity mismatch");
        debug_assert!(idx.iter().all(|&i| i <= self.rank));
        if dom.is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = dom.add(o.get(), &c);
                if dom.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn coeff(&self, dom: &D, idx: &[usize]) -> D::Elem {
        self.terms.get(idx).cloned().unwrap_or_else(|| dom.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &D::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Accumulate `scale * prod_i factor_i(x_i)` where `factor_i` is given by
    /// its coefficient vector in the current basis.
    pub fn add_scaled_product(&mut self, dom: &D, scale: &D::Elem, factors: &[Vec<D::Elem>]) {
        assert_eq!(factors.len(), self.arity);
        if dom.is_zero(scale) {
            return;
        }
        let mut idx = vec![0usize; self.arity];
        self.tensor_rec(dom, scale, factors, 0, &mut idx);
    }

    fn tensor_rec(
        &mut self,
        dom: &D,
        acc: &D::Elem,
        factors: &[Vec<D::Elem>],
        axis: usize,
        idx: &mut Vec<usize>,
    ) {
        if axis == factors.len() {
            self.add_term(dom, idx.clone(), acc.clone());
            return;
        }
        for (i, c) in factors[axis].iter().enumerate() {
            if dom.is_zero(c) {
                continue;
            }
            idx[axis] = i;
            let next = dom.mul(acc, c);
            self.tensor_rec(dom, &next, factors, axis + 1, idx);
        }
        idx[axis] = 0;
    }

    /// Convert falling-basis coefficients to monomial coefficients.
    pub fn to_monomial(&self, dom: &D) -> Self {
        assert!(matches!(self.basis, Basis::Falling), "already monomial");
        self.transform(dom, Basis::Monomial, |m, r| {
            basis_falling_to_monomial(dom, m as i64, r as i64)
        })
    }

    /// Convert monomial coefficients to falling-basis coefficients.
    pub fn to_falling(&self, dom: &D) -> Self {
        assert!(matches!(self.basis, Basis::Monomial), "already falling");
        self.transform(dom, Basis::Falling, |k, m| {
            basis_monomial_to_falling(dom, k as i64, m as i64)
        })
    }

    /// Apply the triangular per-variable substitution with coefficients
    /// `mat(old, new)` (nonzero only for `new <= old`) along every axis.
    fn transform(&self, dom: &D, basis: Basis, mat: impl Fn(usize, usize) -> D::Elem) -> Self {
        let table: Vec<Vec<D::Elem>> = (0..=self.rank)
            .map(|old| (0..=old).map(|new| mat(old, new)).collect())
            .collect();
        let mut cur = self.clone();
        cur.basis = basis;
        for axis in 0..self.arity {
            let mut next = XSeries::zero(self.arity, self.rank, basis);
            for (idx, c) in &cur.terms {
                let old = idx[axis];
                for (new, t) in table[old].iter().enumerate() {
                    if dom.is_zero(t) {
                        continue;
                    }
                    let mut nidx = idx.clone();
                    nidx[axis] = new;
                    next.add_term(dom, nidx, dom.mul(c, t));
                }
            }
            cur = next;
        }
        cur
    }
}
