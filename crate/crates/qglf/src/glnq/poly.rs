//! Univariate polynomials over `F_q` and the irreducibility test backing
//! the regular elliptic search.

use super::matrix::{assert_prime, field_inv, MatrixFq};

/// Polynomial over `F_q`, coefficients little-endian with nonzero leading
/// coefficient (the zero polynomial has an empty coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFq {
    q: u64,
    coeffs: Vec<u64>,
}

impl PolyFq {
    pub fn new(q: u64, mut coeffs: Vec<u64>) -> Self {
        assert_prime(q);
        for c in &mut coeffs {
            *c %= q;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFq { q, coeffs }
    }

    pub fn zero(q: u64) -> Self {
        PolyFq::new(q, vec![])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, other: &PolyFq) -> PolyFq {
        let n = self.coeffs.len().max(other.coeffs.len());
        PolyFq::new(
            self.q,
            (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        )
    }

    pub fn mul(&self, other: &PolyFq) -> PolyFq {
        if self.is_zero() || other.is_zero() {
            return PolyFq::zero(self.q);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.q;
            }
        }
        PolyFq::new(self.q, out)
    }

    pub fn scale(&self, c: u64) -> PolyFq {
        PolyFq::new(
            self.q,
            self.coeffs.iter().map(|&a| a * (c % self.q)).collect(),
        )
    }

    /// Remainder of `self` divided by `other` (`other` nonzero).
    pub fn rem(&self, other: &PolyFq) -> PolyFq {
        assert!(!other.is_zero());
        let q = self.q;
        let dd = other.degree().unwrap();
        let lead_inv = field_inv(*other.coeffs.last().unwrap(), q);
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let lc = *rem.last().unwrap();
            if lc != 0 {
                let f = lc * lead_inv % q;
                let shift = rem.len() - 1 - dd;
                for (k, &c) in other.coeffs.iter().enumerate() {
                    let idx = shift + k;
                    rem[idx] = (rem[idx] + (q - 1) * f % q * c) % q;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        PolyFq { q, coeffs: rem }
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % self.q;
        }
        acc
    }

    /// Irreducibility by trial division: a monic polynomial of degree `n` is
    /// irreducible iff it has no monic factor of degree `<= n/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        if self.coeff(0) == 0 {
            return false; // divisible by x
        }
        for d in 1..=n / 2 {
            let mut divisor_coeffs = vec![0u64; d + 1];
            divisor_coeffs[d] = 1;
            loop {
                let divisor = PolyFq {
                    q: self.q,
                    coeffs: divisor_coeffs.clone(),
                };
                if self.rem(&divisor).is_zero() {
                    return false;
                }
                // next monic polynomial of degree d
                let mut k = 0;
                loop {
                    if k == d {
                        break;
                    }
                    divisor_coeffs[k] += 1;
                    if divisor_coeffs[k] < self.q {
                        break;
                    }
                    divisor_coeffs[k] = 0;
                    k += 1;
                }
                if k == d {
                    break;
                }
            }
        }
        true
    }

    /// Companion matrix: superdiagonal ones, last row `-c_0, ..., -c_(n-1)`.
    pub fn companion(&self) -> MatrixFq {
        assert!(self.is_monic(), "companion needs a monic polynomial");
        let n = self.degree().expect("nonzero");
        assert!(n >= 1);
        let q = self.q;
        let mut m = MatrixFq::zero(n, q);
        for i in 0..n - 1 {
            m.set(i, i + 1, 1);
        }
        for j in 0..n {
            m.set(n - 1, j, (q - self.coeff(j) % q) % q);
        }
        m
    }
}

/// Monic characteristic polynomial of `m`, by recursive cofactor expansion
/// of `det(xI - m)` over `F_q[x]`.
pub fn char_poly(m: &MatrixFq) -> PolyFq {
    let n = m.dim();
    let q = m.modulus();
    // entries of xI - m as degree <= 1 polynomials
    let entry = |i: usize, j: usize| -> PolyFq {
        let c = (q - m.get(i, j) % q) % q;
        if i == j {
            PolyFq::new(q, vec![c, 1])
        } else {
            PolyFq::new(q, vec![c])
        }
    };
    let rows: Vec<Vec<PolyFq>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let cols: Vec<usize> = (0..n).collect();
    det_minor(&rows, 0, &cols, q)
}

fn det_minor(rows: &[Vec<PolyFq>], row: usize, cols: &[usize], q: u64) -> PolyFq {
    if cols.is_empty() {
        return PolyFq::new(q, vec![1]);
    }
    let mut acc = PolyFq::zero(q);
    for (k, &col) in cols.iter().enumerate() {
        let e = &rows[row][col];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
        let mut term = e.mul(&det_minor(rows, row + 1, &rest, q));
        if k % 2 == 1 {
            term = term.scale(q - 1);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Number of monic irreducible polynomials of degree `n` over `F_q`
/// (the necklace-counting formula `(1/n) sum_{d | n} mu(d) q^(n/d)`).
pub fn monic_irreducible_count(n: u64, q: u64) -> u64 {
    let mobius = |mut m: u64| -> i64 {
        let mut mu = 1i64;
        let mut p = 2;
        while p * p <= m {
            if m.is_multiple_of(p) {
                m /= p;
                if m.is_multiple_of(p) {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if m > 1 {
            mu = -mu;
        }
        mu
    };
    let mut total = 0i64;
    for d in 1..=n {
        if n.is_multiple_of(d) {
            total += mobius(d) * (q as i64).pow((n / d) as u32);
        }
    }
    (total / n as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn companion_char_poly_round_trip() {
        // x^2 + x + 1 over F_2
        let f = PolyFq::new(2, vec![1, 1, 1]);
        let c = f.companion();
        assert_eq!(c, MatrixFq::new(2, 2, vec![0, 1, 1, 1]));
        assert_eq!(char_poly(&c), f);
    }

    #[test]
    fn char_poly_identity_and_cycle() {
        // identity (n = 2) over F_2: (x - 1)^2 = x^2 + 1
        let id = MatrixFq::identity(2, 2);
        assert_eq!(char_poly(&id), PolyFq::new(2, vec![1, 0, 1]));
        // n-cycle permutation matrix: x^n - 1
        let mut p = MatrixFq::zero(3, 5);
        p.set(0, 1, 1);
        p.set(1, 2, 1);
        p.set(2, 0, 1);
        assert_eq!(char_poly(&p), PolyFq::new(5, vec![4, 0, 0, 1]));
    }

    #[test]
    fn irreducibility_basics() {
        assert!(PolyFq::new(2, vec![1, 1, 1]).is_irreducible()); // x^2+x+1
        assert!(!PolyFq::new(2, vec![1, 0, 1]).is_irreducible()); // (x+1)^2
        assert!(!PolyFq::new(2, vec![0, 1, 1]).is_irreducible()); // x(x+1)
                                                                  // x^4 + x + 1 irreducible over F_2; x^4 + x^2 + 1 = (x^2+x+1)^2 is not
        assert!(PolyFq::new(2, vec![1, 1, 0, 0, 1]).is_irreducible());
        assert!(!PolyFq::new(2, vec![1, 0, 1, 0, 1]).is_irreducible());
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        for &q in &[2u64, 3] {
            for n in 1..=4u64 {
                let mut count = 0;
                // enumerate monic degree-n polynomials
                let total = q.pow(n as u32);
                for code in 0..total {
                    let mut coeffs = Vec::with_capacity(n as usize + 1);
                    let mut c = code;
                    for _ in 0..n {
                        coeffs.push(c % q);
                        c /= q;
                    }
                    coeffs.push(1);
                    if PolyFq::new(q, coeffs).is_irreducible() {
                        count += 1;
                    }
                }
                assert_eq!(count, monic_irreducible_count(n, q), "n={} q={}", n, q);
            }
        }
    }
}
