//! Dense matrices over a prime field `F_q` with exact modular arithmetic.

use std::fmt;

/// An `n x n` matrix over `F_q` (`q` a small prime), entries in `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatrixFq {
    n: usize,
    q: u64,
    entries: Vec<u64>,
}

pub(crate) fn assert_prime(q: u64) {
    assert!(q >= 2, "q must be a prime");
    let mut d = 2;
    while d * d <= q {
        assert!(!q.is_multiple_of(d), "q = {} is not prime", q);
        d += 1;
    }
}

/// Inverse of `a` in `F_q` by Fermat exponentiation.
pub(crate) fn field_inv(a: u64, q: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(q));
    mod_pow(a % q, q - 2, q)
}

pub(crate) fn mod_pow(mut base: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    base %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    acc
}

impl MatrixFq {
    pub fn new(n: usize, q: u64, entries: Vec<u64>) -> Self {
        assert_prime(q);
        assert_eq!(entries.len(), n * n);
        let entries = entries.into_iter().map(|e| e % q).collect();
        MatrixFq { n, q, entries }
    }

    pub fn zero(n: usize, q: u64) -> Self {
        assert_prime(q);
        MatrixFq {
            n,
            q,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize, q: u64) -> Self {
        let mut m = MatrixFq::zero(n, q);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.n + j] = v % self.q;
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn mul(&self, other: &MatrixFq) -> MatrixFq {
        assert_eq!(self.n, other.n);
        assert_eq!(self.q, other.q);
        let n = self.n;
        let q = self.q;
        let mut out = MatrixFq::zero(n, q);
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cell = &mut out.entries[i * n + j];
                    *cell = (*cell + a * other.entries[k * n + j]) % q;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> MatrixFq {
        let mut acc = MatrixFq::identity(self.n, self.q);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Rank by Gaussian elimination over `F_q`.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let q = self.q;
        let mut a = self.entries.clone();
        let mut rank = 0;
        for col in 0..n {
            // find pivot
            let Some(pivot_row) = (rank..n).find(|&r| a[r * n + col] != 0) else {
                continue;
            };
            if pivot_row != rank {
                for j in 0..n {
                    a.swap(rank * n + j, pivot_row * n + j);
                }
            }
            let inv = field_inv(a[rank * n + col], q);
            for j in col..n {
                a[rank * n + j] = a[rank * n + j] * inv % q;
            }
            for r in 0..n {
                if r != rank && a[r * n + col] != 0 {
                    let f = a[r * n + col];
                    for j in col..n {
                        a[r * n + j] = (a[r * n + j] + (q - 1) * f % q * a[rank * n + j]) % q;
                    }
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// Inverse by Gauss-Jordan; `None` if singular.
    pub fn inverse(&self) -> Option<MatrixFq> {
        let n = self.n;
        let q = self.q;
        let mut a = self.entries.clone();
        let mut b = MatrixFq::identity(n, q).entries;
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| a[r * n + col] != 0)?;
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    b.swap(col * n + j, pivot_row * n + j);
                }
            }
            let inv = field_inv(a[col * n + col], q);
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * inv % q;
                b[col * n + j] = b[col * n + j] * inv % q;
            }
            for r in 0..n {
                if r != col && a[r * n + col] != 0 {
                    let f = a[r * n + col];
                    let neg = q - f;
                    for j in 0..n {
                        a[r * n + j] = (a[r * n + j] + neg * a[col * n + j]) % q;
                        b[r * n + j] = (b[r * n + j] + neg * b[col * n + j]) % q;
                    }
                }
            }
        }
        Some(MatrixFq { n, q, entries: b })
    }

    /// Dimension of the fixed space `ker(m - 1)`, i.e. `n - rank(m - I)`.
    pub fn fixed_dim(&self) -> usize {
        let n = self.n;
        let q = self.q;
        let mut shifted = self.clone();
        for i in 0..n {
            let d = shifted.entries[i * n + i];
            shifted.entries[i * n + i] = (d + q - 1) % q;
        }
        n - shifted.rank()
    }

    /// Multiplicative order; the matrix must be invertible.
    pub fn order(&self) -> u64 {
        let id = MatrixFq::identity(self.n, self.q);
        let mut acc = self.clone();
        let mut ord = 1;
        while acc != id {
            acc = acc.mul(self);
            ord += 1;
        }
        ord
    }
}

impl fmt::Display for MatrixFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
