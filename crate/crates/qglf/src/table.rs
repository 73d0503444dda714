//! Count tables: finite maps from dimension vectors `(r_1, ..., r_k)` to
//! exact counts. Zero cells are never stored, so tables produced by
//! different computation paths compare equal structurally.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable<V> {
    arity: usize,
    rank: usize,
    entries: BTreeMap<Vec<usize>, V>,
}

impl<V> CountTable<V> {
    pub fn new(arity: usize, rank: usize) -> Self {
        CountTable {
            arity,
            rank,
            entries: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, idx: &[usize]) -> Option<&V> {
        self.entries.get(idx)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &V)> {
        self.entries.iter()
    }

    /// Insert a (nonzero) value; callers drop zeros before inserting.
    pub fn insert(&mut self, idx: Vec<usize>, v: V) {
        debug_assert_eq!(idx.len(), self.arity);
        debug_assert!(idx.iter().all(|&r| r <= self.rank));
        self.entries.insert(idx, v);
    }

    pub fn map<W>(&self, mut f: impl FnMut(&V) -> W) -> CountTable<W> {
        CountTable {
            arity: self.arity,
            rank: self.rank,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), f(v)))
                .collect(),
        }
    }
}

impl CountTable<BigInt> {
    /// Add `v` into the cell at `idx`, creating it if absent.
    pub fn accumulate(&mut self, idx: Vec<usize>, v: BigInt) {
        if v.is_zero() {
            return;
        }
        debug_assert_eq!(idx.len(), self.arity);
        *self.entries.entry(idx).or_insert_with(BigInt::zero) += v;
    }

    pub fn bump(&mut self, idx: Vec<usize>) {
        self.accumulate(idx, BigInt::one());
    }

    /// Merge another table by cellwise addition.
    pub fn merge(&mut self, other: CountTable<BigInt>) {
        debug_assert_eq!(self.arity, other.arity);
        for (idx, v) in other.entries {
            self.accumulate(idx, v);
        }
    }

    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }
}

impl CountTable<BigRational> {
    /// Reinterpret as an integer table; `None` if any value is non-integral.
    pub fn to_integer(&self) -> Option<CountTable<BigInt>> {
        let mut out = CountTable::new(self.arity, self.rank);
        for (idx, v) in &self.entries {
            if !v.denom().is_one() {
                return None;
            }
            if v.numer().is_zero() {
                continue;
            }
            out.insert(idx.clone(), v.numer().clone());
        }
        Some(out)
    }
}
