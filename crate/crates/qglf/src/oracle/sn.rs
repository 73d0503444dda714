//! Brute-force factorization counts of the long cycle in the symmetric
//! group, indexed by the number of cycles of each factor.
//!
//! Permutations are one-line arrays `p` with `p[i]` the image of `i`;
//! cycles are counted by index-chasing with a visited bitmap.

use num_bigint::BigInt;

use super::gl::OracleConfig;
use super::OracleError;
use crate::table::CountTable;

/// All permutations of `{0..n}` in lexicographic one-line order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    rec(&mut Vec::with_capacity(n), &mut items, &mut out);
    out
}

/// `(u o v)(i) = u(v(i))`.
pub fn compose(u: &[usize], v: &[usize]) -> Vec<usize> {
    v.iter().map(|&i| u[i]).collect()
}

pub fn inverse(u: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; u.len()];
    for (i, &j) in u.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn cycle_count(u: &[usize]) -> usize {
    let mut seen = vec![false; u.len()];
    let mut cycles = 0;
    for start in 0..u.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = u[i];
        }
    }
    cycles
}

/// The long cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn long_cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

/// Count factorizations `u_1 ... u_k = c` of the long cycle by the vector
/// of cycle counts `(cycles(u_1), ..., cycles(u_k))`.
pub fn brute_count_sn(
    n: usize,
    k: usize,
    cfg: &OracleConfig,
) -> Result<CountTable<BigInt>, OracleError> {
    assert!(n >= 1 && k >= 2);
    let fact: u64 = (1..=n as u64).product();
    let needed = BigInt::from(fact).pow(k as u32 - 1);
    if needed > BigInt::from(cfg.budget) {
        return Err(OracleError::BudgetExceeded {
            needed: needed.to_string(),
            budget: cfg.budget,
        });
    }
    let perms = permutations(n);
    let inverses: Vec<Vec<usize>> = perms.iter().map(|p| inverse(p)).collect();
    let cycles: Vec<usize> = perms.iter().map(|p| cycle_count(p)).collect();
    let c = long_cycle(n);
    let mut table = CountTable::new(k, n);
    let mut dims = vec![0usize; k];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        perms: &[Vec<usize>],
        inverses: &[Vec<usize>],
        cycles: &[usize],
        k: usize,
        level: usize,
        w: &[usize],
        dims: &mut Vec<usize>,
        table: &mut CountTable<BigInt>,
    ) {
        if level == k - 1 {
            dims[k - 1] = cycle_count(w);
            table.bump(dims.clone());
            return;
        }
        for i in 0..perms.len() {
            dims[level] = cycles[i];
            let next = compose(&inverses[i], w);
            rec(perms, inverses, cycles, k, level + 1, &next, dims, table);
        }
    }
    rec(&perms, &inverses, &cycles, k, 0, &c, &mut dims, &mut table);
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        let u = vec![1, 0, 2];
        let v = vec![2, 1, 0];
        assert_eq!(compose(&u, &v), vec![2, 0, 1]);
        assert_eq!(inverse(&compose(&u, &v)), vec![1, 2, 0]);
        assert_eq!(cycle_count(&long_cycle(5)), 1);
        assert_eq!(cycle_count(&[0, 1, 2]), 3);
    }

    #[test]
    fn two_factor_table_s3() {
        let t = brute_count_sn(3, 2, &OracleConfig::default()).unwrap();
        assert_eq!(t.get(&[3, 1]), Some(&BigInt::from(1)));
        assert_eq!(t.get(&[1, 3]), Some(&BigInt::from(1)));
        assert_eq!(t.get(&[1, 1]), Some(&BigInt::from(1)));
        assert_eq!(t.get(&[2, 2]), Some(&BigInt::from(3)));
        assert_eq!(t.len(), 4);
        assert_eq!(t.total(), BigInt::from(6));
    }

    #[test]
    fn three_factor_totals_s4() {
        let t = brute_count_sn(4, 3, &OracleConfig::default()).unwrap();
        assert_eq!(t.total(), BigInt::from(576)); // (4!)^2
    }
}
