//! Acceptance suite: every release criterion as an executable check, one
//! pass/fail line per criterion (run with `--nocapture` to see them).
//!
//! All comparisons are exact: integer equality for counts, structural
//! equality for rational functions of `q`.

use std::panic::AssertUnwindSafe;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use qglf::coeffs::{
    a_rs_extraction, a_two_explicit, b_multi, b_two, genus0_count, growth_ratio_sweep, m_classical,
    m_q, p_g_polynomial, reflection_count, DimVector,
};
use qglf::exact::{
    choose2, gl_order, qbin, qhyper_terminating, qq_pochhammer, Domain, NumericQ, QRational,
    SymbolicQ,
};
use qglf::genfun::{a_table, expected_genus, fulman_series, TablePath};
use qglf::glnq::{enumerate_gl, find_regular_elliptic, group_order};
use qglf::oracle::{brute_count_gl, brute_count_sn, colored_count, genus_stats, OracleConfig};
use qglf::table::CountTable;

const SYM: &SymbolicQ = &SymbolicQ;

fn criterion(number: u32, description: &str, check: impl FnOnce()) {
    let result = std::panic::catch_unwind(AssertUnwindSafe(check));
    let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {:2} ({}): {}", number, description, verdict);
    if let Err(panic) = result {
        std::panic::resume_unwind(panic);
    }
}

fn oracle_cfg() -> OracleConfig {
    OracleConfig::default()
}

/// Numeric count table for the requested pipeline.
fn numeric_table(n: usize, q: u64, k: usize, path: TablePath) -> CountTable<BigInt> {
    let dom = NumericQ::new(q);
    a_table(&dom, n, k, path)
        .to_integer()
        .expect("counts are integers")
}

#[test]
fn criterion_01_three_way_agreement_two_factors() {
    criterion(
        1,
        "three-way k=2 agreement on (2,2),(2,3),(3,2),(4,2)",
        || {
            for (n, q) in [(2usize, 2u64), (2, 3), (3, 2), (4, 2)] {
                let closed = numeric_table(n, q, 2, TablePath::ClosedForm);
                let charsum = numeric_table(n, q, 2, TablePath::CharSum);
                let c = find_regular_elliptic(n, q, false);
                let oracle = brute_count_gl(n, q, 2, &c, &oracle_cfg()).unwrap();
                assert_eq!(closed, charsum, "closed vs charsum at n={} q={}", n, q);
                assert_eq!(closed, oracle, "closed vs oracle at n={} q={}", n, q);
            }
        },
    );
}

#[test]
fn criterion_02_three_factor_agreement() {
    criterion(2, "k=3 agreement on (2,2),(3,2)", || {
        for (n, q) in [(2usize, 2u64), (3, 2)] {
            let closed = numeric_table(n, q, 3, TablePath::ClosedForm);
            let charsum = numeric_table(n, q, 3, TablePath::CharSum);
            let c = find_regular_elliptic(n, q, false);
            let oracle = brute_count_gl(n, q, 3, &c, &oracle_cfg()).unwrap();
            assert_eq!(closed, charsum, "closed vs charsum at n={} q={}", n, q);
            assert_eq!(closed, oracle, "closed vs oracle at n={} q={}", n, q);
        }
    });
}

#[test]
fn criterion_03_symbolic_identities() {
    criterion(3, "symbolic identities, exact equality", || {
        // b_multi(n,(t,u)) = b_two(n,t,u), n <= 8
        for n in 1..=8i64 {
            for t in 0..=n {
                for u in 0..=n {
                    assert_eq!(b_multi(SYM, n, &[t, u]), b_two(SYM, n, t, u));
                }
            }
        }
        // b_two = terminating 2phi1, n <= 8, t + u < n
        for n in 1..=8i64 {
            for t in 0..n {
                for u in 0..n - t {
                    let phi = qhyper_terminating(
                        &[QRational::q_pow(-t), QRational::q_pow(-u)],
                        &[QRational::q_pow(1 - n)],
                        &QRational::q_pow(t + u - n),
                    )
                    .unwrap();
                    assert_eq!(b_two(SYM, n, t, u), phi);
                }
            }
        }
        // genus-0 product formula = coefficient extraction, n <= 6, k in {2,3};
        // row sums = |G|^(k-1) over the same tables
        for n in 1..=6usize {
            for k in 2..=3usize {
                let table = a_table(SYM, n, k, TablePath::ClosedForm);
                let sum = SYM.sum(table.iter().map(|(_, v)| v.clone()));
                assert_eq!(
                    sum,
                    SYM.pow(&gl_order(SYM, n as i64), k as i64 - 1),
                    "row sum at n={} k={}",
                    n,
                    k
                );
                for (dims, v) in table.iter() {
                    let dv = DimVector::new(dims.clone(), n);
                    if dv.genus() == 0 && dims.iter().all(|&r| r < n) {
                        assert_eq!(
                            genus0_count(SYM, &dv).unwrap(),
                            v.clone(),
                            "genus-0 cell {:?} at n={} k={}",
                            dims,
                            n,
                            k
                        );
                    }
                }
            }
        }
        // explicit fixed-genus formula = extraction, n <= 6
        for n in 2..=6i64 {
            for r in 1..n {
                for s in 1..n - r {
                    if n - r - s > 0 {
                        assert_eq!(
                            a_two_explicit(SYM, n, r, s).unwrap(),
                            a_rs_extraction(SYM, n, r, s)
                        );
                    }
                }
            }
        }
        // hook-degree alternating sum = (q;q)_(n-1), n <= 12
        for n in 1..=12i64 {
            let sum = SYM.sum((0..n).map(|d| {
                let sign = if d % 2 == 0 { 1 } else { -1 };
                SYM.product([
                    SYM.from_int(sign),
                    SYM.q_pow(choose2(d + 1)),
                    qbin(SYM, n - 1, d),
                ])
            }));
            assert_eq!(sum, qq_pochhammer(SYM, n - 1));
        }
    });
}

#[test]
fn criterion_04_reflection_counts() {
    criterion(4, "reflection counts vs extraction and oracle", || {
        // symbolic: t_q(n,l) equals the a-table entry at (n-1, ..., n-1)
        for n in 2..=4usize {
            for l in 1..=4usize {
                let table = a_table(SYM, n, l, TablePath::ClosedForm);
                let cell = table
                    .get(&vec![n - 1; l])
                    .cloned()
                    .unwrap_or_else(QRational::zero);
                assert_eq!(
                    reflection_count(SYM, n as i64, l as i64),
                    cell,
                    "n={} l={}",
                    n,
                    l
                );
            }
        }
        // oracle values
        let dom2 = NumericQ::new(2);
        for (n, q, l) in [(2usize, 2u64, 2usize), (2, 2, 3), (3, 2, 2)] {
            let c = find_regular_elliptic(n, q, false);
            let oracle = brute_count_gl(n, q, l, &c, &oracle_cfg()).unwrap();
            let cell = oracle
                .get(&vec![n - 1; l])
                .cloned()
                .unwrap_or_else(BigInt::zero);
            let dom = NumericQ::new(q);
            let predicted = reflection_count(&dom, n as i64, l as i64);
            assert!(predicted.denom().is_one());
            assert_eq!(predicted.numer(), &cell, "n={} q={} l={}", n, q, l);
        }
        assert_eq!(reflection_count(&dom2, 2, 2), dom2.from_int(3));
        assert!(dom2.is_zero(&reflection_count(&dom2, 2, 3)));
    });
}

#[test]
fn criterion_05_q_to_one_limits() {
    criterion(
        5,
        "q->1 limits recover the symmetric group formulas",
        || {
            // M^m_r(q) -> M^m_r for all index vectors with m <= 5, k <= 3
            for m in 0..=5usize {
                let mut vectors: Vec<Vec<usize>> = vec![vec![]];
                for _ in 0..3 {
                    let mut next = Vec::new();
                    for v in &vectors {
                        for r in 0..=m {
                            let mut w = v.clone();
                            w.push(r);
                            next.push(w);
                        }
                    }
                    vectors.extend(next);
                }
                for rs in vectors {
                    if rs.len() > 3 {
                        continue;
                    }
                    let sym = m_q(
                        SYM,
                        m as i64,
                        &rs.iter().map(|&r| r as i64).collect::<Vec<_>>(),
                    );
                    let limit = sym.limit_q1().expect("finite limit");
                    assert_eq!(
                        limit,
                        BigRational::from(m_classical(m, &rs)),
                        "m={} rs={:?}",
                        m,
                        rs
                    );
                }
            }
            // two-factor coefficient limit matches the factorial expression
            let fact = |v: i64| -> BigInt {
                assert!(v >= 0);
                (1..=v).map(BigInt::from).product::<BigInt>()
            };
            for n in 1..=6i64 {
                for t in 0..n {
                    for u in 0..n {
                        if t + u > n {
                            continue;
                        }
                        let limit = b_two(SYM, n, t, u).limit_q1().expect("finite limit");
                        if t + u == n {
                            assert!(limit.is_zero(), "n={} t={} u={}", n, t, u);
                        } else {
                            let expected = BigRational::new(
                                fact(n - t - 1) * fact(n - u - 1),
                                fact(n - 1) * fact(n - t - u - 1),
                            );
                            assert_eq!(limit, expected, "n={} t={} u={}", n, t, u);
                        }
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_06_expected_genus() {
    criterion(6, "expected genus: closed sum vs oracle and table", || {
        let dom = NumericQ::new(2);
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        assert_eq!(expected_genus(&dom, 2), third);
        assert_eq!(genus_stats(2, 2, 2, &oracle_cfg()).unwrap().mean(), third);
        assert_eq!(
            genus_stats(3, 2, 2, &oracle_cfg()).unwrap().mean(),
            expected_genus(&dom, 3)
        );
        // derivative-free identity: expected genus = n - sum (r+s) a_{r,s} / |G|
        for n in 1..=5usize {
            let table = a_table(SYM, n, 2, TablePath::ClosedForm);
            let weighted = SYM.sum(
                table
                    .iter()
                    .map(|(dims, v)| SYM.mul(&SYM.from_int((dims[0] + dims[1]) as i64), v)),
            );
            let mean = SYM.sub(
                &SYM.from_int(n as i64),
                &SYM.div(&weighted, &gl_order(SYM, n as i64)).unwrap(),
            );
            assert_eq!(expected_genus(SYM, n), mean, "n={}", n);
        }
    });
}

#[test]
fn criterion_07_fulman_census() {
    criterion(7, "fixed-space census matches brute force", || {
        for (n, q) in [(2usize, 2u64), (2, 3), (3, 2), (3, 3)] {
            let dom = NumericQ::new(q);
            let predicted = fulman_series(&dom, n);
            let mut census = vec![0i64; n + 1];
            for m in enumerate_gl(n, q).unwrap() {
                census[m.fixed_dim()] += 1;
            }
            for r in 0..=n {
                assert_eq!(
                    predicted[r],
                    dom.from_int(census[r]),
                    "n={} q={} r={}",
                    n,
                    q,
                    r
                );
            }
        }
        let dom2 = NumericQ::new(2);
        assert_eq!(
            fulman_series(&dom2, 2),
            vec![dom2.from_int(2), dom2.from_int(3), dom2.from_int(1)]
        );
    });
}

#[test]
fn criterion_08_colored_factorizations() {
    criterion(
        8,
        "surjection-weighted counts equal |G| b_two at prime q",
        || {
            for (n, q) in [(2usize, 2u64), (3, 2)] {
                let dom = NumericQ::new(q);
                let order = group_order(n, q);
                for r in 0..=n {
                    for s in 0..=n {
                        let weighted = colored_count(n, q, r, s, &oracle_cfg()).unwrap();
                        let predicted = dom.mul(
                            &b_two(&dom, n as i64, r as i64, s as i64),
                            &gl_order(&dom, n as i64),
                        );
                        assert!(
                            predicted.denom().is_one(),
                            "n={} q={} r={} s={}",
                            n,
                            q,
                            r,
                            s
                        );
                        assert_eq!(
                            predicted.numer(),
                            &weighted,
                            "n={} q={} r={} s={}",
                            n,
                            q,
                            r,
                            s
                        );
                    }
                }
                let _ = order;
            }
        },
    );
}

#[test]
fn criterion_09_asymptotic_growth() {
    criterion(9, "genus-g growth ratios bounded and stabilizing", || {
        let low = BigRational::new(BigInt::one(), BigInt::from(1000));
        let high = BigRational::from(BigInt::from(1000));
        let tol = BigRational::new(BigInt::one(), BigInt::from(1000));
        for g in 0..=2i64 {
            for q in [2u64, 3] {
                let lo = 2 * g + 2;
                let sweep = growth_ratio_sweep(g, q, lo, 40).unwrap();
                for row in &sweep {
                    assert!(
                        row.ratio_squared >= low && row.ratio_squared <= high,
                        "ratio^2 out of range at g={} q={} n={}: {}",
                        g,
                        q,
                        row.n,
                        row.ratio_squared
                    );
                }
                // successive same-parity relative change below 1e-3 for n >= 30
                for pair in sweep.windows(3) {
                    let (a, b) = (&pair[0], &pair[2]);
                    if a.n < 30 {
                        continue;
                    }
                    let change = (&b.ratio_squared - &a.ratio_squared) / &a.ratio_squared;
                    let change = if change.is_negative() {
                        -change
                    } else {
                        change
                    };
                    assert!(
                        change < tol,
                        "relative change too large at g={} q={} n={}: {}",
                        g,
                        q,
                        a.n,
                        change
                    );
                }
            }
        }
        // pinned value: N_0(4) over F_2
        let sweep = growth_ratio_sweep(0, 2, 4, 4).unwrap();
        assert_eq!(sweep[0].count, BigInt::from(362));
    });
}

#[test]
fn criterion_10_genus_polynomial_top_weight() {
    criterion(
        10,
        "unique maximal-weight monomial of P_g is x y^(g-1) z^(g-1)",
        || {
            for g in 1..=4i64 {
                let pg = p_g_polynomial(g).unwrap();
                assert_eq!(
                    pg.max_weight_monomials(),
                    vec![(1, g - 1, g - 1)],
                    "g={}",
                    g
                );
            }
        },
    );
}

#[test]
fn criterion_11_symmetric_group_oracle() {
    criterion(
        11,
        "S_n tables reproduce the classical coefficient systems",
        || {
            let binom = |m: i64, k: i64| -> BigInt {
                if k < 0 || k > m {
                    return BigInt::zero();
                }
                let mut acc = BigInt::one();
                for i in 0..k {
                    acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
                }
                acc
            };
            // evaluate the table generating function at integer markers
            let eval = |table: &CountTable<BigInt>, xs: &[i64]| -> BigInt {
                let mut acc = BigInt::zero();
                for (dims, v) in table.iter() {
                    let mut term = v.clone();
                    for (x, &r) in xs.iter().zip(dims.iter()) {
                        term *= BigInt::from(*x).pow(r as u32);
                    }
                    acc += term;
                }
                acc
            };
            // invert against the binomial basis: c_t = sum_{x <= t} (-1)^(t-x) C(t,x) f(x)
            // (tensored over coordinates)
            for n in 1..=6usize {
                let table = brute_count_sn(n, 2, &oracle_cfg()).unwrap();
                let factorial: BigInt = (1..=n as i64).map(BigInt::from).product();
                for t in 0..=n as i64 {
                    for u in 0..=n as i64 {
                        let mut c = BigRational::zero();
                        for x in 0..=t {
                            for y in 0..=u {
                                let sign = if (t - x + u - y) % 2 == 0 { 1 } else { -1 };
                                let w = BigInt::from(sign) * binom(t, x) * binom(u, y);
                                c += BigRational::new(w * eval(&table, &[x, y]), factorial.clone());
                            }
                        }
                        let expected = if t >= 1 && u >= 1 && n as i64 + 1 - t - u >= 0 {
                            // trinomial (n-1; t-1, u-1, n-t-u+1)
                            let mut v = BigRational::from(binom(n as i64 - 1, t - 1));
                            v *= BigRational::from(binom(n as i64 - t, u - 1));
                            v
                        } else {
                            BigRational::zero()
                        };
                        assert_eq!(c, expected, "n={} t={} u={}", n, t, u);
                    }
                }
            }
            // three factors: coefficients are the alternating subset counts
            for n in 1..=5usize {
                let table = brute_count_sn(n, 3, &oracle_cfg()).unwrap();
                let factorial: BigInt = (1..=n as i64).map(BigInt::from).product();
                let norm = BigRational::from(&factorial * &factorial);
                for p1 in 0..=n as i64 {
                    for p2 in 0..=n as i64 {
                        for p3 in 0..=n as i64 {
                            let mut c = BigRational::zero();
                            for x in 0..=p1 {
                                for y in 0..=p2 {
                                    for z in 0..=p3 {
                                        let sign = if (p1 - x + p2 - y + p3 - z) % 2 == 0 {
                                            1
                                        } else {
                                            -1
                                        };
                                        let w = BigInt::from(sign)
                                            * binom(p1, x)
                                            * binom(p2, y)
                                            * binom(p3, z);
                                        c += BigRational::from(w * eval(&table, &[x, y, z]))
                                            / norm.clone();
                                    }
                                }
                            }
                            let expected = if p1 >= 1 && p2 >= 1 && p3 >= 1 {
                                BigRational::from(m_classical(
                                    n - 1,
                                    &[(p1 - 1) as usize, (p2 - 1) as usize, (p3 - 1) as usize],
                                ))
                            } else {
                                BigRational::zero()
                            };
                            assert_eq!(c, expected, "n={} p=({},{},{})", n, p1, p2, p3);
                        }
                    }
                }
            }
        },
    );
}
