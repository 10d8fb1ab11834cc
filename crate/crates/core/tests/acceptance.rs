//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`).

use std::time::{Duration, Instant};

use combinat::asymptotics::{binet_sweep, derangement_ratio_exact};
use combinat::binomials::{binomial, multiset_count, pascal_triangle};
use combinat::exactnum::{factorial, power, Nat, Rat};
use combinat::expand::{binomial_expand, multinomial_expand};
use combinat::inclexcl::{ie_union, sieve, sylvester, sylvester_grouped};
use combinat::mapscount::{count_derangements, count_surjections, stirling2};
use combinat::oracle::{self, MapKind};
use combinat::{Measure, SetFamily};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion<F>(number: u32, name: &str, body: F)
where
    F: FnOnce() + std::panic::UnwindSafe,
{
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(body);
    let status = if outcome.is_ok() { "pass" } else { "FAIL" };
    println!(
        "criterion {number:2} [{name}]: {status} ({:?})",
        start.elapsed()
    );
    if let Err(cause) = outcome {
        std::panic::resume_unwind(cause);
    }
}

#[test]
fn criterion_01_pascal_fidelity() {
    criterion(1, "pascal rows 0-7", || {
        let expected: [&[u64]; 8] = [
            &[1],
            &[1, 1],
            &[1, 2, 1],
            &[1, 3, 3, 1],
            &[1, 4, 6, 4, 1],
            &[1, 5, 10, 10, 5, 1],
            &[1, 6, 15, 20, 15, 6, 1],
            &[1, 7, 21, 35, 35, 21, 7, 1],
        ];
        let rows = pascal_triangle(7);
        assert_eq!(rows.len(), 8);
        for (n, want) in expected.iter().enumerate() {
            let got: Vec<Nat> = want.iter().map(|&v| Nat::from(v)).collect();
            assert_eq!(rows[n], got, "row {n} mismatch");
        }
    });
}

#[test]
fn criterion_02_factorial_ten() {
    criterion(2, "10! = 3628800", || {
        assert_eq!(factorial(10), Nat::from(3_628_800u64));
    });
}

#[test]
fn criterion_03_binomial_three_routes() {
    criterion(3, "closed form = recurrence = oracle", || {
        let start = Instant::now();
        let rows = pascal_triangle(200);
        for n in 0..=15u64 {
            for k in -1..=(n as i64 + 1) {
                let closed = binomial(n, k);
                let oracle_count = oracle::enum_subsets_k(n, k).unwrap();
                assert_eq!(closed, oracle_count, "oracle mismatch at ({n}, {k})");
                if (0..=n as i64).contains(&k) {
                    assert_eq!(closed, rows[n as usize][k as usize]);
                }
            }
        }
        for n in 16..=200u64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k as i64),
                    rows[n as usize][k as usize],
                    "recurrence mismatch at ({n}, {k})"
                );
            }
        }
        assert!(
            start.elapsed() < Duration::from_secs(5),
            "binomial routes took {:?}",
            start.elapsed()
        );
    });
}

#[test]
fn criterion_04_surjections() {
    criterion(4, "surjection oracle + recurrence", || {
        for n in 0..=7u64 {
            for p in 0..=n {
                assert_eq!(
                    count_surjections(n, p),
                    oracle::enum_maps(n, p, MapKind::Surjective).unwrap(),
                    "oracle mismatch at ({n}, {p})"
                );
            }
        }
        for n in 1..=60u64 {
            for p in 1..=n {
                let rhs = &Nat::from(p)
                    * &(&count_surjections(n - 1, p) + &count_surjections(n - 1, p - 1));
                assert_eq!(count_surjections(n, p), rhs, "recurrence failed at ({n}, {p})");
            }
        }
    });
}

#[test]
fn criterion_05_stirling_factorization() {
    criterion(5, "S(n,p) = p! stirling2(n,p)", || {
        for n in 0..=60u64 {
            for p in 0..=n {
                assert_eq!(
                    count_surjections(n, p),
                    &factorial(p) * &stirling2(n, p),
                    "factorization failed at ({n}, {p})"
                );
            }
        }
        for n in 0..=9u64 {
            for p in 0..=n {
                assert_eq!(
                    stirling2(n, p),
                    oracle::enum_partitions(n, p).unwrap(),
                    "partition oracle mismatch at ({n}, {p})"
                );
            }
        }
    });
}

#[test]
fn criterion_06_derangements() {
    criterion(6, "derangement formulas + 1/e tail bound", || {
        // count_derangements itself asserts the two published formulas agree.
        for n in 0..=8u64 {
            assert_eq!(
                count_derangements(n),
                oracle::enum_maps(n, n, MapKind::Derangement).unwrap(),
                "oracle mismatch at n = {n}"
            );
        }

        // |p_n/n! - 1/e| <= 1/(n+1)! checked in exact rational arithmetic
        // against alternating partial sums S_m of 1/e with m = n + 40:
        // |S_m - 1/e| <= 1/(m+1)!, so |ratio - S_m| <= 1/(n+1)! - 1/(m+1)!
        // suffices.
        let horizon = 170 + 41;
        let inv_fact: Vec<Rat> = (0..=horizon + 1)
            .map(|k| Rat::new(1.into(), factorial(k).to_bigint()).unwrap())
            .collect();
        let mut partials = Vec::with_capacity(horizon as usize + 1);
        let mut acc = Rat::zero();
        for k in 0..=horizon {
            if k % 2 == 0 {
                acc += &inv_fact[k as usize];
            } else {
                acc -= &inv_fact[k as usize];
            }
            partials.push(acc.clone());
        }
        for n in 1..=170u64 {
            let m = n + 40;
            let ratio = derangement_ratio_exact(n);
            let diff = (&ratio - &partials[m as usize]).abs();
            let allowance = &inv_fact[n as usize + 1] - &inv_fact[m as usize + 1];
            assert!(diff <= allowance, "tail bound failed at n = {n}");
        }
    });
}

#[test]
fn criterion_07_inclusion_exclusion_random_families() {
    criterion(7, "200 random weighted families", || {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for case in 0..200 {
            let u = rng.random_range(0..=12usize);
            let n = rng.random_range(0..=6usize);
            let sets: Vec<Vec<usize>> = (0..n)
                .map(|_| (0..u).filter(|_| rng.random_bool(0.4)).collect())
                .collect();
            let weights: Vec<Rat> = (0..u)
                .map(|_| {
                    Rat::new(
                        rng.random_range(0..=8).into(),
                        rng.random_range(1..=8).into(),
                    )
                    .unwrap()
                })
                .collect();
            let family = SetFamily::from_index_sets(u, &sets).unwrap();
            let measure = Measure::new(weights).unwrap();

            let union = ie_union(&family, &measure).unwrap();
            assert_eq!(
                union,
                oracle::direct_union_measure(&family, &measure).unwrap(),
                "union mismatch in case {case}"
            );

            let syl = sylvester(&family, &measure).unwrap();
            assert_eq!(syl, sylvester_grouped(&family, &measure).unwrap());
            assert_eq!(
                syl,
                oracle::direct_none_measure(&family, &measure).unwrap(),
                "sylvester mismatch in case {case}"
            );

            let mut sieve_total = Rat::zero();
            for p in 0..=n as u64 {
                let t = sieve(&family, &measure, p).unwrap();
                assert_eq!(
                    t,
                    oracle::direct_exactly_p_measure(&family, &measure, p).unwrap(),
                    "sieve mismatch in case {case}, p = {p}"
                );
                sieve_total += &t;
            }
            assert_eq!(sieve_total, measure.total(), "sieve total in case {case}");
        }
        assert!(
            start.elapsed() < Duration::from_secs(10),
            "inclusion-exclusion suite took {:?}",
            start.elapsed()
        );
    });
}

#[test]
fn criterion_08_surjections_via_inclusion_exclusion() {
    criterion(8, "surjection count via function-family union", || {
        for n in 0..=5u32 {
            for p in 0..=4u32 {
                // Universe: all p^n functions [n] -> [p], indexed in mixed
                // radix; A_i holds the functions whose image misses i.
                let universe = (p as usize).pow(n);
                let mut sets: Vec<Vec<usize>> = vec![Vec::new(); p as usize];
                for f_idx in 0..universe {
                    let mut digits = f_idx;
                    let mut hit = vec![false; p as usize];
                    for _ in 0..n {
                        hit[digits % p as usize] = true;
                        digits /= p as usize;
                    }
                    for (i, sets_i) in sets.iter_mut().enumerate() {
                        if !hit[i] {
                            sets_i.push(f_idx);
                        }
                    }
                }
                let family = SetFamily::from_index_sets(universe, &sets).unwrap();
                let measure = Measure::counting(universe);
                let union = ie_union(&family, &measure).unwrap();
                let total = Rat::from_nat(&power(&Nat::from(u64::from(p)), u64::from(n)));
                let surjective = &total - &union;
                assert_eq!(
                    surjective,
                    Rat::from_nat(&count_surjections(u64::from(n), u64::from(p))),
                    "mismatch at n = {n}, p = {p}"
                );
            }
        }
    });
}

#[test]
fn criterion_09_expansions() {
    criterion(9, "expansion evaluation + term counts", || {
        let point = [Nat::from(2u64), Nat::from(3u64)];
        for n in 0..=20u64 {
            assert_eq!(
                binomial_expand(n).evaluate(&point).unwrap(),
                power(&Nat::from(5u64), n),
                "5^n mismatch at n = {n}"
            );
        }
        for m in 1..=5u64 {
            for n in 0..=10u64 {
                let poly = multinomial_expand(m, n);
                assert_eq!(
                    Nat::from(poly.term_count()),
                    multiset_count(m, n),
                    "term count mismatch at m = {m}, n = {n}"
                );
                assert_eq!(
                    poly.evaluate(&vec![Nat::one(); m as usize]).unwrap(),
                    power(&Nat::from(m), n),
                    "all-ones mismatch at m = {m}, n = {n}"
                );
            }
        }
    });
}

#[test]
fn criterion_10_binet_bounds() {
    criterion(10, "Binet bounds strict with margin, n <= 5000", || {
        let start = Instant::now();
        let reports = binet_sweep(5000);
        let elapsed = start.elapsed();
        assert_eq!(reports.len(), 5000);
        for rep in &reports {
            assert!(
                rep.lower < rep.lambda_n && rep.lambda_n < rep.upper,
                "Binet bounds violated at n = {}",
                rep.n
            );
            assert!(
                rep.strict_with_margin,
                "margin below rounding budget at n = {}",
                rep.n
            );
        }
        assert!(
            elapsed < Duration::from_secs(1),
            "sweep took {elapsed:?}, expected < 1 s"
        );
    });
}
