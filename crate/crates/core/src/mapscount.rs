//! Counting structured maps between finite sets: permutations, functions,
//! injections, surjections, set partitions (Stirling numbers of the second
//! kind), and derangements.
//!
//! Degenerate surjection cases (p = 0, p > n) are defined so that the
//! partition-of-all-maps identity sum_p C(m,p) S(n,p) = m^n holds for every
//! n >= 1; derangements are computed by two independent formulas whose
//! agreement is asserted on every call.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::binomials::binomial;
use crate::exactnum::{factorial, falling_factorial, power, Nat, Rat};

/// Number of permutations of an n-element set: n!.
pub fn count_permutations(n: u64) -> Nat {
    factorial(n)
}

/// Number of functions from an m-element set to an n-element set: n^m,
/// with 0^0 = 1 (the empty function).
pub fn count_functions(m: u64, n: u64) -> Nat {
    power(&Nat::from(n), m)
}

/// Number of injections from an m-element set into an n-element set:
/// n(n-1)...(n-m+1), zero when m > n.
pub fn count_injections(m: u64, n: u64) -> Nat {
    falling_factorial(n, m)
}

/// Number of surjections from an n-element set onto a p-element set:
/// the alternating sum over k of (-1)^k C(p,k) (p-k)^n.
pub fn count_surjections(n: u64, p: u64) -> Nat {
    if p == 0 {
        return if n == 0 { Nat::one() } else { Nat::zero() };
    }
    if p > n {
        return Nat::zero();
    }
    let mut acc = BigInt::zero();
    for k in 0..p {
        let term = binomial(p, k as i64).to_bigint() * count_functions(n, p - k).to_bigint();
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    assert!(!acc.is_negative(), "surjection sum went negative at ({n}, {p})");
    Nat::from_biguint(acc.to_biguint().unwrap())
}

/// Stirling number of the second kind: partitions of an n-element set into
/// p nonempty blocks, recovered as S(n,p) / p!.
///
/// Panics on an internal consistency fault (p! not dividing the surjection
/// count), which a correct build can never reach.
pub fn stirling2(n: u64, p: u64) -> Nat {
    count_surjections(n, p)
        .div_exact(&factorial(p))
        .expect("internal consistency fault: p! does not divide the surjection count")
}

/// Number of fixed-point-free permutations of an n-element set, computed by
/// both published formulas with their agreement asserted.
pub fn count_derangements(n: u64) -> Nat {
    // (a) alternating factorial sum: sum_k (-1)^k C(n,k) (n-k)!.
    let mut alternating = BigInt::zero();
    for k in 0..=n {
        let term = binomial(n, k as i64).to_bigint() * factorial(n - k).to_bigint();
        if k % 2 == 0 {
            alternating += term;
        } else {
            alternating -= term;
        }
    }
    assert!(!alternating.is_negative());

    // (b) exact rational evaluation of n! * sum_k (-1)^k / k!.
    let mut series = Rat::zero();
    for k in 0..=n {
        let inv_fact = Rat::new(1.into(), factorial(k).to_bigint()).unwrap();
        if k % 2 == 0 {
            series += &inv_fact;
        } else {
            series -= &inv_fact;
        }
    }
    let scaled = &Rat::from_nat(&factorial(n)) * &series;
    assert!(
        scaled.is_integer(),
        "internal consistency fault: rational derangement formula is not integral at n = {n}"
    );
    assert_eq!(
        scaled.numer(),
        &alternating,
        "internal consistency fault: derangement formulas disagree at n = {n}"
    );

    Nat::from_biguint(alternating.to_biguint().unwrap())
}
