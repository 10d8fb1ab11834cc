//! Binomial and multinomial coefficients, Pascal's triangle, multiset
//! counts, and composition enumeration.
//!
//! `binomial` accepts any signed k and returns 0 outside 0..=n, so callers
//! never need range guards. The closed form is authoritative; for
//! n <= [`PASCAL_CROSS_CHECK_BOUND`] every call is also recomputed through
//! the additive recurrence via a shared memo table and the two results are
//! asserted equal.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::One;

use crate::exactnum::{factorial, Nat};

/// Largest n for which `binomial` cross-checks the closed form against the
/// memoized recurrence. The memo table is a cache, never a requirement.
pub const PASCAL_CROSS_CHECK_BOUND: u64 = 1024;

static PASCAL_CACHE: Mutex<Vec<Vec<Nat>>> = Mutex::new(Vec::new());

fn extend_rows(rows: &mut Vec<Vec<Nat>>, n_max: usize) {
    if rows.is_empty() {
        rows.push(vec![Nat::one()]);
    }
    while rows.len() <= n_max {
        let prev = rows.last().unwrap();
        let n = rows.len();
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            // C(n,k) = C(n-1,k) + C(n-1,k-1), out-of-range terms zero.
            let mut v = Nat::zero();
            if k < prev.len() {
                v += &prev[k];
            }
            if k > 0 {
                v += &prev[k - 1];
            }
            row.push(v);
        }
        rows.push(row);
    }
}

fn binomial_closed_form(n: u64, k: i64) -> Nat {
    if k < 0 || k as u64 > n {
        return Nat::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // Running value is C(n-k+i, i), so the division is exact.
        acc *= n - k + i;
        acc /= i;
    }
    Nat::from_biguint(acc)
}

/// C(n, k): the number of k-element subsets of an n-element set;
/// 0 whenever k is outside 0..=n.
pub fn binomial(n: u64, k: i64) -> Nat {
    binomial_with_cross_check_bound(n, k, PASCAL_CROSS_CHECK_BOUND)
}

/// [`binomial`] with an explicit cross-check bound: the recurrence check
/// runs only for n <= bound. The returned value is always the closed form.
pub fn binomial_with_cross_check_bound(n: u64, k: i64, bound: u64) -> Nat {
    let closed = binomial_closed_form(n, k);
    if n <= bound {
        let mut rows = PASCAL_CACHE.lock().unwrap();
        extend_rows(&mut rows, n as usize);
        let recurrence = if k < 0 || k as u64 > n {
            Nat::zero()
        } else {
            rows[n as usize][k as usize].clone()
        };
        assert_eq!(
            closed, recurrence,
            "closed form and Pascal recurrence disagree at C({n}, {k})"
        );
    }
    closed
}

/// Rows 0..=n_max of Pascal's triangle, each entry built only from the
/// additive recurrence.
pub fn pascal_triangle(n_max: u64) -> Vec<Vec<Nat>> {
    let mut rows = Vec::new();
    extend_rows(&mut rows, n_max as usize);
    rows.truncate(n_max as usize + 1);
    rows
}

/// Multinomial coefficient n!/(k_1! ... k_m!); 0 if the parts do not sum
/// to n or any part is negative or exceeds n.
pub fn multinomial(n: u64, ks: &[i64]) -> Nat {
    let mut sum: i128 = 0;
    for &k in ks {
        if k < 0 || k as u64 > n {
            return Nat::zero();
        }
        sum += i128::from(k);
    }
    if sum != i128::from(n) {
        return Nat::zero();
    }
    let mut acc = factorial(n);
    for &k in ks {
        acc = acc
            .div_exact(&factorial(k as u64))
            .expect("factorial divides multinomial numerator");
    }
    acc
}

/// Number of multisets of size n drawn from m distinct elements:
/// C(m + n - 1, n).
pub fn multiset_count(m: u64, n: u64) -> Nat {
    if m == 0 {
        return if n == 0 { Nat::one() } else { Nat::zero() };
    }
    binomial(m + n - 1, n as i64)
}

/// An ordered m-tuple of nonnegative parts with a fixed total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<u64>,
    total: u64,
}

impl Composition {
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

/// Streams every composition of n into m nonnegative parts exactly once,
/// in lexicographically descending part order.
pub fn compositions(m: u64, n: u64) -> Compositions {
    let state = if m == 0 {
        None
    } else {
        let mut parts = vec![0u64; m as usize];
        parts[0] = n;
        Some(parts)
    };
    Compositions { total: n, state }
}

#[derive(Debug, Clone)]
pub struct Compositions {
    total: u64,
    state: Option<Vec<u64>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let parts = self.state.as_mut()?;
        let item = Composition {
            parts: parts.clone(),
            total: self.total,
        };
        // Step: decrement the rightmost mobile part, move everything to its
        // right (plus one) into the next slot.
        let m = parts.len();
        let mobile = (0..m.saturating_sub(1)).rev().find(|&i| parts[i] > 0);
        match mobile {
            Some(i) => {
                parts[i] -= 1;
                let carried: u64 = 1 + parts[i + 1..].iter().sum::<u64>();
                parts[i + 1..].iter_mut().for_each(|p| *p = 0);
                parts[i + 1] = carried;
            }
            None => self.state = None,
        }
        Some(item)
    }
}
