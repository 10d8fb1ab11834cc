//! Sparse multivariate polynomial expansion of (a + b)^n and
//! (a_1 + ... + a_m)^n, with exact evaluation.
//!
//! Coefficients are naturals (the expansions realized here have no signs) and
//! terms iterate in lexicographically descending exponent order, matching the
//! composition stream that indexes them.

use std::collections::BTreeMap;
use std::fmt;

use crate::binomials::{binomial, compositions, multinomial};
use crate::exactnum::{power, Nat};
use crate::{Error, Result};

/// Exponent vector of one term; fixed length = number of variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Monomial {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// Sparse polynomial over commuting variables a1..am with Nat coefficients;
/// zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: usize,
    terms: BTreeMap<Monomial, Nat>,
}

impl Poly {
    fn new(vars: usize) -> Poly {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    fn insert_term(&mut self, mono: Monomial, coeff: Nat) {
        debug_assert_eq!(mono.exponents().len(), self.vars);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Nat::zero);
        *entry += &coeff;
    }

    pub fn variable_count(&self) -> usize {
        self.vars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographically descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Nat)> {
        self.terms.iter().rev()
    }

    /// Coefficient of the given exponent vector; zero if absent.
    pub fn coefficient(&self, exponents: &[u64]) -> Nat {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Nat::zero)
    }

    /// Exact value at a point, one Nat per variable.
    pub fn evaluate(&self, point: &[Nat]) -> Result<Nat> {
        if point.len() != self.vars {
            return Err(Error::Input(format!(
                "polynomial in {} variables evaluated at a {}-coordinate point",
                self.vars,
                point.len()
            )));
        }
        let mut acc = Nat::zero();
        for (mono, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (value, &exp) in point.iter().zip(mono.exponents()) {
                if exp > 0 {
                    term *= &power(value, exp);
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Multiply by (a_1 + ... + a_m) and re-collect; the inductive step of
    /// the multinomial expansion, kept for the recurrence test only.
    #[cfg(test)]
    fn mul_linear(&self) -> Poly {
        let mut out = Poly::new(self.vars);
        for (mono, coeff) in &self.terms {
            for i in 0..self.vars {
                let mut exps = mono.exponents().to_vec();
                exps[i] += 1;
                out.insert_term(Monomial(exps), coeff.clone());
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Terms joined by " + ", each as `<coeff>*a1^e1*...` with zero
    /// exponents, unit coefficients, and unit exponents elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if coeff != &Nat::one() || mono.total_degree() == 0 {
                factors.push(coeff.to_string());
            }
            for (i, &e) in mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("a{}", i + 1)),
                    _ => factors.push(format!("a{}^{}", i + 1, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// (a + b)^n as a two-variable polynomial: n+1 terms, the coefficient of
/// a^(n-k) b^k being C(n,k).
pub fn binomial_expand(n: u64) -> Poly {
    let mut poly = Poly::new(2);
    for k in 0..=n {
        poly.insert_term(Monomial(vec![n - k, k]), binomial(n, k as i64));
    }
    poly
}

/// (a_1 + ... + a_m)^n: one term per composition of n into m parts, the
/// coefficient of a_1^k1 ... a_m^km being the multinomial coefficient.
pub fn multinomial_expand(m: u64, n: u64) -> Poly {
    let mut poly = Poly::new(m as usize);
    for comp in compositions(m, n) {
        let ks: Vec<i64> = comp.parts().iter().map(|&p| p as i64).collect();
        poly.insert_term(Monomial(comp.parts().to_vec()), multinomial(n, &ks));
    }
    poly
}

/// Free-function form of [`Poly::evaluate`].
pub fn evaluate(poly: &Poly, point: &[Nat]) -> Result<Nat> {
    poly.evaluate(point)
}
