//! Arbitrary-precision arithmetic backbone: naturals, exact rationals,
//! factorials, powers, falling factorials.
//!
//! [`Nat`] is the codomain of every exact count in this crate; [`Rat`] carries
//! measures and inclusion-exclusion sums. Inputs (n, k, m, p) are plain
//! machine integers; only outputs are unbounded.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::Error;

/// Arbitrary-precision nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Nat(BigUint);

impl Nat {
    pub fn zero() -> Nat {
        Nat(BigUint::zero())
    }

    pub fn one() -> Nat {
        Nat(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Exact division; `None` when `d` is zero or does not divide `self`.
    pub fn div_exact(&self, d: &Nat) -> Option<Nat> {
        if d.0.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&d.0);
        if r.is_zero() {
            Some(Nat(q))
        } else {
            None
        }
    }

    pub(crate) fn from_biguint(v: BigUint) -> Nat {
        Nat(v)
    }

    /// The value as a signed big integer, for signed intermediate sums.
    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }
}

impl From<u64> for Nat {
    fn from(v: u64) -> Nat {
        Nat(BigUint::from(v))
    }
}

impl From<u32> for Nat {
    fn from(v: u32) -> Nat {
        Nat(BigUint::from(v))
    }
}

impl From<usize> for Nat {
    fn from(v: usize) -> Nat {
        Nat(BigUint::from(v))
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Nat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Nat, Error> {
        let v = BigUint::from_str(s)
            .map_err(|_| Error::Input(format!("not a nonnegative decimal integer: {s:?}")))?;
        Ok(Nat(v))
    }
}

impl std::ops::Add<&Nat> for &Nat {
    type Output = Nat;
    fn add(self, rhs: &Nat) -> Nat {
        Nat(&self.0 + &rhs.0)
    }
}

impl std::ops::Add for Nat {
    type Output = Nat;
    fn add(self, rhs: Nat) -> Nat {
        Nat(self.0 + rhs.0)
    }
}

impl std::ops::AddAssign<&Nat> for Nat {
    fn add_assign(&mut self, rhs: &Nat) {
        self.0 += &rhs.0;
    }
}

impl std::ops::Mul<&Nat> for &Nat {
    type Output = Nat;
    fn mul(self, rhs: &Nat) -> Nat {
        Nat(&self.0 * &rhs.0)
    }
}

impl std::ops::Mul for Nat {
    type Output = Nat;
    fn mul(self, rhs: Nat) -> Nat {
        Nat(self.0 * rhs.0)
    }
}

impl std::ops::MulAssign<&Nat> for Nat {
    fn mul_assign(&mut self, rhs: &Nat) {
        self.0 *= &rhs.0;
    }
}

/// Exact rational in canonical form: reduced, denominator positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    /// Canonical `num/den`; `den` must be nonzero.
    pub fn new(num: BigInt, den: BigInt) -> Result<Rat, Error> {
        if den.is_zero() {
            return Err(Error::Input("rational with zero denominator".into()));
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn from_integer(v: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_nat(v: &Nat) -> Rat {
        Rat(BigRational::from_integer(v.to_bigint()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<Nat> for Rat {
    fn from(v: Nat) -> Rat {
        Rat::from_nat(&v)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat, Error> {
        let s = s.trim();
        let bad = || Error::Input(format!("not an integer or p/q rational: {s:?}"));
        match s.split_once('/') {
            None => {
                let num = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rat(BigRational::from_integer(num)))
            }
            Some((p, q)) => {
                let num = BigInt::from_str(p).map_err(|_| bad())?;
                let den = BigInt::from_str(q).map_err(|_| bad())?;
                Rat::new(num, den)
            }
        }
    }
}

impl std::ops::Add<&Rat> for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        Rat(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub<&Rat> for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        Rat(&self.0 - &rhs.0)
    }
}

impl std::ops::Mul<&Rat> for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat(&self.0 * &rhs.0)
    }
}

impl std::ops::AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl std::ops::SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl std::ops::Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

/// n!, by the iterated recursion (n+1)! = (n+1) n!; 0! = 1.
pub fn factorial(n: u64) -> Nat {
    let mut acc = BigUint::one();
    for k in 2..=n.max(1) {
        acc *= k;
    }
    Nat(acc)
}

/// Exact base^exp with the empty-product convention 0^0 = 1.
pub fn power(base: &Nat, exp: u64) -> Nat {
    Nat(Pow::pow(&base.0, exp))
}

/// n(n-1)...(n-m+1): product of m descending factors; 1 when m = 0,
/// 0 when m > n.
pub fn falling_factorial(n: u64, m: u64) -> Nat {
    if m > n {
        return Nat::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..m {
        acc *= n - i;
    }
    Nat(acc)
}
