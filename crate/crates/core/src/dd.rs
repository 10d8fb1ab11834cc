//! Double-double arithmetic: unevaluated sums of two f64s giving ~106-bit
//! working precision, used to keep per-term rounding out of the Stirling
//! error term. Classical error-free transformations (two_sum, fma-based
//! two_prod) plus exp/ln on the extended values.

use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_diff(a: f64, b: f64) -> (f64, f64) {
    let s = a - b;
    let bb = s - a;
    (s, (a - (s - bb)) - (b + bb))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// ln 2 to double-double precision.
    pub const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.3190468138462996e-17,
    };

    /// 2*pi to double-double precision.
    pub const TWO_PI: Dd = Dd {
        hi: std::f64::consts::TAU,
        lo: 2.4492935982947064e-16,
    };

    pub fn from_f64(v: f64) -> Dd {
        Dd { hi: v, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, b: Dd) -> Dd {
        let (s1, mut s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        s2 += t1;
        let (s1, mut s2) = quick_two_sum(s1, s2);
        s2 += t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn sub(self, b: Dd) -> Dd {
        self.add(b.neg())
    }

    pub fn mul(self, b: Dd) -> Dd {
        let (p1, mut p2) = two_prod(self.hi, b.hi);
        p2 += self.hi * b.lo + self.lo * b.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p1, mut p2) = two_prod(self.hi, b);
        p2 += self.lo * b;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let (p1, p2) = two_prod(q1, b);
        let (s, mut e) = two_diff(self.hi, p1);
        e += self.lo;
        e -= p2;
        let q2 = (s + e) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }
}

/// 1/k! for k = 3..=25, built by successive exact-style division from 1/2!.
fn inv_factorials() -> &'static [Dd] {
    static TABLE: OnceLock<Vec<Dd>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut v = Vec::with_capacity(23);
        let mut cur = Dd::from_f64(0.5);
        for k in 3..=25u32 {
            cur = cur.div_f64(f64::from(k));
            v.push(cur);
        }
        v
    })
}

/// exp(a) in double-double: reduce by ln 2, Taylor-sum the remainder.
pub(crate) fn exp(a: Dd) -> Dd {
    let m = (a.hi / Dd::LN2.hi).round();
    let r = a.sub(Dd::LN2.mul_f64(m));
    let mut p = r.mul(r);
    let mut s = Dd::ONE.add(r).add(p.mul_f64(0.5));
    for &inv in inv_factorials() {
        p = p.mul(r);
        let term = p.mul(inv);
        s = s.add(term);
        if term.hi.abs() < 1e-35 {
            break;
        }
    }
    let scale = 2f64.powi(m as i32);
    Dd {
        hi: s.hi * scale,
        lo: s.lo * scale,
    }
}

/// ln(x) in double-double: one Newton refinement of the f64 logarithm,
/// ln x = y0 + (x e^(-y0) - 1) up to O(eps^2).
pub(crate) fn ln(x: Dd) -> Dd {
    debug_assert!(x.hi > 0.0);
    let y0 = x.hi.ln();
    let r = x.mul(exp(Dd::from_f64(-y0)));
    Dd::from_f64(y0).add(r.sub(Dd::ONE))
}
