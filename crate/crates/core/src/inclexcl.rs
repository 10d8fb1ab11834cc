//! Weighted inclusion-exclusion over explicit set families: union measure,
//! Sylvester's formula in both stated forms, and the Sieve formula.
//!
//! All four operations walk the 2^n index subsets of the family as bitmasks
//! in increasing numeric order; the family size is capped at
//! [`MAX_FAMILY_SETS`] because the formulas are inherently exponential.
//! Results are exact rationals.

use crate::binomials::binomial;
use crate::exactnum::Rat;
use crate::family::{BitSet, Measure, SetFamily};
use crate::{Error, Result};

/// Hard cap on the number of subsets in a family (2^n index subsets).
pub const MAX_FAMILY_SETS: usize = 20;

fn validate(family: &SetFamily, measure: &Measure) -> Result<()> {
    if family.universe_size() != measure.universe_size() {
        return Err(Error::Input(format!(
            "family universe {} != measure universe {}",
            family.universe_size(),
            measure.universe_size()
        )));
    }
    if family.set_count() > MAX_FAMILY_SETS {
        return Err(Error::Capacity(format!(
            "inclusion-exclusion limited to {MAX_FAMILY_SETS} sets, family has {}",
            family.set_count()
        )));
    }
    Ok(())
}

/// Measure of the intersection over the sets selected by `mask`; the empty
/// selection intersects to the whole universe.
fn intersection_measure(family: &SetFamily, measure: &Measure, mask: u32) -> Rat {
    let mut inter = BitSet::full(family.universe_size());
    for (i, set) in family.sets().iter().enumerate() {
        if mask & (1 << i) != 0 {
            inter.intersect_assign(set);
        }
    }
    measure.of(&inter)
}

/// m(A_1 ∪ ... ∪ A_n) by inclusion-exclusion: the alternating sum of
/// intersection measures over all nonempty index subsets.
pub fn ie_union(family: &SetFamily, measure: &Measure) -> Result<Rat> {
    validate(family, measure)?;
    let n = family.set_count();
    let mut acc = Rat::zero();
    for mask in 1u32..(1u32 << n) {
        let m = intersection_measure(family, measure, mask);
        if mask.count_ones() % 2 == 1 {
            acc += &m;
        } else {
            acc -= &m;
        }
    }
    Ok(acc)
}

/// Measure of the elements lying in none of the sets:
/// m(X) + sum over nonempty I of (-1)^|I| m(intersection over I).
pub fn sylvester(family: &SetFamily, measure: &Measure) -> Result<Rat> {
    validate(family, measure)?;
    let n = family.set_count();
    let mut acc = measure.total();
    for mask in 1u32..(1u32 << n) {
        let m = intersection_measure(family, measure, mask);
        if mask.count_ones() % 2 == 1 {
            acc -= &m;
        } else {
            acc += &m;
        }
    }
    Ok(acc)
}

/// Sylvester's formula with the index subsets regrouped by cardinality,
/// the empty intersection taken as the whole universe.
pub fn sylvester_grouped(family: &SetFamily, measure: &Measure) -> Result<Rat> {
    validate(family, measure)?;
    let n = family.set_count();
    let layer_sums = sums_by_cardinality(family, measure);
    let mut acc = Rat::zero();
    for (k, layer) in layer_sums.iter().enumerate().take(n + 1) {
        if k % 2 == 0 {
            acc += layer;
        } else {
            acc -= layer;
        }
    }
    Ok(acc)
}

/// Measure of the elements lying in exactly p of the sets:
/// T^p_n = sum_{k=p}^{n} (-1)^(k-p) C(k,p) sum_{|I|=k} m(intersection).
pub fn sieve(family: &SetFamily, measure: &Measure, p: u64) -> Result<Rat> {
    validate(family, measure)?;
    let n = family.set_count();
    if p > n as u64 {
        return Err(Error::Input(format!(
            "sieve multiplicity p = {p} exceeds family size {n}"
        )));
    }
    let layer_sums = sums_by_cardinality(family, measure);
    let mut acc = Rat::zero();
    for k in p..=(n as u64) {
        let coeff = Rat::from_nat(&binomial(k, p as i64));
        let term = &coeff * &layer_sums[k as usize];
        if (k - p).is_multiple_of(2) {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    Ok(acc)
}

/// For each k, the sum of m(intersection over I) across all |I| = k;
/// index k = 0 holds m(X).
fn sums_by_cardinality(family: &SetFamily, measure: &Measure) -> Vec<Rat> {
    let n = family.set_count();
    let mut sums = vec![Rat::zero(); n + 1];
    for mask in 0u32..(1u32 << n) {
        let k = mask.count_ones() as usize;
        let m = intersection_measure(family, measure, mask);
        sums[k] += &m;
    }
    sums
}
