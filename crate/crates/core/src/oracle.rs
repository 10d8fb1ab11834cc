//! Independent brute-force enumerators.
//!
//! Everything here counts by exhaustive generation and predicate checks;
//! none of it calls into the closed-form modules (`binomials`, `mapscount`,
//! `inclexcl`), so these are the reference values the closed forms are
//! tested against. Hard caps keep every enumeration in the seconds range.

use crate::exactnum::{Nat, Rat};
use crate::family::{BitSet, Measure, SetFamily};
use crate::{Error, Result};

/// Largest universe for the exhaustive subset scan (2^20 masks).
pub const MAX_SUBSET_UNIVERSE: u64 = 20;
/// Per-side cap for map enumeration: at most 8^8 ~ 1.7e7 maps.
pub const MAX_MAP_SIDE: u64 = 8;
/// Largest set size for partition enumeration.
pub const MAX_PARTITION_SIZE: u64 = 10;

/// Map predicate selector for [`enum_maps`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    All,
    Injective,
    Surjective,
    Bijective,
    Derangement,
}

/// Counts size-k subsets of an n-element set by scanning all 2^n bitmasks.
/// Zero for k outside 0..=n.
pub fn enum_subsets_k(n: u64, k: i64) -> Result<Nat> {
    if n > MAX_SUBSET_UNIVERSE {
        return Err(Error::Capacity(format!(
            "subset scan limited to n <= {MAX_SUBSET_UNIVERSE}, got {n}"
        )));
    }
    if k < 0 || k > n as i64 {
        return Ok(Nat::zero());
    }
    let mut count = 0u64;
    for mask in 0u64..(1 << n) {
        if i64::from(mask.count_ones()) == k {
            count += 1;
        }
    }
    Ok(Nat::from(count))
}

/// Counts maps from an m-element set to an n-element set satisfying `kind`,
/// by generating all n^m of them.
pub fn enum_maps(m: u64, n: u64, kind: MapKind) -> Result<Nat> {
    if m > MAX_MAP_SIDE || n > MAX_MAP_SIDE {
        return Err(Error::Capacity(format!(
            "map enumeration limited to m, n <= {MAX_MAP_SIDE}, got m = {m}, n = {n}"
        )));
    }
    if kind == MapKind::Derangement && m != n {
        return Err(Error::Input(format!(
            "derangements need a self-map: m = {m}, n = {n}"
        )));
    }
    let (m, n) = (m as usize, n as usize);
    if n == 0 {
        // No map out of a nonempty set; exactly the empty map otherwise.
        let count = if m == 0 { 1u64 } else { 0 };
        return Ok(Nat::from(count));
    }
    let mut image = vec![0usize; m];
    let mut count = 0u64;
    loop {
        if satisfies(&image, n, kind) {
            count += 1;
        }
        // Odometer increment over the n^m assignments.
        let mut pos = 0;
        loop {
            if pos == m {
                return Ok(Nat::from(count));
            }
            image[pos] += 1;
            if image[pos] < n {
                break;
            }
            image[pos] = 0;
            pos += 1;
        }
    }
}

fn satisfies(image: &[usize], n: usize, kind: MapKind) -> bool {
    match kind {
        MapKind::All => true,
        MapKind::Injective => {
            let mut seen = vec![false; n];
            image.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        }
        MapKind::Surjective => {
            let mut seen = vec![false; n];
            for &v in image {
                seen[v] = true;
            }
            seen.iter().all(|&s| s)
        }
        MapKind::Bijective => {
            image.len() == n && satisfies(image, n, MapKind::Injective)
        }
        MapKind::Derangement => {
            satisfies(image, n, MapKind::Bijective)
                && image.iter().enumerate().all(|(i, &v)| i != v)
        }
    }
}

/// Counts partitions of an n-element set into exactly p nonempty blocks by
/// enumerating restricted growth strings (canonical block labelings).
pub fn enum_partitions(n: u64, p: u64) -> Result<Nat> {
    if n > MAX_PARTITION_SIZE {
        return Err(Error::Capacity(format!(
            "partition enumeration limited to n <= {MAX_PARTITION_SIZE}, got {n}"
        )));
    }
    if n == 0 {
        let count = if p == 0 { 1u64 } else { 0 };
        return Ok(Nat::from(count));
    }
    let mut count = 0u64;
    let mut rgs = vec![0usize; n as usize];
    count_rgs(&mut rgs, 1, 1, p as usize, &mut count);
    Ok(Nat::from(count))
}

fn count_rgs(rgs: &mut [usize], pos: usize, blocks: usize, target: usize, count: &mut u64) {
    if pos == rgs.len() {
        if blocks == target {
            *count += 1;
        }
        return;
    }
    for label in 0..=blocks {
        rgs[pos] = label;
        let new_blocks = blocks.max(label + 1);
        count_rgs(rgs, pos + 1, new_blocks, target, count);
    }
}

fn check_universe(family: &SetFamily, measure: &Measure) -> Result<()> {
    if family.universe_size() != measure.universe_size() {
        return Err(Error::Input(format!(
            "family universe {} != measure universe {}",
            family.universe_size(),
            measure.universe_size()
        )));
    }
    Ok(())
}

/// m(A_1 ∪ ... ∪ A_n) computed literally: build the union, sum weights.
pub fn direct_union_measure(family: &SetFamily, measure: &Measure) -> Result<Rat> {
    check_universe(family, measure)?;
    let mut union = BitSet::empty(family.universe_size());
    for s in family.sets() {
        union.union_assign(s);
    }
    Ok(measure.of(&union))
}

/// Weight of the elements belonging to exactly p of the family's sets,
/// computed by per-element membership multiplicity.
pub fn direct_exactly_p_measure(family: &SetFamily, measure: &Measure, p: u64) -> Result<Rat> {
    check_universe(family, measure)?;
    if p > family.set_count() as u64 {
        return Err(Error::Input(format!(
            "p = {p} exceeds family size {}",
            family.set_count()
        )));
    }
    let mut acc = Rat::zero();
    for elem in 0..family.universe_size() {
        let multiplicity = family.sets().iter().filter(|s| s.contains(elem)).count() as u64;
        if multiplicity == p {
            acc += &measure.weights()[elem];
        }
    }
    Ok(acc)
}

/// Weight of the elements belonging to none of the family's sets.
pub fn direct_none_measure(family: &SetFamily, measure: &Measure) -> Result<Rat> {
    direct_exactly_p_measure(family, measure, 0)
}
