//! Finite set families and additive measures over an indexed universe.
//!
//! A [`SetFamily`] is a universe of `u` elements (indices `0..u`) together
//! with an ordered list of subsets stored as bitsets; subsets may be empty,
//! may repeat, and may equal the universe. A [`Measure`] assigns a
//! nonnegative exact rational weight to each universe element; the measure of
//! a subset is the sum of its members' weights, and the counting measure
//! (all weights 1) recovers plain cardinality.

use crate::exactnum::Rat;
use crate::Error;

/// Fixed-width bitset over universe indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    width: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(width: usize) -> BitSet {
        BitSet {
            width,
            words: vec![0; width.div_ceil(64)],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, idx: usize) {
        assert!(idx < self.width, "bit index {idx} out of width {}", self.width);
        self.words[idx / 64] |= 1 << (idx % 64);
    }

    pub fn contains(&self, idx: usize) -> bool {
        idx < self.width && self.words[idx / 64] & (1 << (idx % 64)) != 0
    }

    pub fn intersect_assign(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn union_assign(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    /// All bits set, i.e. the whole universe.
    pub fn full(width: usize) -> BitSet {
        let mut s = BitSet::empty(width);
        for i in 0..width {
            s.insert(i);
        }
        s
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(move |&i| self.contains(i))
    }
}

/// An ordered family of subsets of a common finite universe.
#[derive(Debug, Clone)]
pub struct SetFamily {
    universe: usize,
    sets: Vec<BitSet>,
}

impl SetFamily {
    /// Builds a family from explicit member lists; every index must be `< universe`.
    pub fn from_index_sets(universe: usize, sets: &[Vec<usize>]) -> Result<SetFamily, Error> {
        let mut out = Vec::with_capacity(sets.len());
        for (si, members) in sets.iter().enumerate() {
            let mut bits = BitSet::empty(universe);
            for &idx in members {
                if idx >= universe {
                    return Err(Error::Input(format!(
                        "set {si} contains index {idx}, universe size is {universe}"
                    )));
                }
                bits.insert(idx);
            }
            out.push(bits);
        }
        Ok(SetFamily {
            universe,
            sets: out,
        })
    }

    pub fn from_bitsets(universe: usize, sets: Vec<BitSet>) -> Result<SetFamily, Error> {
        for (si, s) in sets.iter().enumerate() {
            if s.width() != universe {
                return Err(Error::Input(format!(
                    "set {si} has width {}, universe size is {universe}",
                    s.width()
                )));
            }
        }
        Ok(SetFamily {
            universe,
            sets,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }
}

/// Per-element nonnegative weights over a universe.
#[derive(Debug, Clone)]
pub struct Measure {
    weights: Vec<Rat>,
}

impl Measure {
    /// Validates that every weight is nonnegative.
    pub fn new(weights: Vec<Rat>) -> Result<Measure, Error> {
        for (i, w) in weights.iter().enumerate() {
            if w.is_negative() {
                return Err(Error::Input(format!("weight of element {i} is negative: {w}")));
            }
        }
        Ok(Measure { weights })
    }

    /// Counting measure: weight 1 on each of `universe` elements.
    pub fn counting(universe: usize) -> Measure {
        Measure {
            weights: vec![Rat::one(); universe],
        }
    }

    pub fn universe_size(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// m(A) = sum of member weights; m(empty) = 0.
    pub fn of(&self, set: &BitSet) -> Rat {
        let mut acc = Rat::zero();
        for i in set.iter_members() {
            acc += &self.weights[i];
        }
        acc
    }

    /// m(X): total weight of the universe.
    pub fn total(&self) -> Rat {
        let mut acc = Rat::zero();
        for w in &self.weights {
            acc += w;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let mut s = BitSet::empty(70);
        s.insert(0);
        s.insert(69);
        assert!(s.contains(0) && s.contains(69) && !s.contains(33));
        assert_eq!(s.count_ones(), 2);
        assert_eq!(s.iter_members().collect::<Vec<_>>(), vec![0, 69]);
        assert_eq!(BitSet::full(70).count_ones(), 70);
    }

    #[test]
    fn family_rejects_out_of_range_index() {
        let err = SetFamily::from_index_sets(3, &[vec![0, 3]]);
        assert!(matches!(err, Err(Error::Input(_))));
    }

    #[test]
    fn measure_rejects_negative_weight() {
        let w = vec![Rat::one(), Rat::from_integer(-1)];
        assert!(matches!(Measure::new(w), Err(Error::Input(_))));
    }

    #[test]
    fn measure_of_set() {
        let fam = SetFamily::from_index_sets(4, &[vec![0, 1]]).unwrap();
        let m = Measure::new(vec![
            Rat::one(),
            "1/2".parse().unwrap(),
            "1/3".parse().unwrap(),
            "1/4".parse().unwrap(),
        ])
        .unwrap();
        assert_eq!(m.of(&fam.sets()[0]), "3/2".parse().unwrap());
        assert_eq!(m.total(), "25/12".parse().unwrap());
        assert_eq!(m.of(&BitSet::empty(4)), Rat::zero());
    }
}
