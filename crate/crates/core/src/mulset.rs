//! Multiplicatively closed subsets.
//!
//! Closures always adjoin 1. Zero is allowed in but flagged: a set containing
//! 0 absorbs every S-property, and reports built from it carry a degeneracy
//! flag.

use std::fmt;
use std::sync::Arc;

use crate::bitset::Bitset;
use crate::ring::FiniteRing;
use crate::{Error, Result};

#[derive(Clone)]
pub struct MultiplicativeSet {
    ring: Arc<FiniteRing>,
    elements: Vec<usize>,
    generators: Vec<usize>,
    contains_zero: bool,
    all_units: bool,
}

impl fmt::Debug for MultiplicativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiplicativeSet({:?} in {})", self.elements, self.ring.desc())
    }
}

impl MultiplicativeSet {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn contains_zero(&self) -> bool {
        self.contains_zero
    }
    pub fn all_units(&self) -> bool {
        self.all_units
    }
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &MultiplicativeSet) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    fn finish(ring: &Arc<FiniteRing>, set: Bitset, generators: Vec<usize>) -> MultiplicativeSet {
        let elements = set.to_vec();
        let contains_zero = set.contains(ring.zero());
        let all_units = set.is_subset(ring.units_set());
        MultiplicativeSet {
            ring: Arc::clone(ring),
            elements,
            generators,
            contains_zero,
            all_units,
        }
    }
}

/// The multiplicative closure of `gens ∪ {1}`.
pub fn make_mult_set(ring: &Arc<FiniteRing>, gens: &[usize]) -> Result<MultiplicativeSet> {
    for &g in gens {
        if g >= ring.order() {
            return Err(Error::BadIndex {
                index: g,
                order: ring.order(),
            });
        }
    }
    let mut set = Bitset::new(ring.order());
    set.insert(ring.one());
    let mut frontier: Vec<usize> = vec![ring.one()];
    for &g in gens {
        if set.insert(g) {
            frontier.push(g);
        }
    }
    // Worklist closure under products with everything already present.
    while let Some(x) = frontier.pop() {
        let current = set.to_vec();
        for y in current {
            let p = ring.mul(x, y);
            if set.insert(p) {
                frontier.push(p);
            }
        }
    }
    let mut generators: Vec<usize> = gens.to_vec();
    generators.dedup();
    Ok(MultiplicativeSet::finish(ring, set, generators))
}

/// Wrap a set that is already multiplicatively closed (e.g. the complement
/// of a prime, or a lifted set from a construction). Closedness and `1 ∈ S`
/// are verified.
pub fn mult_set_from_closed(
    ring: &Arc<FiniteRing>,
    elements: impl IntoIterator<Item = usize>,
    generators: Vec<usize>,
) -> Result<MultiplicativeSet> {
    let mut set = Bitset::new(ring.order());
    for x in elements {
        if x >= ring.order() {
            return Err(Error::BadIndex {
                index: x,
                order: ring.order(),
            });
        }
        set.insert(x);
    }
    if !set.contains(ring.one()) {
        return Err(Error::NotMultiplicativelyClosed);
    }
    let members = set.to_vec();
    for &x in &members {
        for &y in &members {
            if !set.contains(ring.mul(x, y)) {
                return Err(Error::NotMultiplicativelyClosed);
            }
        }
    }
    Ok(MultiplicativeSet::finish(ring, set, generators))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    #[test]
    fn closure_of_two_in_zmod12() {
        let r = make_zmod(12).unwrap();
        let s = make_mult_set(&r, &[2]).unwrap();
        assert_eq!(s.elements(), &[1, 2, 4, 8]);
        assert!(!s.contains_zero());
        assert!(!s.all_units());
    }

    #[test]
    fn empty_generators_give_one() {
        let r = make_zmod(9).unwrap();
        let s = make_mult_set(&r, &[]).unwrap();
        assert_eq!(s.elements(), &[1]);
        assert!(s.all_units());
    }

    #[test]
    fn nilpotent_generator_pulls_in_zero() {
        let r = make_zmod(4).unwrap();
        let s = make_mult_set(&r, &[2]).unwrap();
        assert_eq!(s.elements(), &[0, 1, 2]);
        assert!(s.contains_zero());
    }

    #[test]
    fn closed_wrapper_rejects_open_sets() {
        let r = make_zmod(12).unwrap();
        assert!(mult_set_from_closed(&r, [1, 2], vec![2]).is_err()); // missing 4
        assert!(mult_set_from_closed(&r, [2, 4, 8], vec![2]).is_err()); // missing 1
        assert!(mult_set_from_closed(&r, [1, 2, 4, 8], vec![2]).is_ok());
    }
}
