//! Ideals of a finite ring: generation, the full lattice, arithmetic,
//! principality, and transport along homomorphisms.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;
use std::time::Instant;

use crate::bitset::Bitset;
use crate::hom::RingHom;
use crate::par;
use crate::report::{Witness, WitnessReport};
use crate::ring::FiniteRing;
use crate::{Error, Result};

#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Ideal(<{}> = {:?} in {})",
            self.generators
                .iter()
                .map(|&g| self.ring.element_name(g).to_string())
                .collect::<Vec<_>>()
                .join(", "),
            self.elements,
            self.ring.desc()
        )
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.elements == other.elements
    }
}
impl Eq for Ideal {}

impl Ideal {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        false // an ideal always contains 0
    }
    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }
    pub fn is_whole_ring(&self) -> bool {
        self.elements.len() == self.ring.order()
    }
    pub fn is_proper(&self) -> bool {
        !self.is_whole_ring()
    }
    pub fn element_set(&self) -> Bitset {
        Bitset::from_indices(self.ring.order(), self.elements.iter().copied())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// `(len, elements)` ordering: the canonical order used everywhere a
    /// deterministic "least" ideal is reported.
    pub fn canonical_cmp(&self, other: &Ideal) -> Ordering {
        (self.elements.len(), &self.elements).cmp(&(other.elements.len(), &other.elements))
    }
}

/// Closure of `gens` under addition and ambient multiplication. Empty
/// generators give the zero ideal.
pub fn ideal_generated_by(ring: &Arc<FiniteRing>, gens: &[usize]) -> Result<Ideal> {
    for &g in gens {
        if g >= ring.order() {
            return Err(Error::BadIndex {
                index: g,
                order: ring.order(),
            });
        }
    }
    let set = close_ideal(ring, gens);
    let mut generators = gens.to_vec();
    generators.dedup();
    Ok(Ideal {
        ring: Arc::clone(ring),
        elements: set.to_vec(),
        generators,
    })
}

fn close_ideal(ring: &FiniteRing, gens: &[usize]) -> Bitset {
    let mut set = Bitset::new(ring.order());
    set.insert(ring.zero());
    let mut frontier = vec![ring.zero()];
    for &g in gens {
        if set.insert(g) {
            frontier.push(g);
        }
    }
    while let Some(x) = frontier.pop() {
        for r in 0..ring.order() {
            let rx = ring.mul(r, x);
            if set.insert(rx) {
                frontier.push(rx);
            }
        }
        for y in set.to_vec() {
            let s = ring.add(x, y);
            if set.insert(s) {
                frontier.push(s);
            }
        }
    }
    set
}

/// Wrap an element set that is claimed to be an ideal; closure under
/// addition and ambient multiplication is verified and generators are
/// recomputed minimally.
pub fn ideal_from_elements(
    ring: &Arc<FiniteRing>,
    elements: impl IntoIterator<Item = usize>,
) -> Result<Ideal> {
    let set = Bitset::from_indices(ring.order(), elements);
    if !set.contains(ring.zero()) {
        return Err(Error::NotAnIdeal("missing 0"));
    }
    let members = set.to_vec();
    for &x in &members {
        for &y in &members {
            if !set.contains(ring.add(x, y)) {
                return Err(Error::NotAnIdeal("not closed under addition"));
            }
        }
        for r in 0..ring.order() {
            if !set.contains(ring.mul(r, x)) {
                return Err(Error::NotAnIdeal("not closed under ambient multiplication"));
            }
        }
    }
    let generators = minimize_generators(ring, &set);
    Ok(Ideal {
        ring: Arc::clone(ring),
        elements: members,
        generators,
    })
}

/// A small generating list for an ideal given as an element set. Singletons
/// and pairs are tried exhaustively (so 1- and 2-generated ideals are
/// labeled exactly); beyond that a greedy cover is used.
pub fn minimize_generators(ring: &Arc<FiniteRing>, set: &Bitset) -> Vec<usize> {
    let members = set.to_vec();
    if members.len() == 1 {
        return Vec::new();
    }
    for &a in &members {
        if ring.multiples(a) == *set {
            return vec![a];
        }
    }
    let principal: Vec<Bitset> = members.iter().map(|&a| ring.multiples(a)).collect();
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate().skip(i + 1) {
            // Ra + Rb is already closed: it is the set of pairwise sums.
            let mut sum = Bitset::new(ring.order());
            for x in principal[i].iter() {
                for y in principal[j].iter() {
                    sum.insert(ring.add(x, y));
                }
            }
            if sum == *set {
                return vec![a, b];
            }
        }
    }
    // Greedy cover for >= 3 generators.
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = Bitset::new(ring.order());
    covered.insert(ring.zero());
    for &x in &members {
        if !covered.contains(x) {
            gens.push(x);
            covered = close_ideal(ring, &gens);
            if covered == *set {
                break;
            }
        }
    }
    gens
}

/// The complete ideal lattice: all principal ideals closed under pairwise
/// sums, in canonical order, each with a minimized generator list.
pub fn all_ideals(ring: &Arc<FiniteRing>) -> Vec<Ideal> {
    let order = ring.order();
    let mut seen: HashSet<Bitset> = HashSet::new();
    let mut sets: Vec<Bitset> = Vec::new();
    for a in 0..order {
        let m = ring.multiples(a);
        if seen.insert(m.clone()) {
            sets.push(m);
        }
    }
    let mut frontier: Vec<usize> = (0..sets.len()).collect();
    while let Some(i) = frontier.pop() {
        for j in 0..sets.len() {
            let mut sum = Bitset::new(order);
            for x in sets[i].iter() {
                for y in sets[j].iter() {
                    sum.insert(ring.add(x, y));
                }
            }
            if seen.insert(sum.clone()) {
                sets.push(sum);
                frontier.push(sets.len() - 1);
            }
        }
    }
    sets.sort_by(|a, b| (a.len(), a.to_vec()).cmp(&(b.len(), b.to_vec())));
    let ideals: Vec<Ideal> = par::map_collect(&sets, |set| Ideal {
        ring: Arc::clone(ring),
        elements: set.to_vec(),
        generators: minimize_generators(ring, set),
    });
    ideals
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineKind {
    Sum,
    Product,
    Intersection,
}

pub fn combine(left: &Ideal, right: &Ideal, kind: CombineKind) -> Result<Ideal> {
    if left.ring.id() != right.ring.id() {
        return Err(Error::RingMismatch);
    }
    let ring = &left.ring;
    match kind {
        CombineKind::Sum => {
            let mut gens = left.generators.clone();
            gens.extend(&right.generators);
            gens.dedup();
            ideal_generated_by(ring, &gens)
        }
        CombineKind::Product => {
            let mut gens = Vec::new();
            for &a in &left.generators {
                for &b in &right.generators {
                    gens.push(ring.mul(a, b));
                }
            }
            gens.sort_unstable();
            gens.dedup();
            ideal_generated_by(ring, &gens)
        }
        CombineKind::Intersection => {
            let set = left.element_set().intersection(&right.element_set());
            let generators = minimize_generators(ring, &set);
            Ok(Ideal {
                ring: Arc::clone(ring),
                elements: set.to_vec(),
                generators,
            })
        }
    }
}

/// Scan for a single generator: `Ra = I` for some `a ∈ I`.
pub fn is_principal(ideal: &Ideal) -> WitnessReport {
    let start = Instant::now();
    let ring = &ideal.ring;
    let target = ideal.element_set();
    for &a in &ideal.elements {
        if ring.multiples(a) == target {
            return WitnessReport::found(Witness::Principal { a })
                .with_elapsed(start.elapsed());
        }
    }
    WitnessReport::exhausted_false(ideal.len() as u64).with_elapsed(start.elapsed())
}

/// Extension `I^e`: the ideal of the target generated by the images of the
/// generators.
pub fn extend(ideal: &Ideal, f: &RingHom) -> Result<Ideal> {
    if ideal.ring.id() != f.source().id() {
        return Err(Error::RingMismatch);
    }
    let image_gens: Vec<usize> = ideal.generators.iter().map(|&g| f.apply(g)).collect();
    ideal_generated_by(f.target(), &image_gens)
}

/// Contraction `J^c = { a : f(a) ∈ J }`; always an ideal.
pub fn contract(ideal: &Ideal, f: &RingHom) -> Result<Ideal> {
    if ideal.ring.id() != f.target().id() {
        return Err(Error::RingMismatch);
    }
    let source = f.source();
    let preimage: Vec<usize> =
        (0..source.order()).filter(|&a| ideal.contains(f.apply(a))).collect();
    ideal_from_elements(source, preimage)
}

/// Exhaustive primality: proper, and `xy ∈ P` forces `x ∈ P` or `y ∈ P`.
pub fn is_prime_ideal(ideal: &Ideal) -> bool {
    if ideal.is_whole_ring() {
        return false;
    }
    let ring = &ideal.ring;
    let set = ideal.element_set();
    par::all_indices(ring.order(), |x| {
        if set.contains(x) {
            return true;
        }
        (0..ring.order()).all(|y| set.contains(y) || !set.contains(ring.mul(x, y)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::reduction_hom;
    use crate::ring::make_zmod;

    #[test]
    fn principal_ideal_in_zmod12() {
        let r = make_zmod(12).unwrap();
        let i = ideal_generated_by(&r, &[8]).unwrap();
        assert_eq!(i.elements(), &[0, 4, 8]); // gcd(8,12) = 4
    }

    #[test]
    fn empty_generators_give_zero_ideal() {
        let r = make_zmod(7).unwrap();
        let i = ideal_generated_by(&r, &[]).unwrap();
        assert_eq!(i.elements(), &[0]);
        assert!(i.is_zero());
        assert!(i.generators().is_empty());
    }

    #[test]
    fn coprime_generators_give_whole_ring() {
        let r = make_zmod(12).unwrap();
        let i = ideal_generated_by(&r, &[3, 4]).unwrap();
        assert_eq!(i.len(), 12);
    }

    fn divisor_count(n: u64) -> usize {
        (1..=n).filter(|d| n % d == 0).count()
    }

    #[test]
    fn zmod_lattice_sizes_match_divisor_oracle() {
        for n in 2..=64u64 {
            let r = make_zmod(n).unwrap();
            assert_eq!(
                all_ideals(&r).len(),
                divisor_count(n),
                "ideal count of zmod({n})"
            );
        }
    }

    #[test]
    fn field_has_two_ideals() {
        let gf4 = crate::ring::make_gf(2, 2).unwrap();
        assert_eq!(all_ideals(&gf4).len(), 2);
    }

    #[test]
    fn lattice_members_satisfy_invariants() {
        let r = make_zmod(24).unwrap();
        let lattice = all_ideals(&r);
        assert!(lattice.iter().any(|i| i.is_zero()));
        assert!(lattice.iter().any(|i| i.is_whole_ring()));
        for ideal in &lattice {
            // re-generating from the element set reproduces the ideal
            let regen = ideal_generated_by(&r, ideal.elements()).unwrap();
            assert_eq!(regen.elements(), ideal.elements());
            // and from the recorded generator list as well
            let from_gens = ideal_generated_by(&r, ideal.generators()).unwrap();
            assert_eq!(from_gens.elements(), ideal.elements());
            // closure invariants
            assert!(ideal_from_elements(&r, ideal.elements().iter().copied()).is_ok());
        }
        // duplicate-free
        for (i, a) in lattice.iter().enumerate() {
            for b in &lattice[i + 1..] {
                assert_ne!(a.elements(), b.elements());
            }
        }
    }

    #[test]
    fn combine_examples() {
        let r = make_zmod(12).unwrap();
        let four = ideal_generated_by(&r, &[4]).unwrap();
        let six = ideal_generated_by(&r, &[6]).unwrap();
        let zero = ideal_generated_by(&r, &[]).unwrap();

        let sum = combine(&four, &zero, CombineKind::Sum).unwrap();
        assert_eq!(sum.elements(), four.elements());

        let product = combine(&four, &six, CombineKind::Product).unwrap();
        assert_eq!(product.elements(), &[0]); // 24 = 0 mod 12

        let meet = combine(&four, &six, CombineKind::Intersection).unwrap();
        assert_eq!(meet.elements(), &[0]); // {0,4,8} ∩ {0,6}
    }

    #[test]
    fn residue_rings_are_principal_ideal_rings() {
        let r = make_zmod(30).unwrap();
        for ideal in all_ideals(&r) {
            let rep = is_principal(&ideal);
            assert!(rep.is_true(), "{ideal:?} should be principal");
        }
    }

    #[test]
    fn zero_ideal_is_principal_with_zero_witness() {
        let r = make_zmod(9).unwrap();
        let z = ideal_generated_by(&r, &[]).unwrap();
        let rep = is_principal(&z);
        assert!(rep.is_true());
        assert_eq!(rep.witness, Some(Witness::Principal { a: 0 }));
    }

    #[test]
    fn extend_and_contract_along_reduction() {
        let a = make_zmod(12).unwrap();
        let b = make_zmod(4).unwrap();
        let f = reduction_hom(&a, &b).unwrap();

        let two_b = ideal_generated_by(&b, &[2]).unwrap();
        let pulled = contract(&two_b, &f).unwrap();
        assert_eq!(pulled.elements(), &[0, 2, 4, 6, 8, 10]);

        let zero_a = ideal_generated_by(&a, &[]).unwrap();
        assert!(extend(&zero_a, &f).unwrap().is_zero());

        // surjective: extend(contract(J)) = J for every ideal of the target
        for j in all_ideals(&b) {
            let back = extend(&contract(&j, &f).unwrap(), &f).unwrap();
            assert_eq!(back.elements(), j.elements());
        }
    }

    #[test]
    fn contraction_is_always_an_ideal_and_extension_is_smallest() {
        let a = make_zmod(12).unwrap();
        let b = make_zmod(6).unwrap();
        let f = reduction_hom(&a, &b).unwrap();
        for i in all_ideals(&a) {
            let ext = extend(&i, &f).unwrap();
            // extension is contained in every ideal containing the image
            let image: Vec<usize> = i.elements().iter().map(|&x| f.apply(x)).collect();
            for j in all_ideals(&b) {
                if image.iter().all(|&x| j.contains(x)) {
                    assert!(ext.is_subset_of(&j));
                }
            }
        }
    }

    #[test]
    fn primality_scan() {
        let r = make_zmod(12).unwrap();
        let two = ideal_generated_by(&r, &[2]).unwrap();
        let three = ideal_generated_by(&r, &[3]).unwrap();
        let four = ideal_generated_by(&r, &[4]).unwrap();
        assert!(is_prime_ideal(&two));
        assert!(is_prime_ideal(&three));
        assert!(!is_prime_ideal(&four)); // 2*2 = 4 but 2 not in (4)
        let whole = ideal_generated_by(&r, &[1]).unwrap();
        assert!(!is_prime_ideal(&whole));
    }
}
