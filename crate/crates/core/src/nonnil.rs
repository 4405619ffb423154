//! Nilradical machinery, divided primes, phi-rings, and the nonnil
//! S-Bézout and chained-ring deciders.

use std::sync::Arc;
use std::time::Instant;

use crate::construct::{localize, quotient_ring, Localization, QuotientRing};
use crate::deciders::{complement_of_prime, is_s_bezout, is_s_principal, SBezoutMode};
use crate::hom::RingHom;
use crate::ideal::{all_ideals, ideal_from_elements, is_prime_ideal, Ideal};
use crate::mulset::{mult_set_from_closed, MultiplicativeSet};
use crate::par;
use crate::report::{
    Counterexample, Witness, WitnessReport, FLAG_NONNIL_CHAINED_DEF,
};
use crate::ring::FiniteRing;
use crate::{Error, Result};

/// The ideal of nilpotent elements.
pub fn nilradical(ring: &Arc<FiniteRing>) -> Ideal {
    let nilpotents: Vec<usize> = (0..ring.order())
        .filter(|&x| {
            let mut p = x;
            for _ in 0..ring.order() {
                if p == ring.zero() {
                    return true;
                }
                p = ring.mul(p, x);
            }
            p == ring.zero()
        })
        .collect();
    ideal_from_elements(ring, nilpotents).expect("nilpotents form an ideal in a commutative ring")
}

/// The zero divisors `Z(R) = { x : xy = 0 for some y ≠ 0 }` (0 included).
pub fn zero_divisors(ring: &Arc<FiniteRing>) -> Vec<usize> {
    (0..ring.order())
        .filter(|&x| {
            (0..ring.order()).any(|y| y != ring.zero() && ring.mul(x, y) == ring.zero())
        })
        .collect()
}

/// Divided prime: `P` prime and `P ⊆ (x)` for every `x ∉ P`.
pub fn is_divided_prime(ring: &Arc<FiniteRing>, p: &Ideal) -> Result<bool> {
    if p.ring().id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    if !is_prime_ideal(p) {
        return Ok(false);
    }
    let pset = p.element_set();
    Ok(par::all_indices(ring.order(), |x| {
        if pset.contains(x) {
            return true;
        }
        pset.is_subset(&ring.multiples(x))
    }))
}

pub fn is_phi_ring(ring: &Arc<FiniteRing>) -> bool {
    let nil = nilradical(ring);
    is_divided_prime(ring, &nil).expect("same ring")
}

#[derive(Debug)]
pub struct PhiRingAnalysis {
    pub nilradical: Ideal,
    pub is_phi: bool,
    pub zero_divisors: Vec<usize>,
    /// `(phi(R), R -> phi(R))` when the ring is a phi-ring.
    pub phi_image: Option<(Arc<FiniteRing>, RingHom)>,
}

/// Full phi analysis: nilradical, zero divisors, and when `Nil(R)` is a
/// divided prime the image of `R` in `R_{Nil(R)}`.
pub fn analyze_phi(ring: &Arc<FiniteRing>) -> Result<PhiRingAnalysis> {
    let nil = nilradical(ring);
    let zd = zero_divisors(ring);
    let is_phi = is_divided_prime(ring, &nil)?;
    let phi_image = if is_phi {
        Some(phi_image(ring)?)
    } else {
        None
    };
    Ok(PhiRingAnalysis {
        nilradical: nil,
        is_phi,
        zero_divisors: zd,
        phi_image,
    })
}

/// `phi(R)`: the image of `R` in `K = R_{Nil(R)}`, together with the map.
/// For a finite ring the localization map is onto, so the image is all of
/// `K`. Verifies `Nil(phi(R)) = Z(phi(R))`.
pub fn phi_image(ring: &Arc<FiniteRing>) -> Result<(Arc<FiniteRing>, RingHom)> {
    let nil = nilradical(ring);
    if !is_divided_prime(ring, &nil)? {
        return Err(Error::NotPhiRing);
    }
    let s = complement_of_prime(&nil)?;
    match localize(ring, &s)? {
        Localization::Ring { ring: k, hom, .. } => {
            let nil_k = nilradical(&k);
            let zd_k = zero_divisors(&k);
            assert_eq!(
                nil_k.elements(),
                zd_k.as_slice(),
                "phi image must have Nil = Z"
            );
            Ok((k, hom))
        }
        Localization::Zero => unreachable!("0 is nilpotent, never in the complement of Nil"),
    }
}

fn nonnil_ideals<'a>(lattice: &'a [Ideal], nil: &Ideal) -> Vec<&'a Ideal> {
    lattice
        .iter()
        .filter(|i| !i.is_subset_of(nil))
        .collect()
}

/// Nonnil S-Bézout: among finitely generated nonnil ideals, S-principality
/// descends from an ideal to each nonnil subideal. Requires a phi-ring.
pub fn is_nonnil_s_bezout(
    ring: &Arc<FiniteRing>,
    s: &MultiplicativeSet,
) -> Result<WitnessReport> {
    if s.ring().id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    let start = Instant::now();
    let nil = nilradical(ring);
    if !is_divided_prime(ring, &nil)? {
        return Err(Error::NotPhiRing);
    }
    let lattice = all_ideals(ring);
    let nonnil = nonnil_ideals(&lattice, &nil);
    // Every nonnil ideal of a phi-ring contains the nilradical.
    debug_assert!(nonnil.iter().all(|i| nil.is_subset_of(i)));
    let pairs: Vec<(usize, usize)> = (0..nonnil.len())
        .flat_map(|i| (0..nonnil.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && nonnil[i].is_subset_of(nonnil[j]))
        .collect();
    let offending = par::position_first(&pairs, |&(i, j)| {
        let outer_sp = s_principal_quiet(nonnil[j], s);
        outer_sp && !s_principal_quiet(nonnil[i], s)
    });
    let report = match offending {
        Some(pos) => {
            let (i, j) = pairs[pos];
            WitnessReport::refuted(Counterexample::IdealPair {
                inner_generators: nonnil[i].generators().to_vec(),
                outer_generators: nonnil[j].generators().to_vec(),
            })
        }
        None => WitnessReport::found(Witness::Exhausted {
            checked: pairs.len() as u64,
        }),
    };
    Ok(report.with_elapsed(start.elapsed()))
}

fn s_principal_quiet(ideal: &Ideal, s: &MultiplicativeSet) -> bool {
    is_s_principal(ideal, s).map(|r| r.is_true()).unwrap_or(false)
}

/// The characterization route: build `R/Nil(R)` and `S' = S/Nil(R)`, then
/// test "domain and S'-Bézout".
pub fn quotient_by_nil_check(ring: &Arc<FiniteRing>, s: &MultiplicativeSet) -> Result<bool> {
    if s.ring().id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    let nil = nilradical(ring);
    if !is_divided_prime(ring, &nil)? {
        return Err(Error::NotPhiRing);
    }
    let QuotientRing { ring: q, projection } = quotient_ring(ring, &nil)?;
    let s_prime = crate::construct::image_mult_set(&projection, s)?;
    // domain: no nonzero zero divisors; checked, not assumed
    let is_domain = (0..q.order()).all(|x| {
        x == q.zero()
            || (0..q.order()).all(|y| y == q.zero() || q.mul(x, y) != q.zero())
    });
    if !is_domain {
        return Ok(false);
    }
    Ok(is_s_bezout(&q, &s_prime, SBezoutMode::AllIdeals)?.is_true())
}

/// Chained: the ideal lattice is totally ordered by inclusion.
pub fn is_chained(ring: &Arc<FiniteRing>) -> WitnessReport {
    let start = Instant::now();
    let lattice = all_ideals(ring);
    incomparability_scan(&lattice.iter().collect::<Vec<_>>())
        .with_elapsed(start.elapsed())
}

/// Nonnil chained: every two nonnil ideals are comparable. The definition
/// comes from the cited literature, not this artifact's source theory, so
/// reports are flagged.
pub fn is_nonnil_chained(ring: &Arc<FiniteRing>) -> WitnessReport {
    let start = Instant::now();
    let nil = nilradical(ring);
    let lattice = all_ideals(ring);
    let nonnil = nonnil_ideals(&lattice, &nil);
    incomparability_scan(&nonnil)
        .with_flag(FLAG_NONNIL_CHAINED_DEF)
        .with_elapsed(start.elapsed())
}

fn incomparability_scan(ideals: &[&Ideal]) -> WitnessReport {
    let pairs: Vec<(usize, usize)> = (0..ideals.len())
        .flat_map(|i| (i + 1..ideals.len()).map(move |j| (i, j)))
        .collect();
    match par::position_first(&pairs, |&(i, j)| {
        !ideals[i].is_subset_of(ideals[j]) && !ideals[j].is_subset_of(ideals[i])
    }) {
        Some(pos) => {
            let (i, j) = pairs[pos];
            WitnessReport::refuted(Counterexample::Incomparable {
                left_generators: ideals[i].generators().to_vec(),
                right_generators: ideals[j].generators().to_vec(),
            })
        }
        None => WitnessReport::found(Witness::Exhausted {
            checked: pairs.len() as u64,
        }),
    }
}

/// All prime ideals, by exhaustive scan of the lattice.
pub fn primes(ring: &Arc<FiniteRing>) -> Vec<Ideal> {
    all_ideals(ring)
        .into_iter()
        .filter(is_prime_ideal)
        .collect()
}

/// Maximal ideals: proper ideals with no proper ideal strictly above.
pub fn maximal_ideals(ring: &Arc<FiniteRing>) -> Vec<Ideal> {
    let lattice = all_ideals(ring);
    lattice
        .iter()
        .filter(|i| i.is_proper())
        .filter(|i| {
            !lattice
                .iter()
                .any(|j| j.is_proper() && i.is_subset_of(j) && j.len() > i.len())
        })
        .cloned()
        .collect()
}

/// Localize at a prime: `R_P = (R − P)^{-1} R`.
pub fn localize_at_prime(ring: &Arc<FiniteRing>, p: &Ideal) -> Result<(Arc<FiniteRing>, RingHom)> {
    if p.ring().id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    let s = complement_of_prime(p)?;
    match localize(ring, &s)? {
        Localization::Ring { ring, hom, .. } => Ok((ring, hom)),
        Localization::Zero => unreachable!("complement of a prime avoids 0"),
    }
}

/// `R − P` wrapped as a multiplicative set (verified prime).
pub fn prime_complement(p: &Ideal) -> Result<MultiplicativeSet> {
    complement_of_prime(p)
}

/// `S' = S/Nil(R)` together with the quotient it lives on.
pub fn nil_quotient_with_set(
    ring: &Arc<FiniteRing>,
    s: &MultiplicativeSet,
) -> Result<(QuotientRing, MultiplicativeSet)> {
    let nil = nilradical(ring);
    let q = quotient_ring(ring, &nil)?;
    let s_prime = q.project_mult_set(s)?;
    Ok((q, s_prime))
}

/// Lift helper used by the final-theorem equivalence: check that the residue
/// image of a prime's complement is still closed (it always is; kept as a
/// verification point for the harness).
pub fn complement_set_of(ring: &Arc<FiniteRing>, p: &Ideal) -> Result<MultiplicativeSet> {
    if p.ring().id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    let complement: Vec<usize> = (0..ring.order()).filter(|&x| !p.contains(x)).collect();
    mult_set_from_closed(ring, complement.iter().copied(), complement.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::trivial_extension;
    use crate::ideal::ideal_generated_by;
    use crate::modules::make_free_module;
    use crate::mulset::make_mult_set;
    use crate::ring::{make_gf, make_zmod};

    #[test]
    fn nilradicals() {
        assert_eq!(nilradical(&make_zmod(4).unwrap()).elements(), &[0, 2]);
        assert_eq!(nilradical(&make_gf(3, 2).unwrap()).elements(), &[0]);
        assert_eq!(nilradical(&make_zmod(12).unwrap()).elements(), &[0, 6]);
    }

    #[test]
    fn divided_primes() {
        let z4 = make_zmod(4).unwrap();
        let p = ideal_generated_by(&z4, &[2]).unwrap();
        assert!(is_divided_prime(&z4, &p).unwrap());

        let z6 = make_zmod(6).unwrap();
        let zero = ideal_generated_by(&z6, &[]).unwrap();
        assert!(!is_divided_prime(&z6, &zero).unwrap()); // 2*3 = 0, not prime

        let gf9 = make_gf(3, 2).unwrap();
        let zero = ideal_generated_by(&gf9, &[]).unwrap();
        assert!(is_divided_prime(&gf9, &zero).unwrap());
    }

    #[test]
    fn phi_ring_classification() {
        assert!(is_phi_ring(&make_zmod(4).unwrap()));
        assert!(!is_phi_ring(&make_zmod(6).unwrap()));
        // F2 ∝ F2^2: Nil = 0 ∝ E, everything outside is a unit
        let f2 = make_zmod(2).unwrap();
        let plane = make_free_module(&f2, 2).unwrap();
        let ext = trivial_extension(&f2, &plane).unwrap();
        assert!(is_phi_ring(&ext.ring));
    }

    #[test]
    fn phi_image_of_local_rings_is_identity_sized() {
        for ring in [
            make_zmod(4).unwrap(),
            make_gf(2, 2).unwrap(),
            make_zmod(8).unwrap(),
        ] {
            let (k, hom) = phi_image(&ring).unwrap();
            assert_eq!(k.order(), ring.order());
            assert!(hom.is_surjective());
        }
        let f2 = make_zmod(2).unwrap();
        let plane = make_free_module(&f2, 2).unwrap();
        let ext = trivial_extension(&f2, &plane).unwrap();
        let (k, _) = phi_image(&ext.ring).unwrap();
        assert_eq!(k.order(), ext.ring.order());
    }

    #[test]
    fn nonnil_ideals_contain_nil_in_phi_rings() {
        let z8 = make_zmod(8).unwrap();
        let nil = nilradical(&z8);
        for ideal in all_ideals(&z8) {
            if !ideal.is_subset_of(&nil) {
                assert!(nil.is_subset_of(&ideal));
            }
        }
    }

    #[test]
    fn nonnil_s_bezout_cases() {
        let z8 = make_zmod(8).unwrap();
        let s1 = make_mult_set(&z8, &[]).unwrap();
        assert!(is_nonnil_s_bezout(&z8, &s1).unwrap().is_true());

        let gf4 = make_gf(2, 2).unwrap();
        let s = make_mult_set(&gf4, &[]).unwrap();
        assert!(is_nonnil_s_bezout(&gf4, &s).unwrap().is_true());

        let z6 = make_zmod(6).unwrap();
        let s6 = make_mult_set(&z6, &[]).unwrap();
        assert!(matches!(
            is_nonnil_s_bezout(&z6, &s6),
            Err(Error::NotPhiRing)
        ));
    }

    #[test]
    fn characterization_agrees_with_direct_decider() {
        let rings = [
            make_zmod(4).unwrap(),
            make_zmod(8).unwrap(),
            make_zmod(9).unwrap(),
            make_gf(2, 2).unwrap(),
        ];
        for ring in rings {
            for gens in [vec![], vec![ring.order() - 1]] {
                let s = make_mult_set(&ring, &gens).unwrap();
                let direct = is_nonnil_s_bezout(&ring, &s).unwrap().is_true();
                let via_quotient = quotient_by_nil_check(&ring, &s).unwrap();
                assert_eq!(direct, via_quotient, "on {}", ring.desc());
            }
        }
    }

    #[test]
    fn chained_rings() {
        assert!(is_chained(&make_zmod(8).unwrap()).is_true());
        assert!(is_chained(&make_gf(5, 1).unwrap()).is_true());
        let f2 = make_zmod(2).unwrap();
        let plane = make_free_module(&f2, 2).unwrap();
        let ext = trivial_extension(&f2, &plane).unwrap();
        let rep = is_chained(&ext.ring);
        assert!(rep.verdict.is_false()); // two incomparable lines
        assert!(matches!(
            rep.counterexample,
            Some(Counterexample::Incomparable { .. })
        ));
        // but all nonnil ideals are comparable (only the whole ring is nonnil)
        let rep = is_nonnil_chained(&ext.ring);
        assert!(rep.is_true());
        assert!(rep.flags.contains(&FLAG_NONNIL_CHAINED_DEF));
    }

    #[test]
    fn prime_scan_and_prime_localization() {
        let z12 = make_zmod(12).unwrap();
        let ps = primes(&z12);
        let sets: Vec<&[usize]> = ps.iter().map(|p| p.elements()).collect();
        assert_eq!(sets.len(), 2);
        assert!(sets.contains(&&[0usize, 2, 4, 6, 8, 10][..]));
        assert!(sets.contains(&&[0usize, 3, 6, 9][..]));

        let three = ideal_generated_by(&z12, &[3]).unwrap();
        let (loc, _) = localize_at_prime(&z12, &three).unwrap();
        assert_eq!(loc.order(), 3);

        let gf8 = make_gf(2, 3).unwrap();
        let ps = primes(&gf8);
        assert_eq!(ps.len(), 1);
        assert!(ps[0].is_zero());
    }

    #[test]
    fn nil_is_contained_in_every_prime() {
        for n in [4u64, 8, 12, 18, 36] {
            let r = make_zmod(n).unwrap();
            let nil = nilradical(&r);
            for p in primes(&r) {
                assert!(nil.is_subset_of(&p));
            }
        }
    }
}
