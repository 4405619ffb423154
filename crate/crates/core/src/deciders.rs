//! The S-Bézout deciders.
//!
//! All searches run in a fixed ascending order so that witnesses and
//! counterexamples are deterministic; ring-wide scans evaluate ideals in
//! parallel but report the least failure in canonical order.

use std::sync::Arc;
use std::time::Instant;

use itertools::Itertools;

use crate::bitset::Bitset;
use crate::ideal::{all_ideals, ideal_generated_by, is_prime_ideal, is_principal, Ideal};
use crate::mulset::{mult_set_from_closed, MultiplicativeSet};
use crate::par;
use crate::report::{
    Counterexample, IdealWitness, Witness, WitnessReport, FLAG_DEGENERATE_MULT_SET,
};
use crate::ring::FiniteRing;
use crate::{Error, Result};

fn check_same_ring(ideal: &Ideal, s: &MultiplicativeSet) -> Result<()> {
    if ideal.ring().id() != s.ring().id() {
        Err(Error::RingMismatch)
    } else {
        Ok(())
    }
}

fn flag_degenerate(report: WitnessReport, s: &MultiplicativeSet) -> WitnessReport {
    if s.contains_zero() {
        report.with_flag(FLAG_DEGENERATE_MULT_SET)
    } else {
        report
    }
}

/// Core search: find the first `(s, a)` with `s ∈ S`, `a ∈ I` and
/// `sI ⊆ Ra ⊆ I`, scanning `s` then `a` in ascending index order.
/// `Ra ⊆ I` holds automatically for `a ∈ I`, and any `a` with `Ra ⊆ I`
/// lies in `I`, so candidates range over `I` without loss.
fn s_principal_witness(ideal: &Ideal, s: &MultiplicativeSet) -> Option<(usize, usize)> {
    let ring = ideal.ring();
    let principal: Vec<Bitset> = ideal
        .elements()
        .iter()
        .map(|&a| ring.multiples(a))
        .collect();
    for &sv in s.elements() {
        let mut s_times = Bitset::new(ring.order());
        for &x in ideal.elements() {
            s_times.insert(ring.mul(sv, x));
        }
        for (ai, &a) in ideal.elements().iter().enumerate() {
            if s_times.is_subset(&principal[ai]) {
                debug_assert!(principal[ai].is_subset(&ideal.element_set()));
                return Some((sv, a));
            }
        }
    }
    None
}

/// Is `I` S-principal: `sI ⊆ Ra ⊆ I` for some `s ∈ S`, `a`?
pub fn is_s_principal(ideal: &Ideal, s: &MultiplicativeSet) -> Result<WitnessReport> {
    check_same_ring(ideal, s)?;
    let start = Instant::now();
    let report = match s_principal_witness(ideal, s) {
        Some((sv, a)) => WitnessReport::found(Witness::SPrincipal { s: sv, a }),
        None => WitnessReport::exhausted_false((s.len() * ideal.len()) as u64),
    };
    Ok(flag_degenerate(report, s).with_elapsed(start.elapsed()))
}

/// Is `I` S-finite at generator bound `k`: `sI ⊆ J ⊆ I` for some `s ∈ S` and
/// some `J` generated by at most `k` elements of `I`?
///
/// On a finite ring this is trivially true once `k` reaches the recorded
/// generator count (take `s = 1`, `J = I`); below that the subsets are
/// enumerated exhaustively.
pub fn is_s_finite(ideal: &Ideal, s: &MultiplicativeSet, k: usize) -> Result<WitnessReport> {
    check_same_ring(ideal, s)?;
    let start = Instant::now();
    let ring = ideal.ring();

    let min_gens = ideal.generators().len();
    if k >= min_gens {
        let report = WitnessReport::found(Witness::SFinite {
            s: ring.one(),
            generators: ideal.generators().to_vec(),
        });
        return Ok(flag_degenerate(report, s).with_elapsed(start.elapsed()));
    }

    let mut searched: u64 = 0;
    for &sv in s.elements() {
        let mut s_times = Bitset::new(ring.order());
        for &x in ideal.elements() {
            s_times.insert(ring.mul(sv, x));
        }
        for size in 0..=k.min(ideal.len()) {
            for subset in ideal.elements().iter().copied().combinations(size) {
                searched += 1;
                let sub = ideal_generated_by(ring, &subset)?;
                if s_times.is_subset(&sub.element_set()) {
                    let report = WitnessReport::found(Witness::SFinite {
                        s: sv,
                        generators: subset,
                    });
                    return Ok(flag_degenerate(report, s).with_elapsed(start.elapsed()));
                }
            }
        }
    }
    Ok(flag_degenerate(WitnessReport::exhausted_false(searched), s)
        .with_elapsed(start.elapsed()))
}

fn least_failing<'a>(
    lattice: &'a [Ideal],
    failing: impl Fn(&Ideal) -> bool + Sync + Send,
) -> Option<&'a Ideal> {
    // The lattice is already in canonical order, so the first positional
    // failure is the canonical least one.
    par::position_first(lattice, |i| failing(i)).map(|pos| &lattice[pos])
}

/// Is every ideal principal? FALSE carries the canonically least
/// non-principal ideal.
pub fn is_bezout(ring: &Arc<FiniteRing>) -> WitnessReport {
    let start = Instant::now();
    let lattice = all_ideals(ring);
    let report = match least_failing(&lattice, |i| !is_principal(i).is_true()) {
        Some(bad) => WitnessReport::refuted(Counterexample::Ideal {
            generators: bad.generators().to_vec(),
            elements: bad.elements().to_vec(),
        }),
        None => {
            let witnesses = lattice
                .iter()
                .map(|i| {
                    let rep = is_principal(i);
                    let a = match rep.witness {
                        Some(Witness::Principal { a }) => a,
                        _ => unreachable!("principal scan just succeeded"),
                    };
                    IdealWitness {
                        ideal_generators: i.generators().to_vec(),
                        witness: Box::new(Witness::Principal { a }),
                    }
                })
                .collect();
            WitnessReport::found(Witness::PerIdeal(witnesses))
        }
    };
    report.with_elapsed(start.elapsed())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SBezoutMode {
    /// Check the whole lattice (every ideal of a finite ring is finitely
    /// generated).
    AllIdeals,
    /// Check only ideals generated by at most two elements.
    TwoGenerated,
}

/// Is the ring S-Bézout: every (finitely generated) ideal S-principal?
pub fn is_s_bezout(
    ring: &Arc<FiniteRing>,
    s: &MultiplicativeSet,
    mode: SBezoutMode,
) -> Result<WitnessReport> {
    if ring.id() != s.ring().id() {
        return Err(Error::RingMismatch);
    }
    let start = Instant::now();
    let lattice = all_ideals(ring);
    let scope: Vec<&Ideal> = match mode {
        SBezoutMode::AllIdeals => lattice.iter().collect(),
        SBezoutMode::TwoGenerated => lattice.iter().filter(|i| i.generators().len() <= 2).collect(),
    };
    let verdicts: Vec<Option<(usize, usize)>> =
        par::map_collect(&scope, |ideal| s_principal_witness(ideal, s));
    let report = match verdicts.iter().position(|w| w.is_none()) {
        Some(pos) => WitnessReport::refuted(Counterexample::Ideal {
            generators: scope[pos].generators().to_vec(),
            elements: scope[pos].elements().to_vec(),
        }),
        None => {
            let witnesses = scope
                .iter()
                .zip(&verdicts)
                .map(|(ideal, w)| {
                    let (sv, a) = w.expect("no failing ideal");
                    IdealWitness {
                        ideal_generators: ideal.generators().to_vec(),
                        witness: Box::new(Witness::SPrincipal { s: sv, a }),
                    }
                })
                .collect();
            WitnessReport::found(Witness::PerIdeal(witnesses))
        }
    };
    Ok(flag_degenerate(report, s).with_elapsed(start.elapsed()))
}

/// Is every ideal S-principal? On a finite ring this coincides with
/// `is_s_bezout` in all-ideals mode; kept separate because the notions
/// differ off the finite fragment.
pub fn is_s_pir(ring: &Arc<FiniteRing>, s: &MultiplicativeSet) -> Result<WitnessReport> {
    is_s_bezout(ring, s, SBezoutMode::AllIdeals)
}

/// P-Bézout: S-Bézout with `S` the complement of the prime `P`.
pub fn is_p_bezout(ring: &Arc<FiniteRing>, prime: &Ideal) -> Result<WitnessReport> {
    if ring.id() != prime.ring().id() {
        return Err(Error::RingMismatch);
    }
    let s = complement_of_prime(prime)?;
    is_s_bezout(ring, &s, SBezoutMode::AllIdeals)
}

/// The multiplicative set `R − P` for a verified prime `P`.
pub fn complement_of_prime(prime: &Ideal) -> Result<MultiplicativeSet> {
    if !is_prime_ideal(prime) {
        return Err(Error::NotPrimeIdeal);
    }
    let ring = prime.ring();
    let complement: Vec<usize> = (0..ring.order()).filter(|&x| !prime.contains(x)).collect();
    mult_set_from_closed(ring, complement.iter().copied(), complement.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mulset::make_mult_set;
    use crate::ring::{make_gf, make_zmod};

    #[test]
    fn zero_in_s_absorbs_everything() {
        let r = make_zmod(4).unwrap();
        let s = make_mult_set(&r, &[2]).unwrap(); // {0,1,2}
        for ideal in all_ideals(&r) {
            let rep = is_s_principal(&ideal, &s).unwrap();
            assert!(rep.is_true());
            // s = 0 is the least element of S, paired with the least element of I
            assert_eq!(
                rep.witness,
                Some(Witness::SPrincipal { s: 0, a: 0 })
            );
            assert!(rep.flags.contains(&FLAG_DEGENERATE_MULT_SET));
        }
    }

    #[test]
    fn unit_sets_reduce_to_principality() {
        let r = make_zmod(36).unwrap();
        let s = make_mult_set(&r, &[5]).unwrap();
        assert!(s.all_units());
        for ideal in all_ideals(&r) {
            let sp = is_s_principal(&ideal, &s).unwrap();
            let p = is_principal(&ideal);
            assert_eq!(sp.verdict, p.verdict);
        }
    }

    #[test]
    fn s_finite_boundary_cases() {
        let r = make_zmod(12).unwrap();
        let s = make_mult_set(&r, &[]).unwrap();
        for ideal in all_ideals(&r) {
            // k = |I| is always enough, witnessed by s = 1
            let rep = is_s_finite(&ideal, &s, ideal.len()).unwrap();
            assert!(rep.is_true());
            // k = 1 coincides with S-principality
            let k1 = is_s_finite(&ideal, &s, 1).unwrap();
            let sp = is_s_principal(&ideal, &s).unwrap();
            assert_eq!(k1.verdict, sp.verdict);
        }
    }

    #[test]
    fn residue_rings_are_bezout() {
        for n in [2u64, 12, 30, 64] {
            assert!(is_bezout(&make_zmod(n).unwrap()).is_true());
        }
        assert!(is_bezout(&make_gf(2, 3).unwrap()).is_true());
    }

    #[test]
    fn bezout_rings_are_s_bezout_for_any_s() {
        let r = make_zmod(18).unwrap();
        for gens in [vec![], vec![2], vec![3], vec![5, 6]] {
            let s = make_mult_set(&r, &gens).unwrap();
            for mode in [SBezoutMode::AllIdeals, SBezoutMode::TwoGenerated] {
                assert!(is_s_bezout(&r, &s, mode).unwrap().is_true());
            }
        }
    }

    #[test]
    fn s_pir_matches_s_bezout_on_finite_rings() {
        let r = make_zmod(20).unwrap();
        let s = make_mult_set(&r, &[2]).unwrap();
        assert_eq!(
            is_s_pir(&r, &s).unwrap().verdict,
            is_s_bezout(&r, &s, SBezoutMode::AllIdeals).unwrap().verdict
        );
    }

    #[test]
    fn p_bezout_on_chained_ring() {
        let r = make_zmod(8).unwrap();
        let p = ideal_generated_by(&r, &[2]).unwrap();
        assert!(is_p_bezout(&r, &p).unwrap().is_true());
        // fields: P = (0)
        let f = make_gf(3, 1).unwrap();
        let zero = ideal_generated_by(&f, &[]).unwrap();
        assert!(is_p_bezout(&f, &zero).unwrap().is_true());
    }

    #[test]
    fn p_bezout_rejects_non_primes() {
        let r = make_zmod(12).unwrap();
        let four = ideal_generated_by(&r, &[4]).unwrap();
        assert!(matches!(
            is_p_bezout(&r, &four),
            Err(Error::NotPrimeIdeal)
        ));
    }

    #[test]
    fn monotonicity_of_s_principal() {
        let r = make_zmod(24).unwrap();
        let small = make_mult_set(&r, &[2]).unwrap();
        let large = make_mult_set(&r, &[2, 3]).unwrap();
        assert!(small.is_subset_of(&large));
        for ideal in all_ideals(&r) {
            if is_s_principal(&ideal, &small).unwrap().is_true() {
                assert!(is_s_principal(&ideal, &large).unwrap().is_true());
            }
        }
    }

    #[test]
    fn witnesses_replay() {
        let r = make_zmod(48).unwrap();
        let s = make_mult_set(&r, &[2]).unwrap();
        for ideal in all_ideals(&r) {
            let rep = is_s_principal(&ideal, &s).unwrap();
            if let Some(Witness::SPrincipal { s: sv, a }) = rep.witness {
                // replay: sI ⊆ Ra ⊆ I
                let ra = r.multiples(a);
                for &x in ideal.elements() {
                    assert!(ra.contains(r.mul(sv, x)));
                }
                assert!(ra.is_subset(&ideal.element_set()));
            } else {
                panic!("zmod ideals are S-principal");
            }
        }
    }
}
