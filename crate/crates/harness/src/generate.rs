//! Deterministic instance generation.
//!
//! Every generator is a pure function of a `u64` seed, so any instance (and
//! any violation it produced) can be rebuilt exactly. Construction is
//! bottom-up with a size budget; oversized draws are retried a few times and
//! then surface as unusable instances, which callers count as skips.

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use ringlab_core::construct::{
    amalgamation, duplication, product, quotient_ring, subring_generated, trivial_extension,
    Amalgamation, ProductRing, QuotientRing, TrivialExtension,
};
use ringlab_core::hom::{make_hom, reduction_hom, RingHom};
use ringlab_core::ideal::{all_ideals, ideal_generated_by, Ideal};
use ringlab_core::modules::{make_free_module, restrict_scalars, FiniteModule};
use ringlab_core::mulset::{make_mult_set, MultiplicativeSet};
use ringlab_core::ring::{make_gf, make_poly_quotient, make_zmod, FiniteRing};
use ringlab_core::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub name: String,
    pub max_order: usize,
    /// Hypothesis-satisfying instances a property must accumulate.
    pub target_satisfying: usize,
    /// Hard cap on instances tried while hunting for satisfying ones.
    pub attempts_cap: usize,
}

impl Profile {
    pub fn default_profile() -> Profile {
        Profile {
            name: "default".into(),
            max_order: 32,
            target_satisfying: 100,
            attempts_cap: 6000,
        }
    }

    pub fn quick() -> Profile {
        Profile {
            name: "quick".into(),
            max_order: 16,
            target_satisfying: 25,
            attempts_cap: 1500,
        }
    }

    pub fn thorough() -> Profile {
        Profile {
            name: "thorough".into(),
            max_order: 48,
            target_satisfying: 300,
            attempts_cap: 20000,
        }
    }

    pub fn by_name(name: &str) -> Option<Profile> {
        match name {
            "default" => Some(Profile::default_profile()),
            "quick" => Some(Profile::quick()),
            "thorough" => Some(Profile::thorough()),
            _ => None,
        }
    }
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// splitmix-style seed mixing so each (property, instance index) pair gets an
/// independent stream.
pub fn mix_seed(base: u64, tag: &str, k: u64) -> u64 {
    let mut h = base ^ 0x9e37_79b9_7f4a_7c15;
    for b in tag.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x100_0000_01b3);
    }
    h = h.wrapping_add(k.wrapping_mul(0xbf58_476d_1ce4_e5b9));
    h ^= h >> 30;
    h = h.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h ^= h >> 27;
    h = h.wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

/// A base ring drawn from the small menu: residue rings, finite fields, and
/// chain rings `F_p[t]/(t^k)`.
pub fn gen_base_ring(rng: &mut ChaCha8Rng, max_order: usize) -> Result<Arc<FiniteRing>> {
    if max_order < 2 {
        return Err(ringlab_core::Error::OrderBound {
            requested: 2,
            max: max_order,
        });
    }
    for _ in 0..16 {
        let pick = rng.gen_range(0..6);
        let ring = match pick {
            0 | 1 => {
                let n = rng.gen_range(2..=max_order.min(32)) as u64;
                make_zmod(n)
            }
            2 => {
                let n = rng.gen_range(2..=max_order.min(16)) as u64;
                make_zmod(n)
            }
            3 => {
                let (p, k) = *[(2u64, 2u32), (2, 3), (3, 2), (2, 4), (5, 1), (7, 1)]
                    .choose(rng)
                    .unwrap();
                make_gf(p, k)
            }
            4 => {
                // chain rings with nilpotents
                let (p, deg) = *[(2u64, 2usize), (2, 3), (3, 2)].choose(rng).unwrap();
                let mut f = vec![0u64; deg + 1];
                f[deg] = 1;
                make_poly_quotient(p, &f)
            }
            _ => {
                let n = *[4u64, 8, 9, 16, 25, 27].choose(rng).unwrap();
                make_zmod(n)
            }
        };
        match ring {
            Ok(r) if r.order() <= max_order => return Ok(r),
            _ => continue,
        }
    }
    make_zmod(2)
}

/// Local base rings (used when a shape requires a unique maximal ideal).
pub fn gen_local_base_ring(rng: &mut ChaCha8Rng, max_order: usize) -> Result<Arc<FiniteRing>> {
    for _ in 0..16 {
        let ring = match rng.gen_range(0..3) {
            0 => {
                let n = *[4u64, 8, 9, 16, 25, 27, 32].choose(rng).unwrap();
                make_zmod(n)
            }
            1 => {
                let (p, k) = *[(2u64, 1u32), (2, 2), (3, 1), (3, 2), (5, 1)].choose(rng).unwrap();
                make_gf(p, k)
            }
            _ => {
                let (p, deg) = *[(2u64, 2usize), (2, 3), (3, 2)].choose(rng).unwrap();
                let mut f = vec![0u64; deg + 1];
                f[deg] = 1;
                make_poly_quotient(p, &f)
            }
        };
        match ring {
            Ok(r) if r.order() <= max_order => return Ok(r),
            _ => continue,
        }
    }
    make_zmod(4)
}

pub fn gen_mult_set(rng: &mut ChaCha8Rng, ring: &Arc<FiniteRing>) -> MultiplicativeSet {
    let count = rng.gen_range(0..=2);
    let gens: Vec<usize> = (0..count).map(|_| rng.gen_range(0..ring.order())).collect();
    make_mult_set(ring, &gens).expect("indices in range")
}

pub fn gen_unit_mult_set(rng: &mut ChaCha8Rng, ring: &Arc<FiniteRing>) -> MultiplicativeSet {
    let units = ring.units();
    let count = rng.gen_range(0..=2usize);
    let gens: Vec<usize> = (0..count)
        .map(|_| *units.choose(rng).expect("1 is always a unit"))
        .collect();
    make_mult_set(ring, &gens).expect("indices in range")
}

pub fn gen_proper_ideal(rng: &mut ChaCha8Rng, ring: &Arc<FiniteRing>) -> Ideal {
    for _ in 0..12 {
        let count = rng.gen_range(0..=2);
        let gens: Vec<usize> = (0..count).map(|_| rng.gen_range(0..ring.order())).collect();
        let ideal = ideal_generated_by(ring, &gens).expect("indices in range");
        if ideal.is_proper() {
            return ideal;
        }
    }
    ideal_generated_by(ring, &[]).expect("zero ideal")
}

/// A ring plus a random multiplicative set, with up to two construction
/// combinators on top of a base ring.
pub struct PlainInstance {
    pub seed: u64,
    pub ring: Arc<FiniteRing>,
    pub mult_set: MultiplicativeSet,
    pub shape: String,
}

pub fn gen_plain(seed: u64, profile: &Profile) -> Result<PlainInstance> {
    let mut rng = rng_for(seed);
    let (ring, shape) = gen_ring_shape(&mut rng, profile.max_order)?;
    let mult_set = gen_mult_set(&mut rng, &ring);
    Ok(PlainInstance {
        seed,
        ring,
        mult_set,
        shape,
    })
}

/// A random proper ideal of at most `cap` elements (closure sizes are
/// checked before any big ring is built on top of it).
fn gen_bounded_proper_ideal(rng: &mut ChaCha8Rng, ring: &Arc<FiniteRing>, cap: usize) -> Ideal {
    for _ in 0..12 {
        let count = rng.gen_range(0..=2);
        let gens: Vec<usize> = (0..count).map(|_| rng.gen_range(0..ring.order())).collect();
        let ideal = ideal_generated_by(ring, &gens).expect("indices in range");
        if ideal.is_proper() && ideal.len() <= cap {
            return ideal;
        }
    }
    ideal_generated_by(ring, &[]).expect("zero ideal")
}

fn gen_ring_shape(rng: &mut ChaCha8Rng, max_order: usize) -> Result<(Arc<FiniteRing>, String)> {
    let combinators = rng.gen_range(0..=2);
    let mut ring = gen_base_ring(rng, max_order)?;
    let mut shape = String::from("base");
    for _ in 0..combinators {
        let budget = max_order / ring.order();
        let next = match rng.gen_range(0..5) {
            0 if budget >= 2 => {
                let other = gen_base_ring(rng, budget)?;
                shape = format!("product({shape})");
                product(&ring, &other)?.ring
            }
            1 => {
                let ideal = gen_proper_ideal(rng, &ring);
                if ideal.is_zero() {
                    break;
                }
                shape = format!("quotient({shape})");
                quotient_ring(&ring, &ideal)?.ring
            }
            2 if budget >= ring.order() => {
                // trivext by a free module: |R|^(rank+1) must fit
                let rank: u32 = if ring
                    .order()
                    .checked_pow(3)
                    .map(|o| o <= max_order)
                    .unwrap_or(false)
                    && rng.gen_bool(0.5)
                {
                    2
                } else {
                    1
                };
                if ring
                    .order()
                    .checked_pow(rank + 1)
                    .map(|o| o > max_order)
                    .unwrap_or(true)
                {
                    break;
                }
                let module = make_free_module(&ring, rank)?;
                shape = format!("trivext({shape})");
                trivial_extension(&ring, &module)?.ring
            }
            3 if budget >= 1 => {
                let ideal = gen_bounded_proper_ideal(rng, &ring, budget);
                shape = format!("dup({shape})");
                duplication(&ring, &ideal)?.ring
            }
            _ => break,
        };
        debug_assert!(next.order() <= max_order);
        ring = next;
    }
    Ok((ring, shape))
}

pub struct ProductInstance {
    pub seed: u64,
    pub product: ProductRing,
    pub s1: MultiplicativeSet,
    pub s2: MultiplicativeSet,
    pub s: MultiplicativeSet,
}

pub fn gen_product(seed: u64, profile: &Profile) -> Result<ProductInstance> {
    let mut rng = rng_for(seed);
    let left = gen_base_ring(&mut rng, profile.max_order / 2)?;
    let right = gen_base_ring(&mut rng, profile.max_order / left.order().max(1))?;
    let p = product(&left, &right)?;
    let s1 = gen_mult_set(&mut rng, &p.left);
    let s2 = gen_mult_set(&mut rng, &p.right);
    let s = p.product_mult_set(&s1, &s2)?;
    Ok(ProductInstance {
        seed,
        product: p,
        s1,
        s2,
        s,
    })
}

pub struct TrivExtInstance {
    pub seed: u64,
    pub ext: TrivialExtension,
    pub s0: MultiplicativeSet,
}

pub fn gen_trivext(seed: u64, profile: &Profile) -> Result<TrivExtInstance> {
    let mut rng = rng_for(seed);
    let base = gen_base_ring(&mut rng, profile.max_order / 2)?;
    let budget = profile.max_order / base.order().max(1);
    let module = gen_module_over(&mut rng, &base, budget)?;
    let ext = trivial_extension(&base, &module)?;
    let s0 = gen_mult_set(&mut rng, &base);
    Ok(TrivExtInstance { seed, ext, s0 })
}

/// Either a free module or restriction of scalars through a quotient
/// projection (which yields modules with nontrivial annihilators).
pub fn gen_module_over(
    rng: &mut ChaCha8Rng,
    base: &Arc<FiniteRing>,
    max_order: usize,
) -> Result<Arc<FiniteModule>> {
    let free_fits = |rank: u32| {
        base.order()
            .checked_pow(rank)
            .map(|o| o <= max_order)
            .unwrap_or(false)
    };
    if rng.gen_bool(0.6) || base.order() < 3 {
        let rank = if free_fits(2) && rng.gen_bool(0.5) { 2 } else { 1 };
        if free_fits(rank) {
            return make_free_module(base, rank);
        }
    }
    // reduce modulo a proper ideal and act through the projection
    let ideal = gen_proper_ideal(rng, base);
    if ideal.is_zero() {
        if free_fits(1) {
            return make_free_module(base, 1);
        }
        return Err(ringlab_core::Error::OrderBound {
            requested: base.order(),
            max: max_order,
        });
    }
    let q = quotient_ring(base, &ideal)?;
    let q_fits = |rank: u32| {
        q.ring
            .order()
            .checked_pow(rank)
            .map(|o| o <= max_order)
            .unwrap_or(false)
    };
    let rank = if q_fits(2) && rng.gen_bool(0.5) { 2 } else { 1 };
    if !q_fits(rank) {
        return Err(ringlab_core::Error::OrderBound {
            requested: q.ring.order(),
            max: max_order,
        });
    }
    let free = make_free_module(&q.ring, rank)?;
    restrict_scalars(&q.projection, &free)
}

/// Local ring `A` with `E` killed by the maximal ideal and `S0` meeting it;
/// the hypothesis shape of the local trivial-extension theorem.
pub struct LocalMEZeroInstance {
    pub seed: u64,
    pub ext: TrivialExtension,
    pub s0: MultiplicativeSet,
    pub maximal: Ideal,
}

pub fn gen_local_me_zero(seed: u64, profile: &Profile) -> Result<Option<LocalMEZeroInstance>> {
    let mut rng = rng_for(seed);
    let base = gen_local_base_ring(&mut rng, profile.max_order / 2)?;
    let maximals = ringlab_core::nonnil::maximal_ideals(&base);
    if maximals.len() != 1 {
        return Ok(None);
    }
    let maximal = maximals.into_iter().next().unwrap();
    if maximal.is_zero() {
        // a field: M = 0 forces S0 ∩ M = ∅, hypothesis unsatisfiable
        return Ok(None);
    }
    let q = quotient_ring(&base, &maximal)?;
    let budget = profile.max_order / base.order().max(1);
    let rank = if q.ring.order() * q.ring.order() <= budget && rng.gen_bool(0.5) {
        2
    } else {
        1
    };
    if q.ring.order().pow(rank) > budget {
        return Ok(None);
    }
    let free = make_free_module(&q.ring, rank)?;
    let module = restrict_scalars(&q.projection, &free)?;
    let ext = trivial_extension(&base, &module)?;
    // S0 must contain a non-unit: seed it with an element of M
    let nonzero: Vec<usize> = maximal
        .elements()
        .iter()
        .copied()
        .filter(|&x| x != base.zero())
        .collect();
    let m_elem = *nonzero.choose(&mut rng).expect("maximal ideal is nonzero here");
    let extra = rng.gen_range(0..base.order());
    let s0 = make_mult_set(&base, &[m_elem, extra])?;
    Ok(Some(LocalMEZeroInstance {
        seed,
        ext,
        s0,
        maximal,
    }))
}

pub struct AmalgInstance {
    pub seed: u64,
    pub amalg: Amalgamation,
    pub s0: MultiplicativeSet,
    /// lift used as `S'` (zero lift or full lift)
    pub s_lift: MultiplicativeSet,
}

pub fn gen_amalg(seed: u64, profile: &Profile) -> Result<AmalgInstance> {
    let mut rng = rng_for(seed);
    let base = gen_base_ring(&mut rng, profile.max_order / 2)?;
    let s0 = gen_mult_set(&mut rng, &base);
    let j_cap = profile.max_order / base.order();
    let variant = rng.gen_range(0..3);
    let amalg = match variant {
        // duplication along an ideal biased to meet S0
        0 => {
            let mut ideal = None;
            if let Some(&s) = s0.elements().iter().find(|&&x| x != base.one()) {
                let candidate = ideal_generated_by(&base, &[s])?;
                if candidate.is_proper() && candidate.len() <= j_cap {
                    ideal = Some(candidate);
                }
            }
            let ideal =
                ideal.unwrap_or_else(|| gen_bounded_proper_ideal(&mut rng, &base, j_cap));
            duplication(&base, &ideal)?
        }
        // duplication along an arbitrary bounded proper ideal
        1 => {
            let ideal = gen_bounded_proper_ideal(&mut rng, &base, j_cap);
            duplication(&base, &ideal)?
        }
        // amalgamation along a reduction hom between residue rings
        _ => {
            if let ringlab_core::ring::Backend::Residue { modulus } = base.backend() {
                let divisors: Vec<u64> = (2..*modulus).filter(|d| modulus % d == 0).collect();
                if let Some(&n) = divisors.as_slice().choose(&mut rng) {
                    let target = make_zmod(n)?;
                    let f = reduction_hom(&base, &target)?;
                    let j = gen_bounded_proper_ideal(&mut rng, &target, j_cap);
                    amalgamation(&base, &target, &f, &j)?
                } else {
                    duplication(&base, &gen_bounded_proper_ideal(&mut rng, &base, j_cap))?
                }
            } else {
                duplication(&base, &gen_bounded_proper_ideal(&mut rng, &base, j_cap))?
            }
        }
    };
    debug_assert!(amalg.ring.order() <= profile.max_order);
    let s_lift = if rng.gen_bool(0.5) {
        amalg.lift_mult_set_zero(&s0)?
    } else {
        amalg.lift_mult_set_full(&s0)?
    };
    Ok(AmalgInstance {
        seed,
        amalg,
        s0,
        s_lift,
    })
}

pub struct HomInstance {
    pub seed: u64,
    pub hom: RingHom,
    pub s: MultiplicativeSet,
}

/// Surjective homs: quotient projections, residue reductions, product
/// projections.
pub fn gen_hom(seed: u64, profile: &Profile) -> Result<HomInstance> {
    let mut rng = rng_for(seed);
    let variant = rng.gen_range(0..3);
    let hom = match variant {
        0 => {
            let a = gen_base_ring(&mut rng, profile.max_order)?;
            let ideal = gen_proper_ideal(&mut rng, &a);
            quotient_ring(&a, &ideal)?.projection
        }
        1 => {
            let m = rng.gen_range(4..=profile.max_order.min(32)) as u64;
            let a = make_zmod(m)?;
            let divisors: Vec<u64> = (2..=m).filter(|d| m % d == 0 && *d < m).collect();
            if let Some(&n) = divisors.as_slice().choose(&mut rng) {
                let b = make_zmod(n)?;
                reduction_hom(&a, &b)?
            } else {
                let ideal = gen_proper_ideal(&mut rng, &a);
                quotient_ring(&a, &ideal)?.projection
            }
        }
        _ => {
            let left = gen_base_ring(&mut rng, profile.max_order / 2)?;
            let right = gen_base_ring(&mut rng, profile.max_order / left.order().max(1))?;
            let p = product(&left, &right)?;
            let map: Vec<usize> = (0..p.ring.order()).map(|x| p.split(x).0).collect();
            make_hom(&p.ring, &left, &map, "proj1")?
        }
    };
    let s = gen_mult_set(&mut rng, hom.source());
    Ok(HomInstance { seed, hom, s })
}

pub struct SubringInstance {
    pub seed: u64,
    pub embedding: RingHom,
    pub s_sub: MultiplicativeSet,
    pub s_big: MultiplicativeSet,
}

pub fn gen_subring(seed: u64, profile: &Profile) -> Result<SubringInstance> {
    let mut rng = rng_for(seed);
    let (big, _) = gen_ring_shape(&mut rng, profile.max_order)?;
    let gen = rng.gen_range(0..big.order());
    let (sub, embedding) = subring_generated(&big, &[gen])?;
    let count = rng.gen_range(0..=1);
    let gens: Vec<usize> = (0..count).map(|_| rng.gen_range(0..sub.order())).collect();
    let s_sub = make_mult_set(&sub, &gens)?;
    let image_gens: Vec<usize> = gens.iter().map(|&g| embedding.apply(g)).collect();
    let s_big = make_mult_set(&big, &image_gens)?;
    Ok(SubringInstance {
        seed,
        embedding,
        s_sub,
        s_big,
    })
}

/// Phi-biased ring: local chain bases, optionally idealized by a module.
pub fn gen_phi_biased(seed: u64, profile: &Profile) -> Result<PlainInstance> {
    let mut rng = rng_for(seed);
    let base = gen_local_base_ring(&mut rng, profile.max_order)?;
    let (ring, shape) = if rng.gen_bool(0.4) && base.order() * base.order() <= profile.max_order {
        let budget = profile.max_order / base.order();
        let module = gen_module_over(&mut rng, &base, budget)?;
        match trivial_extension(&base, &module) {
            Ok(ext) => (ext.ring, "trivext(local)".to_string()),
            Err(_) => (base, "local".to_string()),
        }
    } else {
        (base, "local".to_string())
    };
    let mult_set = gen_mult_set(&mut rng, &ring);
    Ok(PlainInstance {
        seed,
        ring,
        mult_set,
        shape,
    })
}

/// A quotient-shaped instance for the `R/I` transfer: ring, proper ideal,
/// and a multiplicative set optionally seeded with an annihilator of `I`.
pub struct QuotientShapeInstance {
    pub seed: u64,
    pub ring: Arc<FiniteRing>,
    pub ideal: Ideal,
    pub s: MultiplicativeSet,
    pub quotient: QuotientRing,
}

pub fn gen_quotient_shape(seed: u64, profile: &Profile) -> Result<QuotientShapeInstance> {
    let mut rng = rng_for(seed);
    let (ring, _) = gen_ring_shape(&mut rng, profile.max_order)?;
    let ideal = gen_proper_ideal(&mut rng, &ring);
    let mut gens: Vec<usize> = Vec::new();
    if rng.gen_bool(0.5) {
        // bias towards the converse hypothesis: an s0 with s0 I = 0
        let annihilators: Vec<usize> = (0..ring.order())
            .filter(|&x| ideal.elements().iter().all(|&i| ring.mul(x, i) == ring.zero()))
            .collect();
        if let Some(&a) = annihilators.as_slice().choose(&mut rng) {
            gens.push(a);
        }
    }
    if rng.gen_bool(0.7) {
        gens.push(rng.gen_range(0..ring.order()));
    }
    let s = make_mult_set(&ring, &gens)?;
    let quotient = quotient_ring(&ring, &ideal)?;
    Ok(QuotientShapeInstance {
        seed,
        ring,
        ideal,
        s,
        quotient,
    })
}

/// Lattice access with the profile bound enforced.
pub fn lattice_of(ring: &Arc<FiniteRing>) -> Vec<Ideal> {
    all_ideals(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_instance() {
        let p = Profile::default_profile();
        let a = gen_plain(42, &p).unwrap();
        let b = gen_plain(42, &p).unwrap();
        assert_eq!(a.ring.order(), b.ring.order());
        assert_eq!(a.shape, b.shape);
        assert_eq!(a.mult_set.elements(), b.mult_set.elements());
        for x in 0..a.ring.order() {
            for y in 0..a.ring.order() {
                assert_eq!(a.ring.add(x, y), b.ring.add(x, y));
                assert_eq!(a.ring.mul(x, y), b.ring.mul(x, y));
            }
        }
    }

    #[test]
    fn generator_covers_multiple_shapes() {
        let p = Profile::default_profile();
        let mut shapes = std::collections::HashSet::new();
        for seed in 0..400 {
            if let Ok(inst) = gen_plain(seed, &p) {
                shapes.insert(inst.shape);
            }
        }
        assert!(shapes.len() >= 5, "only saw {shapes:?}");
    }

    #[test]
    fn orders_respect_profile_bound() {
        let p = Profile::default_profile();
        for seed in 0..300 {
            let inst = gen_plain(seed, &p).unwrap();
            assert!(inst.ring.order() <= p.max_order);
        }
    }

    #[test]
    fn mix_seed_separates_streams() {
        let a = mix_seed(7, "P1", 0);
        let b = mix_seed(7, "P1", 1);
        let c = mix_seed(7, "P2", 0);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, mix_seed(7, "P1", 0));
    }
}
