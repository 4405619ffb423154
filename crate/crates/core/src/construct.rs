//! Ring constructions: direct products, quotients, trivial extensions,
//! amalgamations, duplications, and localization, together with the
//! multiplicative sets they induce.

use std::sync::Arc;

use crate::hom::{identity_hom, make_hom, RingHom};
use crate::ideal::{ideal_from_elements, minimize_generators, Ideal};
use crate::modules::{submodule_generated, FiniteModule, Submodule};
use crate::mulset::{mult_set_from_closed, MultiplicativeSet};
use crate::par;
use crate::ring::{Backend, FiniteRing};
use crate::{limits, Error, Result};

/// `R1 × R2` with componentwise operations. Element `(i, j)` has index
/// `i * |R2| + j`.
pub struct ProductRing {
    pub ring: Arc<FiniteRing>,
    pub left: Arc<FiniteRing>,
    pub right: Arc<FiniteRing>,
}

impl ProductRing {
    #[inline]
    pub fn pair(&self, i: usize, j: usize) -> usize {
        i * self.right.order() + j
    }

    #[inline]
    pub fn split(&self, idx: usize) -> (usize, usize) {
        (idx / self.right.order(), idx % self.right.order())
    }

    /// `S1 × S2`, multiplicatively closed because both factors are.
    pub fn product_mult_set(
        &self,
        s1: &MultiplicativeSet,
        s2: &MultiplicativeSet,
    ) -> Result<MultiplicativeSet> {
        if s1.ring().id() != self.left.id() || s2.ring().id() != self.right.id() {
            return Err(Error::RingMismatch);
        }
        let elements: Vec<usize> = s1
            .elements()
            .iter()
            .flat_map(|&a| s2.elements().iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.pair(a, b))
            .collect();
        mult_set_from_closed(&self.ring, elements.iter().copied(), elements.clone())
    }

    /// `I1 × I2` as an ideal of the product.
    pub fn product_ideal(&self, i1: &Ideal, i2: &Ideal) -> Result<Ideal> {
        if i1.ring().id() != self.left.id() || i2.ring().id() != self.right.id() {
            return Err(Error::RingMismatch);
        }
        let elements: Vec<usize> = i1
            .elements()
            .iter()
            .flat_map(|&a| i2.elements().iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.pair(a, b))
            .collect();
        ideal_from_elements(&self.ring, elements)
    }
}

pub fn product(r1: &Arc<FiniteRing>, r2: &Arc<FiniteRing>) -> Result<ProductRing> {
    let n1 = r1.order();
    let n2 = r2.order();
    let order = n1.checked_mul(n2).ok_or(Error::OrderBound {
        requested: usize::MAX,
        max: limits::max_order(),
    })?;
    limits::check_order(order)?;
    let add = par::map_indices(order, |x| {
        let (a1, a2) = (x / n2, x % n2);
        (0..order)
            .map(|y| {
                let (b1, b2) = (y / n2, y % n2);
                (r1.add(a1, b1) * n2 + r2.add(a2, b2)) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let mul = par::map_indices(order, |x| {
        let (a1, a2) = (x / n2, x % n2);
        (0..order)
            .map(|y| {
                let (b1, b2) = (y / n2, y % n2);
                (r1.mul(a1, b1) * n2 + r2.mul(a2, b2)) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let names = (0..order)
        .map(|x| format!("({}, {})", r1.element_name(x / n2), r2.element_name(x % n2)))
        .collect();
    let ring = FiniteRing::from_parts(
        format!("product({}, {})", r1.desc(), r2.desc()),
        Backend::Table,
        names,
        add,
        mul,
        r1.zero() * n2 + r2.zero(),
        r1.one() * n2 + r2.one(),
    )?;
    Ok(ProductRing {
        ring,
        left: Arc::clone(r1),
        right: Arc::clone(r2),
    })
}

/// `R / I` with least-index canonical coset representatives, plus the
/// projection homomorphism.
pub struct QuotientRing {
    pub ring: Arc<FiniteRing>,
    pub projection: RingHom,
}

impl QuotientRing {
    /// The image of a multiplicative set of the source; realizes `S + I`.
    pub fn project_mult_set(&self, s: &MultiplicativeSet) -> Result<MultiplicativeSet> {
        image_mult_set(&self.projection, s)
    }

    pub fn project_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        crate::ideal::extend(ideal, &self.projection)
    }
}

pub fn quotient_ring(ring: &Arc<FiniteRing>, ideal: &Ideal) -> Result<QuotientRing> {
    if ideal.ring().id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    if ideal.is_whole_ring() {
        return Err(Error::ImproperIdeal);
    }
    let order = ring.order();
    // canonical representative: least index in the coset x + I
    let rep: Vec<usize> = par::map_indices(order, |x| {
        ideal
            .elements()
            .iter()
            .map(|&i| ring.add(x, i))
            .min()
            .expect("ideal contains 0")
    });
    let mut reps: Vec<usize> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let pos = |x: usize| reps.binary_search(&rep[x]).expect("rep table is total");
    let new_order = reps.len();
    let add = par::map_indices(new_order, |i| {
        (0..new_order)
            .map(|j| pos(ring.add(reps[i], reps[j])) as u32)
            .collect::<Vec<_>>()
    })
    .concat();
    let mul = par::map_indices(new_order, |i| {
        (0..new_order)
            .map(|j| pos(ring.mul(reps[i], reps[j])) as u32)
            .collect::<Vec<_>>()
    })
    .concat();
    let names = reps.iter().map(|&r| ring.element_name(r).to_string()).collect();
    let gens_desc: Vec<String> = ideal
        .generators()
        .iter()
        .map(|&g| ring.element_name(g).to_string())
        .collect();
    let quotient = FiniteRing::from_parts(
        format!("quotient({}, <{}>)", ring.desc(), gens_desc.join(",")),
        Backend::Table,
        names,
        add,
        mul,
        pos(ring.zero()),
        pos(ring.one()),
    )?;
    let map: Vec<usize> = (0..order).map(pos).collect();
    let projection = make_hom(ring, &quotient, &map, format!("proj({})", quotient.desc()))?;
    Ok(QuotientRing {
        ring: quotient,
        projection,
    })
}

/// The trivial extension (idealization) `A ∝ E`. Element `(a, e)` has index
/// `a * |E| + e`; multiplication is `(a1,e1)(a2,e2) = (a1 a2, a1 e2 + a2 e1)`.
pub struct TrivialExtension {
    pub ring: Arc<FiniteRing>,
    pub base: Arc<FiniteRing>,
    pub module: Arc<FiniteModule>,
}

impl TrivialExtension {
    #[inline]
    pub fn pair(&self, a: usize, e: usize) -> usize {
        a * self.module.order() + e
    }

    #[inline]
    pub fn split(&self, idx: usize) -> (usize, usize) {
        (idx / self.module.order(), idx % self.module.order())
    }

    /// `S0 ∝ 0 = { (s, 0) : s ∈ S0 }`.
    pub fn lift_mult_set_zero(&self, s0: &MultiplicativeSet) -> Result<MultiplicativeSet> {
        if s0.ring().id() != self.base.id() {
            return Err(Error::RingMismatch);
        }
        let elements: Vec<usize> = s0
            .elements()
            .iter()
            .map(|&s| self.pair(s, self.module.zero()))
            .collect();
        mult_set_from_closed(&self.ring, elements.iter().copied(), elements.clone())
    }

    /// `S0 ∝ E = { (s, e) : s ∈ S0, e ∈ E }`.
    pub fn lift_mult_set_full(&self, s0: &MultiplicativeSet) -> Result<MultiplicativeSet> {
        if s0.ring().id() != self.base.id() {
            return Err(Error::RingMismatch);
        }
        let elements: Vec<usize> = s0
            .elements()
            .iter()
            .flat_map(|&s| (0..self.module.order()).map(move |e| (s, e)))
            .map(|(s, e)| self.pair(s, e))
            .collect();
        mult_set_from_closed(&self.ring, elements.iter().copied(), elements.clone())
    }

    /// The ideal `0 ∝ F` for a submodule `F` of `E`.
    pub fn zero_extension_ideal(&self, f: &Submodule) -> Result<Ideal> {
        let elements: Vec<usize> = f
            .elements()
            .iter()
            .map(|&e| self.pair(self.base.zero(), e))
            .collect();
        ideal_from_elements(&self.ring, elements)
    }

    /// Projection `I` and fiber `F` of an ideal `L`: homogeneous means
    /// `L = I ∝ F` with `I E ⊆ F`.
    pub fn is_homogeneous(&self, l: &Ideal) -> Result<(bool, Option<(Ideal, Submodule)>)> {
        if l.ring().id() != self.ring.id() {
            return Err(Error::RingMismatch);
        }
        let mut i_part: Vec<usize> = l.elements().iter().map(|&x| self.split(x).0).collect();
        i_part.sort_unstable();
        i_part.dedup();
        let f_part: Vec<usize> = l
            .elements()
            .iter()
            .filter(|&&x| self.split(x).0 == self.base.zero())
            .map(|&x| self.split(x).1)
            .collect();
        // L = I ∝ F as sets?
        if l.len() != i_part.len() * f_part.len() {
            return Ok((false, None));
        }
        for &a in &i_part {
            for &e in &f_part {
                if !l.contains(self.pair(a, e)) {
                    return Ok((false, None));
                }
            }
        }
        // I·E ⊆ F
        let fset = crate::bitset::Bitset::from_indices(
            self.module.order(),
            f_part.iter().copied(),
        );
        for &a in &i_part {
            for m in 0..self.module.order() {
                if !fset.contains(self.module.act(a, m)) {
                    return Ok((false, None));
                }
            }
        }
        let ideal = ideal_from_elements(&self.base, i_part)?;
        let sub = submodule_generated(&self.module, &f_part)?;
        debug_assert_eq!(sub.elements(), f_part.as_slice());
        Ok((true, Some((ideal, sub))))
    }
}

pub fn trivial_extension(
    base: &Arc<FiniteRing>,
    module: &Arc<FiniteModule>,
) -> Result<TrivialExtension> {
    if module.ring().id() != base.id() {
        return Err(Error::ModuleRingMismatch);
    }
    let na = base.order();
    let ne = module.order();
    let order = na.checked_mul(ne).ok_or(Error::OrderBound {
        requested: usize::MAX,
        max: limits::max_order(),
    })?;
    limits::check_order(order)?;
    let add = par::map_indices(order, |x| {
        let (a1, e1) = (x / ne, x % ne);
        (0..order)
            .map(|y| {
                let (a2, e2) = (y / ne, y % ne);
                (base.add(a1, a2) * ne + module.add(e1, e2)) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let mul = par::map_indices(order, |x| {
        let (a1, e1) = (x / ne, x % ne);
        (0..order)
            .map(|y| {
                let (a2, e2) = (y / ne, y % ne);
                let prod_mod = module.add(module.act(a1, e2), module.act(a2, e1));
                (base.mul(a1, a2) * ne + prod_mod) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let names = (0..order)
        .map(|x| {
            format!(
                "({}, {})",
                base.element_name(x / ne),
                module.element_name(x % ne)
            )
        })
        .collect();
    let ring = FiniteRing::from_parts(
        format!("trivext({}, {})", base.desc(), module.desc()),
        Backend::Table,
        names,
        add,
        mul,
        base.zero() * ne + module.zero(),
        base.one() * ne + module.zero(),
    )?;
    Ok(TrivialExtension {
        ring,
        base: Arc::clone(base),
        module: Arc::clone(module),
    })
}

/// The amalgamation `A ⋈^f J = { (a, f(a)+j) : a ∈ A, j ∈ J }` as a ring in
/// `(a, j)` coordinates: index `a * |J| + pos(j)`.
pub struct Amalgamation {
    pub ring: Arc<FiniteRing>,
    pub base: Arc<FiniteRing>,
    pub other: Arc<FiniteRing>,
    pub hom: RingHom,
    pub along: Ideal,
}

impl Amalgamation {
    pub fn j_elements(&self) -> &[usize] {
        self.along.elements()
    }

    #[inline]
    pub fn encode(&self, a: usize, j_pos: usize) -> usize {
        a * self.along.len() + j_pos
    }

    /// `(a, j)` parts of an element.
    #[inline]
    pub fn split(&self, idx: usize) -> (usize, usize) {
        let nj = self.along.len();
        (idx / nj, self.along.elements()[idx % nj])
    }

    /// The `B`-side value `f(a) + j`.
    pub fn b_part(&self, idx: usize) -> usize {
        let (a, j) = self.split(idx);
        self.other.add(self.hom.apply(a), j)
    }

    pub fn from_pair(&self, a: usize, b: usize) -> Option<usize> {
        let j = self.other.sub(b, self.hom.apply(a));
        self.along
            .elements()
            .binary_search(&j)
            .ok()
            .map(|pos| self.encode(a, pos))
    }

    pub fn projection_hom(&self) -> Result<RingHom> {
        let map: Vec<usize> = (0..self.ring.order()).map(|x| self.split(x).0).collect();
        make_hom(
            &self.ring,
            &self.base,
            &map,
            format!("proj({} -> {})", self.ring.desc(), self.base.desc()),
        )
    }

    /// `S0 ⋈ 0 = { (s, f(s)) }`.
    pub fn lift_mult_set_zero(&self, s0: &MultiplicativeSet) -> Result<MultiplicativeSet> {
        if s0.ring().id() != self.base.id() {
            return Err(Error::RingMismatch);
        }
        let zpos = self
            .along
            .elements()
            .binary_search(&self.other.zero())
            .expect("ideal contains 0");
        let elements: Vec<usize> = s0.elements().iter().map(|&s| self.encode(s, zpos)).collect();
        mult_set_from_closed(&self.ring, elements.iter().copied(), elements.clone())
    }

    /// `S0 ⋈ J = { (s, f(s)+j) : s ∈ S0, j ∈ J }`.
    pub fn lift_mult_set_full(&self, s0: &MultiplicativeSet) -> Result<MultiplicativeSet> {
        if s0.ring().id() != self.base.id() {
            return Err(Error::RingMismatch);
        }
        let elements: Vec<usize> = s0
            .elements()
            .iter()
            .flat_map(|&s| (0..self.along.len()).map(move |jp| (s, jp)))
            .map(|(s, jp)| self.encode(s, jp))
            .collect();
        mult_set_from_closed(&self.ring, elements.iter().copied(), elements.clone())
    }

    /// Projection of a multiplicative set of the amalgamation onto `A`.
    pub fn project_mult_set(&self, s: &MultiplicativeSet) -> Result<MultiplicativeSet> {
        if s.ring().id() != self.ring.id() {
            return Err(Error::RingMismatch);
        }
        let elements: Vec<usize> = s.elements().iter().map(|&x| self.split(x).0).collect();
        mult_set_from_closed(&self.base, elements.iter().copied(), {
            let mut g = elements.clone();
            g.sort_unstable();
            g.dedup();
            g
        })
    }

    /// Homogeneity in the amalgamation sense: `L = I ⋈^f J`, i.e.
    /// `L = { (i, f(i)+j) : i ∈ I, j ∈ J }` where `I` is the projection.
    pub fn is_homogeneous(&self, l: &Ideal) -> Result<(bool, Option<Ideal>)> {
        if l.ring().id() != self.ring.id() {
            return Err(Error::RingMismatch);
        }
        let mut i_part: Vec<usize> = l.elements().iter().map(|&x| self.split(x).0).collect();
        i_part.sort_unstable();
        i_part.dedup();
        if l.len() != i_part.len() * self.along.len() {
            return Ok((false, None));
        }
        for &i in &i_part {
            for jp in 0..self.along.len() {
                if !l.contains(self.encode(i, jp)) {
                    return Ok((false, None));
                }
            }
        }
        let ideal = ideal_from_elements(&self.base, i_part)?;
        Ok((true, Some(ideal)))
    }
}

pub fn amalgamation(
    base: &Arc<FiniteRing>,
    other: &Arc<FiniteRing>,
    hom: &RingHom,
    along: &Ideal,
) -> Result<Amalgamation> {
    if hom.source().id() != base.id() || hom.target().id() != other.id() {
        return Err(Error::RingMismatch);
    }
    if along.ring().id() != other.id() {
        return Err(Error::RingMismatch);
    }
    let nj = along.len();
    let order = base.order().checked_mul(nj).ok_or(Error::OrderBound {
        requested: usize::MAX,
        max: limits::max_order(),
    })?;
    limits::check_order(order)?;
    let j_elems = along.elements().to_vec();
    let jpos = |j: usize| j_elems.binary_search(&j).expect("closed in J");
    let add = par::map_indices(order, |x| {
        let (a1, p1) = (x / nj, x % nj);
        (0..order)
            .map(|y| {
                let (a2, p2) = (y / nj, y % nj);
                let j = other.add(j_elems[p1], j_elems[p2]);
                (base.add(a1, a2) * nj + jpos(j)) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let mul = par::map_indices(order, |x| {
        let (a1, p1) = (x / nj, x % nj);
        let fa1 = hom.apply(a1);
        let j1 = j_elems[p1];
        (0..order)
            .map(|y| {
                let (a2, p2) = (y / nj, y % nj);
                let fa2 = hom.apply(a2);
                let j2 = j_elems[p2];
                // (f(a1)+j1)(f(a2)+j2) = f(a1 a2) + [f(a1) j2 + f(a2) j1 + j1 j2]
                let j = other.add(
                    other.add(other.mul(fa1, j2), other.mul(fa2, j1)),
                    other.mul(j1, j2),
                );
                (base.mul(a1, a2) * nj + jpos(j)) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let names = (0..order)
        .map(|x| {
            let (a, p) = (x / nj, x % nj);
            let b = other.add(hom.apply(a), j_elems[p]);
            format!("({}, {})", base.element_name(a), other.element_name(b))
        })
        .collect();
    let zpos = jpos(other.zero());
    let ring = FiniteRing::from_parts(
        format!("amalg({}, {}, {})", base.desc(), other.desc(), hom.desc()),
        Backend::Table,
        names,
        add,
        mul,
        base.zero() * nj + zpos,
        base.one() * nj + zpos,
    )?;
    Ok(Amalgamation {
        ring,
        base: Arc::clone(base),
        other: Arc::clone(other),
        hom: hom.clone(),
        along: along.clone(),
    })
}

/// Duplication `A ⋈ I`: the amalgamation along the identity.
pub fn duplication(base: &Arc<FiniteRing>, along: &Ideal) -> Result<Amalgamation> {
    let id = identity_hom(base);
    amalgamation(base, base, &id, along)
}

/// Outcome of localizing at `S`. If `0 ∈ S` the localization collapses to
/// the zero ring, which has no nonzero identity and is only reported, never
/// used downstream.
pub enum Localization {
    Ring {
        ring: Arc<FiniteRing>,
        hom: RingHom,
        /// The stable idempotent power of the product of the generators of `S`.
        idempotent: usize,
    },
    Zero,
}

impl Localization {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Localization::Zero)
    }

    pub fn ring(&self) -> Option<&Arc<FiniteRing>> {
        match self {
            Localization::Ring { ring, .. } => Some(ring),
            Localization::Zero => None,
        }
    }

    pub fn hom(&self) -> Option<&RingHom> {
        match self {
            Localization::Ring { hom, .. } => Some(hom),
            Localization::Zero => None,
        }
    }
}

/// `S^{-1}R` for finite `R`: with `t` the product of the generators of `S`,
/// powers of `t` stabilize at an idempotent `e`, and `S^{-1}R = eR` with
/// identity `e` under the hom `r ↦ e r`. Every image of `S` is checked to be
/// a unit of `eR`, and the kernel is checked to be
/// `{ r : s r = 0 for some s ∈ S }`.
pub fn localize(ring: &Arc<FiniteRing>, s: &MultiplicativeSet) -> Result<Localization> {
    if s.ring().id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    let t = s
        .generators()
        .iter()
        .fold(ring.one(), |acc, &g| ring.mul(acc, g));
    // walk t, t^2, t^3, ... until t^k is idempotent
    let mut e = t;
    for _ in 0..2 * ring.order() {
        if ring.mul(e, e) == e {
            break;
        }
        e = ring.mul(e, t);
    }
    assert_eq!(ring.mul(e, e), e, "power chain must reach an idempotent");
    if e == ring.zero() {
        return Ok(Localization::Zero);
    }
    let mut members: Vec<usize> = (0..ring.order()).map(|r| ring.mul(e, r)).collect();
    members.sort_unstable();
    members.dedup();
    let pos = |x: usize| members.binary_search(&x).expect("closed under e-multiples");
    let new_order = members.len();
    let add = par::map_indices(new_order, |i| {
        (0..new_order)
            .map(|j| pos(ring.add(members[i], members[j])) as u32)
            .collect::<Vec<_>>()
    })
    .concat();
    let mul = par::map_indices(new_order, |i| {
        (0..new_order)
            .map(|j| pos(ring.mul(members[i], members[j])) as u32)
            .collect::<Vec<_>>()
    })
    .concat();
    let names = members
        .iter()
        .map(|&x| ring.element_name(x).to_string())
        .collect();
    let localized = FiniteRing::from_parts(
        format!("localize({}, S)", ring.desc()),
        Backend::Table,
        names,
        add,
        mul,
        pos(ring.zero()),
        pos(e),
    )?;
    let map: Vec<usize> = (0..ring.order()).map(|r| pos(ring.mul(e, r))).collect();
    let hom = make_hom(ring, &localized, &map, format!("loc({})", ring.desc()))?;
    // images of S must be units of eR
    for &sv in s.elements() {
        let img = hom.apply(sv);
        assert!(
            localized.is_unit(img),
            "localization image of {} is not a unit",
            ring.element_name(sv)
        );
    }
    // kernel must be { r : sr = 0 for some s in S }
    for r in 0..ring.order() {
        let in_kernel = hom.apply(r) == localized.zero();
        let annihilated = s.elements().iter().any(|&sv| ring.mul(sv, r) == ring.zero());
        assert_eq!(in_kernel, annihilated, "localization kernel mismatch at {r}");
    }
    Ok(Localization::Ring {
        ring: localized,
        hom,
        idempotent: e,
    })
}

/// Image of a multiplicative set along a hom; realizes `f(S)` (and `S + I`
/// through quotient projections).
pub fn image_mult_set(f: &RingHom, s: &MultiplicativeSet) -> Result<MultiplicativeSet> {
    if s.ring().id() != f.source().id() {
        return Err(Error::RingMismatch);
    }
    let mut elements: Vec<usize> = s.elements().iter().map(|&x| f.apply(x)).collect();
    elements.sort_unstable();
    elements.dedup();
    let generators: Vec<usize> = {
        let mut g: Vec<usize> = s.generators().iter().map(|&x| f.apply(x)).collect();
        g.sort_unstable();
        g.dedup();
        g
    };
    mult_set_from_closed(f.target(), elements.iter().copied(), generators)
}

/// The subring of `B` generated by `gens` (plus 0 and 1), re-indexed, with
/// its embedding hom. Used to realize ring extensions `A ⊆ B`.
pub fn subring_generated(
    ring: &Arc<FiniteRing>,
    gens: &[usize],
) -> Result<(Arc<FiniteRing>, RingHom)> {
    for &g in gens {
        if g >= ring.order() {
            return Err(Error::BadIndex {
                index: g,
                order: ring.order(),
            });
        }
    }
    let mut set = crate::bitset::Bitset::new(ring.order());
    let mut frontier = vec![ring.zero(), ring.one()];
    set.insert(ring.zero());
    set.insert(ring.one());
    for &g in gens {
        if set.insert(g) {
            frontier.push(g);
        }
    }
    while let Some(x) = frontier.pop() {
        let nx = ring.neg(x);
        if set.insert(nx) {
            frontier.push(nx);
        }
        for y in set.to_vec() {
            for z in [ring.add(x, y), ring.mul(x, y)] {
                if set.insert(z) {
                    frontier.push(z);
                }
            }
        }
    }
    let members = set.to_vec();
    let pos = |x: usize| members.binary_search(&x).expect("closed subring");
    let n = members.len();
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let add = par::map_indices(n, |i| {
        (0..n)
            .map(|j| pos(ring.add(members[i], members[j])) as u32)
            .collect::<Vec<_>>()
    })
    .concat();
    let mul = par::map_indices(n, |i| {
        (0..n)
            .map(|j| pos(ring.mul(members[i], members[j])) as u32)
            .collect::<Vec<_>>()
    })
    .concat();
    let names = members
        .iter()
        .map(|&x| ring.element_name(x).to_string())
        .collect();
    let sub = FiniteRing::from_parts(
        format!("subring({})", ring.desc()),
        Backend::Table,
        names,
        add,
        mul,
        pos(ring.zero()),
        pos(ring.one()),
    )?;
    let embed_map: Vec<usize> = members.clone();
    let embedding = make_hom(&sub, ring, &embed_map, format!("embed({})", sub.desc()))?;
    Ok((sub, embedding))
}

/// All ideals `I` of the subring satisfy `IB ∩ A = I`? Hypothesis of the
/// subring descent property.
pub fn extension_contracts_identically(embedding: &RingHom) -> Result<bool> {
    let sub = embedding.source();
    for ideal in crate::ideal::all_ideals(sub) {
        let extended = crate::ideal::extend(&ideal, embedding)?;
        // IB ∩ A, pulled back to subring indices
        let meet: Vec<usize> = (0..sub.order())
            .filter(|&a| extended.contains(embedding.apply(a)))
            .collect();
        if meet != ideal.elements() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generators recomputed for an element set (re-export of the ideal helper
/// for construction callers).
pub fn generators_for(ring: &Arc<FiniteRing>, elements: &[usize]) -> Vec<usize> {
    let set = crate::bitset::Bitset::from_indices(ring.order(), elements.iter().copied());
    minimize_generators(ring, &set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::reduction_hom;
    use crate::ideal::{all_ideals, ideal_generated_by, is_principal};
    use crate::modules::{make_free_module, restrict_scalars};
    use crate::mulset::make_mult_set;
    use crate::ring::{make_gf, make_poly_quotient, make_zmod};

    fn f2_plane_extension() -> TrivialExtension {
        let f2 = make_zmod(2).unwrap();
        let plane = make_free_module(&f2, 2).unwrap();
        trivial_extension(&f2, &plane).unwrap()
    }

    #[test]
    fn product_basics() {
        let z2 = make_zmod(2).unwrap();
        let z3 = make_zmod(3).unwrap();
        let p = product(&z2, &z3).unwrap();
        assert_eq!(p.ring.order(), 6);
        assert!(p.ring.verify_ring_axioms().is_ok());
        // (1,0)*(0,1) = (0,0)
        let a = p.pair(1, 0);
        let b = p.pair(0, 1);
        assert_eq!(p.ring.mul(a, b), p.ring.zero());
        // ideal lattice matches zmod(6) through CRT
        assert_eq!(all_ideals(&p.ring).len(), all_ideals(&make_zmod(6).unwrap()).len());
    }

    #[test]
    fn product_lattice_counts() {
        let z4 = make_zmod(4).unwrap();
        let gf4 = make_gf(2, 2).unwrap();
        let p = product(&z4, &gf4).unwrap();
        assert_eq!(all_ideals(&p.ring).len(), 6);
    }

    #[test]
    fn product_ideals_are_products_of_component_ideals() {
        let z4 = make_zmod(4).unwrap();
        let z6 = make_zmod(6).unwrap();
        let p = product(&z4, &z6).unwrap();
        let lattice = all_ideals(&p.ring);
        let left = all_ideals(&z4);
        let right = all_ideals(&z6);
        assert_eq!(lattice.len(), left.len() * right.len());
        for i1 in &left {
            for i2 in &right {
                let prod = p.product_ideal(i1, i2).unwrap();
                assert!(lattice.iter().any(|l| l.elements() == prod.elements()));
            }
        }
    }

    #[test]
    fn quotient_of_zmod12_by_four() {
        let r = make_zmod(12).unwrap();
        let four = ideal_generated_by(&r, &[4]).unwrap();
        let q = quotient_ring(&r, &four).unwrap();
        assert_eq!(q.ring.order(), 4);
        // canonical reps are 0..3, so tables coincide with zmod(4)
        let z4 = make_zmod(4).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(q.ring.add(a, b), z4.add(a, b));
                assert_eq!(q.ring.mul(a, b), z4.mul(a, b));
            }
        }
    }

    #[test]
    fn quotient_by_zero_is_identity_shaped() {
        let r = make_zmod(10).unwrap();
        let zero = ideal_generated_by(&r, &[]).unwrap();
        let q = quotient_ring(&r, &zero).unwrap();
        assert_eq!(q.ring.order(), 10);
        for a in 0..10 {
            for b in 0..10 {
                assert_eq!(q.ring.add(a, b), r.add(a, b));
            }
        }
    }

    #[test]
    fn quotient_rejects_whole_ring() {
        let r = make_zmod(6).unwrap();
        let whole = ideal_generated_by(&r, &[1]).unwrap();
        assert!(matches!(quotient_ring(&r, &whole), Err(Error::ImproperIdeal)));
    }

    #[test]
    fn projected_mult_set_realizes_s_plus_i() {
        let r = make_zmod(12).unwrap();
        let four = ideal_generated_by(&r, &[4]).unwrap();
        let q = quotient_ring(&r, &four).unwrap();
        let s = make_mult_set(&r, &[2]).unwrap(); // {1,2,4,8}
        let s_plus = q.project_mult_set(&s).unwrap();
        assert_eq!(s_plus.elements(), &[0, 1, 2]);
    }

    #[test]
    fn trivial_extension_structure() {
        let ext = f2_plane_extension();
        assert_eq!(ext.ring.order(), 8);
        assert!(ext.ring.verify_ring_axioms().is_ok());
        assert_eq!(ext.ring.one(), ext.pair(1, 0));
        // (0,m)(0,m') = (0,0)
        for m in 0..4 {
            for mp in 0..4 {
                assert_eq!(
                    ext.ring.mul(ext.pair(0, m), ext.pair(0, mp)),
                    ext.ring.zero()
                );
            }
        }
    }

    #[test]
    fn idealized_plane_is_not_bezout() {
        let ext = f2_plane_extension();
        let lattice = all_ideals(&ext.ring);
        // 0, three lines, 0 ∝ E, whole ring
        assert_eq!(lattice.len(), 6);
        let zero_e: Vec<usize> = (0..4).map(|e| ext.pair(0, e)).collect();
        let not_principal: Vec<_> = lattice
            .iter()
            .filter(|i| !is_principal(i).is_true())
            .collect();
        assert_eq!(not_principal.len(), 1);
        assert_eq!(not_principal[0].elements(), zero_e.as_slice());
    }

    #[test]
    fn dual_numbers_match_idealization_of_line() {
        // Z/2Z ∝ Z/2Z is Z/2[t]/(t^2) after matching indices
        let f2 = make_zmod(2).unwrap();
        let line = make_free_module(&f2, 1).unwrap();
        let ext = trivial_extension(&f2, &line).unwrap();
        let dual = make_poly_quotient(2, &[0, 0, 1]).unwrap();
        // both index (a, e) as a*2 + e ~ constant + t coefficient... up to swap
        // trivext: (a,e) ↦ a*2+e; dual numbers: c0 + 2*c1 with t = index 2.
        // map (a,e) ↦ a + 2e matches them
        let iso = |x: usize| {
            let (a, e) = ext.split(x);
            a + 2 * e
        };
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(iso(ext.ring.add(x, y)), dual.add(iso(x), iso(y)));
                assert_eq!(iso(ext.ring.mul(x, y)), dual.mul(iso(x), iso(y)));
            }
        }
    }

    #[test]
    fn round_trip_extension_through_raw_tables() {
        let ext = f2_plane_extension();
        let n = ext.ring.order();
        let add: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| ext.ring.add(a, b)).collect())
            .collect();
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| ext.ring.mul(a, b)).collect())
            .collect();
        let again =
            crate::ring::make_table_ring(&add, &mul, ext.ring.zero(), ext.ring.one()).unwrap();
        assert_eq!(again.order(), 8);
    }

    #[test]
    fn homogeneity_decisions() {
        let ext = f2_plane_extension();
        // 0 ∝ F for a line
        let line = submodule_generated(&ext.module, &[1]).unwrap();
        let zero_f = ext.zero_extension_ideal(&line).unwrap();
        let (homog, parts) = ext.is_homogeneous(&zero_f).unwrap();
        assert!(homog);
        let (i, f) = parts.unwrap();
        assert!(i.is_zero());
        assert_eq!(f.elements(), line.elements());
        // whole ring
        let whole = ideal_generated_by(&ext.ring, &[ext.ring.one()]).unwrap();
        let (homog, parts) = ext.is_homogeneous(&whole).unwrap();
        assert!(homog);
        let (i, f) = parts.unwrap();
        assert!(i.is_whole_ring());
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn inhomogeneous_ideal_detected() {
        // Z/4Z ∝ Z/2Z with reduction action; the ideal generated by (2,1)
        // projects onto {0,2} x {0,1} but only contains two elements.
        let z4 = make_zmod(4).unwrap();
        let z2 = make_zmod(2).unwrap();
        let f = reduction_hom(&z4, &z2).unwrap();
        let m = restrict_scalars(&f, &make_free_module(&z2, 1).unwrap()).unwrap();
        let ext = trivial_extension(&z4, &m).unwrap();
        let l = ideal_generated_by(&ext.ring, &[ext.pair(2, 1)]).unwrap();
        assert_eq!(l.len(), 2);
        let (homog, _) = ext.is_homogeneous(&l).unwrap();
        assert!(!homog);
    }

    #[test]
    fn duplication_along_two() {
        let z4 = make_zmod(4).unwrap();
        let two = ideal_generated_by(&z4, &[2]).unwrap();
        let d = duplication(&z4, &two).unwrap();
        assert_eq!(d.ring.order(), 8);
        assert!(d.ring.verify_ring_axioms().is_ok());
        let proj = d.projection_hom().unwrap();
        assert!(proj.is_surjective());
    }

    #[test]
    fn duplication_along_zero_is_isomorphic_to_base() {
        let z6 = make_zmod(6).unwrap();
        let zero = ideal_generated_by(&z6, &[]).unwrap();
        let d = duplication(&z6, &zero).unwrap();
        assert_eq!(d.ring.order(), 6);
        // index map x ↦ (x, 0) is the identity on tables
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(d.ring.add(a, b), z6.add(a, b));
                assert_eq!(d.ring.mul(a, b), z6.mul(a, b));
            }
        }
    }

    #[test]
    fn amalgamation_of_product_projection() {
        let z4 = make_zmod(4).unwrap();
        let gf4 = make_gf(2, 2).unwrap();
        let p = product(&z4, &gf4).unwrap();
        let map: Vec<usize> = (0..p.ring.order()).map(|x| p.split(x).0).collect();
        let f = make_hom(&p.ring, &z4, &map, "proj1").unwrap();
        let two = ideal_generated_by(&z4, &[2]).unwrap();
        let am = amalgamation(&p.ring, &z4, &f, &two).unwrap();
        assert_eq!(am.ring.order(), 32);
        assert!(am.ring.verify_ring_axioms().is_ok());
    }

    #[test]
    fn amalgamation_elements_form_a_subring_of_the_pair_product() {
        let z4 = make_zmod(4).unwrap();
        let two = ideal_generated_by(&z4, &[2]).unwrap();
        let d = duplication(&z4, &two).unwrap();
        // closure under the product ring operations of A x A
        let p = product(&z4, &z4).unwrap();
        let members: Vec<usize> = (0..d.ring.order())
            .map(|x| {
                let (a, _) = d.split(x);
                p.pair(a, d.b_part(x))
            })
            .collect();
        for &x in &members {
            for &y in &members {
                assert!(members.contains(&p.ring.add(x, y)));
                assert!(members.contains(&p.ring.mul(x, y)));
            }
        }
        assert_eq!(members.len(), z4.order() * two.len());
    }

    #[test]
    fn localization_of_zmod12_at_two() {
        let r = make_zmod(12).unwrap();
        let s = make_mult_set(&r, &[2]).unwrap();
        match localize(&r, &s).unwrap() {
            Localization::Ring {
                ring: loc,
                hom,
                idempotent,
            } => {
                assert_eq!(idempotent, 4);
                assert_eq!(loc.order(), 3); // {0,4,8} is Z/3Z
                for &sv in s.elements() {
                    assert!(loc.is_unit(hom.apply(sv)));
                }
                assert!(is_principal(&ideal_generated_by(&loc, &[1]).unwrap()).is_true());
            }
            Localization::Zero => panic!("unexpected zero localization"),
        }
    }

    #[test]
    fn localization_at_units_is_identity_sized() {
        let r = make_zmod(9).unwrap();
        let trivial = make_mult_set(&r, &[]).unwrap();
        match localize(&r, &trivial).unwrap() {
            Localization::Ring { ring: loc, idempotent, .. } => {
                assert_eq!(idempotent, r.one());
                assert_eq!(loc.order(), 9);
            }
            Localization::Zero => panic!("unexpected zero localization"),
        }
        let units = make_mult_set(&r, &[2]).unwrap();
        assert!(units.all_units());
        match localize(&r, &units).unwrap() {
            Localization::Ring { ring: loc, .. } => assert_eq!(loc.order(), 9),
            Localization::Zero => panic!("unexpected zero localization"),
        }
    }

    #[test]
    fn localization_with_zero_is_degenerate() {
        let r = make_zmod(4).unwrap();
        let s = make_mult_set(&r, &[2]).unwrap(); // contains 0
        assert!(localize(&r, &s).unwrap().is_degenerate());
    }

    #[test]
    fn localization_is_idempotent_up_to_tables() {
        let r = make_zmod(12).unwrap();
        let s = make_mult_set(&r, &[2]).unwrap();
        let first = localize(&r, &s).unwrap();
        let (loc, hom) = match &first {
            Localization::Ring { ring, hom, .. } => (ring, hom),
            Localization::Zero => unreachable!(),
        };
        let s_image = image_mult_set(hom, &s).unwrap();
        match localize(loc, &s_image).unwrap() {
            Localization::Ring { ring: loc2, .. } => {
                assert_eq!(loc2.order(), loc.order());
                for a in 0..loc.order() {
                    for b in 0..loc.order() {
                        assert_eq!(loc2.add(a, b), loc.add(a, b));
                        assert_eq!(loc2.mul(a, b), loc.mul(a, b));
                    }
                }
            }
            Localization::Zero => panic!("unexpected zero localization"),
        }
    }

    #[test]
    fn image_mult_set_examples() {
        let a = make_zmod(12).unwrap();
        let b = make_zmod(4).unwrap();
        let f = reduction_hom(&a, &b).unwrap();
        let s = make_mult_set(&a, &[2]).unwrap();
        let img = image_mult_set(&f, &s).unwrap();
        assert_eq!(img.elements(), &[0, 1, 2]);
        let id = identity_hom(&a);
        assert_eq!(image_mult_set(&id, &s).unwrap().elements(), s.elements());
        let one = make_mult_set(&a, &[]).unwrap();
        assert_eq!(image_mult_set(&f, &one).unwrap().elements(), &[1]);
    }

    #[test]
    fn subring_generation() {
        let z12 = make_zmod(12).unwrap();
        // subring generated by 4: {0,4,8} + 1 → {0,1,4,5,8,9,...} closure
        let (sub, embed) = subring_generated(&z12, &[4]).unwrap();
        assert!(sub.verify_ring_axioms().is_ok());
        assert!(embed.image().len() == sub.order());
        // a subring of a product: the diagonal
        let p = product(&make_zmod(2).unwrap(), &make_zmod(2).unwrap()).unwrap();
        let diag = p.pair(1, 1);
        let (sub, _) = subring_generated(&p.ring, &[diag]).unwrap();
        assert_eq!(sub.order(), 2);
    }
}
