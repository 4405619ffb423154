//! Finite modules over a [`FiniteRing`] with verified scalar action.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use crate::bitset::Bitset;
use crate::hom::RingHom;
use crate::mulset::MultiplicativeSet;
use crate::par;
use crate::report::{Verdict, Witness, WitnessReport, FLAG_DEGENERATE_MULT_SET};
use crate::ring::{AxiomViolation, FiniteRing};
use crate::{limits, Error, Result};

pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    desc: String,
    order: usize,
    zero: usize,
    add: Vec<u32>,
    /// `act[r * order + m]` is the action of ring element `r` on `m`.
    act: Vec<u32>,
    names: Vec<String>,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteModule({}, order {})", self.desc, self.order)
    }
}

impl FiniteModule {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn order(&self) -> usize {
        self.order
    }
    pub fn zero(&self) -> usize {
        self.zero
    }
    pub fn desc(&self) -> &str {
        &self.desc
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.act[r * self.order + m] as usize
    }

    pub fn neg(&self, m: usize) -> usize {
        (0..self.order)
            .find(|&b| self.add(m, b) == self.zero)
            .expect("verified module has additive inverses")
    }

    pub fn element_name(&self, m: usize) -> &str {
        &self.names[m]
    }

    /// The cyclic submodule `A·m`. Already closed under addition because
    /// `rm + r'm = (r + r')m`.
    pub fn cyclic(&self, m: usize) -> Bitset {
        let mut set = Bitset::new(self.order);
        for r in 0..self.ring.order() {
            set.insert(self.act(r, m));
        }
        set
    }

    pub fn verify_module_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        verify_module_raw(
            &self.ring,
            self.order,
            self.zero,
            |a, b| self.add(a, b),
            |r, m| self.act(r, m),
        )
    }
}

fn verify_module_raw(
    ring: &FiniteRing,
    order: usize,
    zero: usize,
    add: impl Fn(usize, usize) -> usize + Sync,
    act: impl Fn(usize, usize) -> usize + Sync,
) -> std::result::Result<(), AxiomViolation> {
    let fail = |axiom, witness| Err(AxiomViolation { axiom, witness });
    let n = order;
    if let Some(x) = par::find_first_index(n, |x| add(x, zero) != x) {
        return fail("module-add-identity", vec![x]);
    }
    if let Some(x) = par::find_first_index(n, |x| (0..n).all(|y| add(x, y) != zero)) {
        return fail("module-add-inverse", vec![x]);
    }
    if let Some(x) = par::find_first_index(n, |x| (0..n).any(|y| add(x, y) != add(y, x))) {
        let y = (0..n).find(|&y| add(x, y) != add(y, x)).unwrap();
        return fail("module-add-commutative", vec![x, y]);
    }
    if let Some(x) = par::find_first_index(n, |x| {
        (0..n).any(|y| (0..n).any(|z| add(add(x, y), z) != add(x, add(y, z))))
    }) {
        for y in 0..n {
            for z in 0..n {
                if add(add(x, y), z) != add(x, add(y, z)) {
                    return fail("module-add-associative", vec![x, y, z]);
                }
            }
        }
    }
    if let Some(m) = par::find_first_index(n, |m| act(ring.one(), m) != m) {
        return fail("unital-action", vec![m]);
    }
    let ro = ring.order();
    // biadditivity in the module argument: r(m + m') = rm + rm'
    if let Some(r) = par::find_first_index(ro, |r| {
        (0..n).any(|m1| (0..n).any(|m2| act(r, add(m1, m2)) != add(act(r, m1), act(r, m2))))
    }) {
        for m1 in 0..n {
            for m2 in 0..n {
                if act(r, add(m1, m2)) != add(act(r, m1), act(r, m2)) {
                    return fail("action-additive-in-module", vec![r, m1, m2]);
                }
            }
        }
    }
    // biadditivity in the ring argument: (r + r')m = rm + r'm
    if let Some(r1) = par::find_first_index(ro, |r1| {
        (0..ro).any(|r2| (0..n).any(|m| act(ring.add(r1, r2), m) != add(act(r1, m), act(r2, m))))
    }) {
        for r2 in 0..ro {
            for m in 0..n {
                if act(ring.add(r1, r2), m) != add(act(r1, m), act(r2, m)) {
                    return fail("action-additive-in-ring", vec![r1, r2, m]);
                }
            }
        }
    }
    // associativity over ring multiplication: (r r')m = r(r'm)
    if let Some(r1) = par::find_first_index(ro, |r1| {
        (0..ro).any(|r2| (0..n).any(|m| act(ring.mul(r1, r2), m) != act(r1, act(r2, m))))
    }) {
        for r2 in 0..ro {
            for m in 0..n {
                if act(ring.mul(r1, r2), m) != act(r1, act(r2, m)) {
                    return fail("action-associative", vec![r1, r2, m]);
                }
            }
        }
    }
    Ok(())
}

/// Build a module from raw tables, verifying every axiom.
pub fn make_module(
    ring: &Arc<FiniteRing>,
    add: &[Vec<usize>],
    act: &[Vec<usize>],
    zero: usize,
) -> Result<Arc<FiniteModule>> {
    let order = add.len();
    if order == 0 || zero >= order {
        return Err(Error::MalformedTable);
    }
    limits::check_order(order)?;
    let square = add.len() == order
        && add
            .iter()
            .all(|row| row.len() == order && row.iter().all(|&x| x < order));
    let action_ok = act.len() == ring.order()
        && act
            .iter()
            .all(|row| row.len() == order && row.iter().all(|&x| x < order));
    if !square || !action_ok {
        return Err(Error::MalformedTable);
    }
    verify_module_raw(ring, order, zero, |a, b| add[a][b], |r, m| act[r][m])
        .map_err(Error::Axiom)?;
    let names = (0..order).map(|i| format!("m{i}")).collect();
    Ok(Arc::new(FiniteModule {
        ring: Arc::clone(ring),
        desc: format!("module(order {order} over {})", ring.desc()),
        order,
        zero,
        add: add.iter().flat_map(|r| r.iter().map(|&x| x as u32)).collect(),
        act: act.iter().flat_map(|r| r.iter().map(|&x| x as u32)).collect(),
        names,
    }))
}

/// The free module `R^k` with componentwise structure. Element index encodes
/// the coordinate vector in base `|R|`, first coordinate least significant.
pub fn make_free_module(ring: &Arc<FiniteRing>, rank: u32) -> Result<Arc<FiniteModule>> {
    if rank == 0 {
        return Err(Error::Unsupported("free module rank must be >= 1".into()));
    }
    let q = ring.order();
    let order = q
        .checked_pow(rank)
        .ok_or(Error::OrderBound {
            requested: usize::MAX,
            max: limits::max_order(),
        })?;
    limits::check_order(order)?;
    let k = rank as usize;
    let decode = |mut i: usize| -> Vec<usize> {
        let mut coords = vec![0usize; k];
        for c in coords.iter_mut() {
            *c = i % q;
            i /= q;
        }
        coords
    };
    let encode = |coords: &[usize]| -> usize {
        coords.iter().rev().fold(0usize, |acc, &c| acc * q + c)
    };
    let add = par::map_indices(order, |a| {
        let ca = decode(a);
        (0..order)
            .map(|b| {
                let cb = decode(b);
                let sum: Vec<usize> =
                    ca.iter().zip(&cb).map(|(&x, &y)| ring.add(x, y)).collect();
                encode(&sum) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let act = par::map_indices(ring.order(), |r| {
        (0..order)
            .map(|m| {
                let cm = decode(m);
                let prod: Vec<usize> = cm.iter().map(|&x| ring.mul(r, x)).collect();
                encode(&prod) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let names = (0..order)
        .map(|i| {
            let coords = decode(i);
            let parts: Vec<&str> = coords.iter().map(|&c| ring.element_name(c)).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    Ok(Arc::new(FiniteModule {
        ring: Arc::clone(ring),
        desc: format!("free({}, {rank})", ring.desc()),
        order,
        zero: 0,
        add,
        act,
        names,
    }))
}

/// Pull a module over `B` back to a module over `A` along `f: A -> B`
/// (restriction of scalars): `a·m := f(a)·m`.
pub fn restrict_scalars(f: &RingHom, module: &Arc<FiniteModule>) -> Result<Arc<FiniteModule>> {
    if !Arc::ptr_eq(f.target(), module.ring()) && f.target().id() != module.ring().id() {
        return Err(Error::ModuleRingMismatch);
    }
    let a = f.source();
    let order = module.order();
    let act = par::map_indices(a.order(), |r| {
        let fr = f.apply(r);
        (0..order).map(|m| module.act(fr, m) as u32).collect::<Vec<_>>()
    })
    .concat();
    let module_add = (0..order)
        .flat_map(|x| (0..order).map(move |y| (x, y)))
        .map(|(x, y)| module.add(x, y) as u32)
        .collect();
    Ok(Arc::new(FiniteModule {
        ring: Arc::clone(a),
        desc: format!("restrict({}, {})", f.desc(), module.desc()),
        order,
        zero: module.zero(),
        add: module_add,
        act,
        names: (0..order).map(|i| module.element_name(i).to_string()).collect(),
    }))
}

/// A submodule, kept as an index set into its parent module.
#[derive(Clone)]
pub struct Submodule {
    module: Arc<FiniteModule>,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule({:?} of {})", self.elements, self.module.desc())
    }
}

impl Submodule {
    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
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
        self.elements.is_empty()
    }
    pub fn contains(&self, m: usize) -> bool {
        self.elements.binary_search(&m).is_ok()
    }
    pub fn element_set(&self) -> Bitset {
        Bitset::from_indices(self.module.order(), self.elements.iter().copied())
    }
}

/// Smallest submodule containing `gens`: close under addition and the ring
/// action by worklist. Empty generators give the zero submodule.
pub fn submodule_generated(module: &Arc<FiniteModule>, gens: &[usize]) -> Result<Submodule> {
    for &g in gens {
        if g >= module.order() {
            return Err(Error::BadIndex {
                index: g,
                order: module.order(),
            });
        }
    }
    let mut set = Bitset::new(module.order());
    set.insert(module.zero());
    let mut frontier = vec![module.zero()];
    for &g in gens {
        if set.insert(g) {
            frontier.push(g);
        }
    }
    while let Some(x) = frontier.pop() {
        for r in 0..module.ring().order() {
            let rx = module.act(r, x);
            if set.insert(rx) {
                frontier.push(rx);
            }
        }
        for y in set.to_vec() {
            let s = module.add(x, y);
            if set.insert(s) {
                frontier.push(s);
            }
        }
    }
    let mut generators = gens.to_vec();
    generators.dedup();
    Ok(Submodule {
        module: Arc::clone(module),
        elements: set.to_vec(),
        generators,
    })
}

/// Every submodule of `module`: cyclic submodules closed under pairwise sums.
pub fn all_submodules(module: &Arc<FiniteModule>) -> Vec<Submodule> {
    let order = module.order();
    let mut seen: Vec<(Bitset, Vec<usize>)> = Vec::new();
    let mut push = |set: Bitset, gens: Vec<usize>, work: &mut Vec<usize>| {
        if !seen.iter().any(|(s, _)| *s == set) {
            seen.push((set, gens));
            work.push(seen.len() - 1);
        }
    };
    let mut work: Vec<usize> = Vec::new();
    for m in 0..order {
        let set = module.cyclic(m);
        let gens = if set.len() == 1 { vec![] } else { vec![m] };
        push(set, gens, &mut work);
    }
    // close under sums: the sum of two submodules is the set of pairwise sums
    while let Some(i) = work.pop() {
        for j in 0..seen.len() {
            let mut sum = Bitset::new(order);
            for x in seen[i].0.iter() {
                for y in seen[j].0.iter() {
                    sum.insert(module.add(x, y));
                }
            }
            if !seen.iter().any(|(s, _)| *s == sum) {
                let gens: Vec<usize> = {
                    let mut g = seen[i].1.clone();
                    g.extend(&seen[j].1);
                    g.sort_unstable();
                    g.dedup();
                    g
                };
                seen.push((sum, gens));
                work.push(seen.len() - 1);
            }
        }
    }
    let mut subs: Vec<Submodule> = seen
        .into_iter()
        .map(|(set, gens)| Submodule {
            module: Arc::clone(module),
            elements: set.to_vec(),
            generators: gens,
        })
        .collect();
    subs.sort_by(|a, b| {
        (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements))
    });
    subs
}

/// Decide whether `F` is S-cyclic: some `s ∈ S`, `e ∈ F` with
/// `sF ⊆ Ae ⊆ F`. The multiplicative set lives on the ring side.
pub fn is_s_cyclic(submodule: &Submodule, s: &MultiplicativeSet) -> Result<WitnessReport> {
    if s.ring().id() != submodule.module().ring().id() {
        return Err(Error::RingMismatch);
    }
    let start = Instant::now();
    let module = submodule.module();
    let f_set = submodule.element_set();
    let mut report = None;
    'outer: for &sv in s.elements() {
        // s·F as a set
        let mut sf = Bitset::new(module.order());
        for &x in submodule.elements() {
            sf.insert(module.act(sv, x));
        }
        for &e in submodule.elements() {
            let ae = module.cyclic(e);
            if sf.is_subset(&ae) && ae.is_subset(&f_set) {
                report = Some(WitnessReport::found(Witness::SCyclic { s: sv, e }));
                break 'outer;
            }
        }
    }
    let mut report = report.unwrap_or_else(|| {
        WitnessReport::exhausted_false((s.len() * submodule.len()) as u64)
    });
    if s.contains_zero() {
        report = report.with_flag(FLAG_DEGENERATE_MULT_SET);
    }
    debug_assert!(report.verdict != Verdict::NotFound);
    Ok(report.with_elapsed(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::reduction_hom;
    use crate::mulset::make_mult_set;
    use crate::ring::make_zmod;

    fn z2_squared() -> Arc<FiniteModule> {
        let z2 = make_zmod(2).unwrap();
        make_free_module(&z2, 2).unwrap()
    }

    #[test]
    fn free_module_orders() {
        let z2 = make_zmod(2).unwrap();
        assert_eq!(make_free_module(&z2, 2).unwrap().order(), 4);
        let z4 = make_zmod(4).unwrap();
        assert_eq!(make_free_module(&z4, 1).unwrap().order(), 4);
        let gf4 = crate::ring::make_gf(2, 2).unwrap();
        assert_eq!(make_free_module(&gf4, 2).unwrap().order(), 16);
    }

    #[test]
    fn free_modules_verify() {
        let m = z2_squared();
        assert!(m.verify_module_axioms().is_ok());
    }

    #[test]
    fn restriction_of_scalars_verifies() {
        // Z/4Z acting on (Z/2Z)^2 through reduction.
        let z4 = make_zmod(4).unwrap();
        let z2 = make_zmod(2).unwrap();
        let f = reduction_hom(&z4, &z2).unwrap();
        let m2 = make_free_module(&z2, 2).unwrap();
        let m = restrict_scalars(&f, &m2).unwrap();
        assert_eq!(m.order(), 4);
        assert_eq!(m.ring().id(), z4.id());
        assert!(m.verify_module_axioms().is_ok());
    }

    #[test]
    fn raw_tables_round_trip_and_reject() {
        let z2 = make_zmod(2).unwrap();
        let m = make_free_module(&z2, 1).unwrap();
        let add: Vec<Vec<usize>> = (0..m.order())
            .map(|a| (0..m.order()).map(|b| m.add(a, b)).collect())
            .collect();
        let act: Vec<Vec<usize>> = (0..z2.order())
            .map(|r| (0..m.order()).map(|x| m.act(r, x)).collect())
            .collect();
        assert!(make_module(&z2, &add, &act, 0).is_ok());

        // break the unital action
        let mut bad = act.clone();
        bad[1] = vec![0, 0];
        match make_module(&z2, &add, &bad, 0) {
            Err(Error::Axiom(v)) => assert_eq!(v.axiom, "unital-action"),
            other => panic!("expected unital-action, got {other:?}"),
        }
    }

    #[test]
    fn submodule_closures() {
        let m = z2_squared();
        // [1,0] is index 1
        let line = submodule_generated(&m, &[1]).unwrap();
        assert_eq!(line.elements(), &[0, 1]);
        let zero = submodule_generated(&m, &[]).unwrap();
        assert_eq!(zero.elements(), &[0]);
        let full = submodule_generated(&m, &[1, 2]).unwrap();
        assert_eq!(full.elements(), &[0, 1, 2, 3]);
    }

    #[test]
    fn submodule_generation_idempotent() {
        let m = z2_squared();
        let full = submodule_generated(&m, &[1, 2]).unwrap();
        let again = submodule_generated(&m, full.elements()).unwrap();
        assert_eq!(full.elements(), again.elements());
    }

    #[test]
    fn submodule_lattice_of_plane() {
        let m = z2_squared();
        // 0, three lines, whole plane
        assert_eq!(all_submodules(&m).len(), 5);
    }

    #[test]
    fn s_cyclic_cases() {
        let z4 = make_zmod(4).unwrap();
        let z2 = make_zmod(2).unwrap();
        let f = reduction_hom(&z4, &z2).unwrap();
        let plane = restrict_scalars(&f, &make_free_module(&z2, 2).unwrap()).unwrap();
        let whole = submodule_generated(&plane, &[1, 2]).unwrap();

        // degenerate: 0 in S absorbs everything
        let s_deg = make_mult_set(&z4, &[2]).unwrap();
        assert!(s_deg.contains_zero());
        let rep = is_s_cyclic(&whole, &s_deg).unwrap();
        assert!(rep.is_true());
        assert_eq!(rep.witness, Some(Witness::SCyclic { s: 0, e: 0 }));
        assert!(rep.flags.contains(&FLAG_DEGENERATE_MULT_SET));

        // units only: the plane is not cyclic
        let s_units = make_mult_set(&z4, &[3]).unwrap();
        let rep = is_s_cyclic(&whole, &s_units).unwrap();
        assert!(rep.verdict.is_false());
        assert_eq!(rep.exhaustion, Some(8));

        // a cyclic submodule with 1 in S
        let line = submodule_generated(&plane, &[1]).unwrap();
        let rep = is_s_cyclic(&line, &make_mult_set(&z4, &[]).unwrap()).unwrap();
        assert!(rep.is_true());
        assert_eq!(rep.witness, Some(Witness::SCyclic { s: 1, e: 1 }));
    }
}
