//! Finite commutative rings with nonzero identity.
//!
//! A [`FiniteRing`] materializes full addition and multiplication tables no
//! matter how it was built, so element arithmetic is two loads. Rings are
//! immutable once constructed and are shared via `Arc` by everything
//! downstream (ideals, modules, deciders), which makes read-only parallel
//! scans safe.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::bitset::Bitset;
use crate::par;
use crate::{limits, Error, Result};

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a constructed ring. Structural twins built twice get
/// different ids; everything that mixes elements checks ids first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

fn fresh_id() -> RingId {
    RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    /// Residue arithmetic modulo `n`; index `i` is the residue `i`.
    Residue { modulus: u64 },
    /// Raw tables, either user-supplied or produced by a construction.
    Table,
    /// `(Z/pZ)[t] / (f)`; index encodes the coefficient vector of a residue
    /// polynomial in base `p`, least-significant coefficient first.
    PolyQuotient { p: u64, modulus: Vec<u64> },
}

/// A failed ring or module axiom together with the elements that broke it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom '{}' fails at {:?}", self.axiom, self.witness)
    }
}

impl std::error::Error for AxiomViolation {}

pub struct FiniteRing {
    id: RingId,
    desc: String,
    order: usize,
    zero: usize,
    one: usize,
    backend: Backend,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    units: Bitset,
    names: Vec<String>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.desc, self.order)
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl Eq for FiniteRing {}

/// An element tagged with its owning ring, for API boundaries that cannot
/// rely on context to keep indices straight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingElement {
    pub ring: RingId,
    pub index: usize,
}

impl FiniteRing {
    pub fn id(&self) -> RingId {
        self.id
    }
    pub fn order(&self) -> usize {
        self.order
    }
    pub fn zero(&self) -> usize {
        self.zero
    }
    pub fn one(&self) -> usize {
        self.one
    }
    pub fn backend(&self) -> &Backend {
        &self.backend
    }
    pub fn desc(&self) -> &str {
        &self.desc
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.one;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.units.contains(a)
    }

    pub fn units(&self) -> Vec<usize> {
        self.units.to_vec()
    }

    pub fn units_set(&self) -> &Bitset {
        &self.units
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn elem(&self, index: usize) -> Result<RingElement> {
        if index < self.order {
            Ok(RingElement {
                ring: self.id,
                index,
            })
        } else {
            Err(Error::BadIndex {
                index,
                order: self.order,
            })
        }
    }

    pub fn elem_add(&self, a: RingElement, b: RingElement) -> Result<RingElement> {
        if a.ring != self.id || b.ring != self.id {
            return Err(Error::RingMismatch);
        }
        Ok(RingElement {
            ring: self.id,
            index: self.add(a.index, b.index),
        })
    }

    pub fn elem_mul(&self, a: RingElement, b: RingElement) -> Result<RingElement> {
        if a.ring != self.id || b.ring != self.id {
            return Err(Error::RingMismatch);
        }
        Ok(RingElement {
            ring: self.id,
            index: self.mul(a.index, b.index),
        })
    }

    /// The principal multiples `{ r*a : r in R }`, as a bitset. For `a` in an
    /// ideal this is exactly the principal ideal `Ra`.
    pub fn multiples(&self, a: usize) -> Bitset {
        let mut set = Bitset::new(self.order);
        for r in 0..self.order {
            set.insert(self.mul(r, a));
        }
        set
    }

    /// Exhaustive check of every commutative-unital-ring axiom. Returns the
    /// first failure in a fixed scan order.
    pub fn verify_ring_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        verify_axioms_raw(
            self.order,
            self.zero,
            self.one,
            |a, b| self.add(a, b),
            |a, b| self.mul(a, b),
        )
    }

    /// Build a ring from pre-validated tables. `debug_assert`s the axioms;
    /// table backends coming from user input must go through
    /// [`make_table_ring`] instead, which always verifies.
    pub(crate) fn from_parts(
        desc: String,
        backend: Backend,
        names: Vec<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
    ) -> Result<Arc<FiniteRing>> {
        let order = names.len();
        if order < 2 || zero == one {
            return Err(Error::InvalidOrder(order));
        }
        limits::check_order(order)?;
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(mul.len(), order * order);
        debug_assert!(
            verify_axioms_raw(
                order,
                zero,
                one,
                |a, b| add[a * order + b] as usize,
                |a, b| mul[a * order + b] as usize
            )
            .is_ok(),
            "construction produced a non-ring: {desc}"
        );
        let mut neg = vec![0u32; order];
        for a in 0..order {
            let mut found = false;
            for b in 0..order {
                if add[a * order + b] as usize == zero {
                    neg[a] = b as u32;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::Axiom(AxiomViolation {
                    axiom: "add-inverse",
                    witness: vec![a],
                }));
            }
        }
        let mut units = Bitset::new(order);
        for a in 0..order {
            if (0..order).any(|b| mul[a * order + b] as usize == one) {
                units.insert(a);
            }
        }
        Ok(Arc::new(FiniteRing {
            id: fresh_id(),
            desc,
            order,
            zero,
            one,
            backend,
            add,
            mul,
            neg,
            units,
            names,
        }))
    }
}

fn verify_axioms_raw(
    order: usize,
    zero: usize,
    one: usize,
    add: impl Fn(usize, usize) -> usize + Sync,
    mul: impl Fn(usize, usize) -> usize + Sync,
) -> std::result::Result<(), AxiomViolation> {
    let fail = |axiom, witness| Err(AxiomViolation { axiom, witness });
    if order < 2 || zero == one {
        return fail("nonzero-identity", vec![zero, one]);
    }
    // Identity laws first: they localize corrupted zero/one indices.
    if let Some(x) = par::find_first_index(order, |x| add(x, zero) != x) {
        return fail("add-identity", vec![x, zero]);
    }
    if let Some(x) = par::find_first_index(order, |x| mul(x, one) != x || mul(one, x) != x) {
        return fail("unital", vec![x, one]);
    }
    if let Some(x) = par::find_first_index(order, |x| (0..order).all(|y| add(x, y) != zero)) {
        return fail("add-inverse", vec![x]);
    }
    if let Some(x) =
        par::find_first_index(order, |x| (0..order).any(|y| add(x, y) != add(y, x)))
    {
        let y = (0..order).find(|&y| add(x, y) != add(y, x)).unwrap();
        return fail("add-commutative", vec![x, y]);
    }
    if let Some(x) = par::find_first_index(order, |x| {
        (0..order).any(|y| (0..order).any(|z| add(add(x, y), z) != add(x, add(y, z))))
    }) {
        for y in 0..order {
            for z in 0..order {
                if add(add(x, y), z) != add(x, add(y, z)) {
                    return fail("add-associative", vec![x, y, z]);
                }
            }
        }
    }
    if let Some(x) =
        par::find_first_index(order, |x| (0..order).any(|y| mul(x, y) != mul(y, x)))
    {
        let y = (0..order).find(|&y| mul(x, y) != mul(y, x)).unwrap();
        return fail("mul-commutative", vec![x, y]);
    }
    if let Some(x) = par::find_first_index(order, |x| {
        (0..order).any(|y| (0..order).any(|z| mul(mul(x, y), z) != mul(x, mul(y, z))))
    }) {
        for y in 0..order {
            for z in 0..order {
                if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                    return fail("mul-associative", vec![x, y, z]);
                }
            }
        }
    }
    if let Some(x) = par::find_first_index(order, |x| {
        (0..order).any(|y| (0..order).any(|z| mul(x, add(y, z)) != add(mul(x, y), mul(x, z))))
    }) {
        for y in 0..order {
            for z in 0..order {
                if mul(x, add(y, z)) != add(mul(x, y), mul(x, z)) {
                    return fail("distributive", vec![x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// The residue ring `Z/nZ`.
pub fn make_zmod(n: u64) -> Result<Arc<FiniteRing>> {
    if n < 2 {
        return Err(Error::InvalidOrder(n as usize));
    }
    limits::check_order(n as usize)?;
    let order = n as usize;
    let add = par::map_indices(order, |a| {
        (0..order)
            .map(|b| ((a as u64 + b as u64) % n) as u32)
            .collect::<Vec<_>>()
    })
    .concat();
    let mul = par::map_indices(order, |a| {
        (0..order)
            .map(|b| ((a as u64 * b as u64) % n) as u32)
            .collect::<Vec<_>>()
    })
    .concat();
    let names = (0..order).map(|i| i.to_string()).collect();
    FiniteRing::from_parts(
        format!("zmod({n})"),
        Backend::Residue { modulus: n },
        names,
        add,
        mul,
        0,
        1,
    )
}

/// A ring given by raw tables. The tables are fully verified; non-rings are
/// rejected with the failing axiom and a witness.
pub fn make_table_ring(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    zero: usize,
    one: usize,
) -> Result<Arc<FiniteRing>> {
    let order = add.len();
    if order < 2 {
        return Err(Error::InvalidOrder(order));
    }
    limits::check_order(order)?;
    let valid = |t: &[Vec<usize>]| {
        t.len() == order && t.iter().all(|row| row.len() == order && row.iter().all(|&x| x < order))
    };
    if !valid(add) || !valid(mul) || zero >= order || one >= order {
        return Err(Error::MalformedTable);
    }
    verify_axioms_raw(order, zero, one, |a, b| add[a][b], |a, b| mul[a][b])
        .map_err(Error::Axiom)?;
    let flat = |t: &[Vec<usize>]| {
        t.iter()
            .flat_map(|row| row.iter().map(|&x| x as u32))
            .collect::<Vec<u32>>()
    };
    let names = (0..order).map(|i| format!("e{i}")).collect();
    FiniteRing::from_parts(
        format!("table(order {order})"),
        Backend::Table,
        names,
        flat(add),
        flat(mul),
        zero,
        one,
    )
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// --- dense polynomial arithmetic over Z/pZ, little-endian coefficients ---

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo monic `f`, coefficients mod `p`.
fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut rem: Vec<u64> = a.to_vec();
    poly_trim(&mut rem);
    let df = f.len() - 1;
    while rem.len() > df {
        let lead = rem[rem.len() - 1];
        let shift = rem.len() - 1 - df;
        for k in 0..=df {
            let idx = shift + k;
            rem[idx] = (rem[idx] + p - (lead * f[k]) % p) % p;
        }
        poly_trim(&mut rem);
    }
    rem
}

fn poly_name(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}t^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn index_to_coeffs(mut i: usize, p: u64, deg: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; deg];
    for c in coeffs.iter_mut() {
        *c = (i % p as usize) as u64;
        i /= p as usize;
    }
    coeffs
}

fn coeffs_to_index(coeffs: &[u64], p: u64, deg: usize) -> usize {
    let mut idx = 0usize;
    for k in (0..deg).rev() {
        let c = coeffs.get(k).copied().unwrap_or(0);
        idx = idx * p as usize + c as usize;
    }
    idx
}

/// `(Z/pZ)[t] / (f)` for a monic `f` given little-endian (`f[i]` is the
/// coefficient of `t^i`). Degree-`k` modulus yields a ring of order `p^k`.
pub fn make_poly_quotient(p: u64, f: &[u64]) -> Result<Arc<FiniteRing>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut f: Vec<u64> = f.iter().map(|&c| c % p).collect();
    poly_trim(&mut f);
    if f.len() < 2 || f[f.len() - 1] != 1 {
        return Err(Error::BadModulusPoly);
    }
    let deg = f.len() - 1;
    let order = (p as usize)
        .checked_pow(deg as u32)
        .ok_or(Error::OrderBound {
            requested: usize::MAX,
            max: limits::max_order(),
        })?;
    limits::check_order(order)?;

    let add = par::map_indices(order, |a| {
        let ca = index_to_coeffs(a, p, deg);
        (0..order)
            .map(|b| {
                let cb = index_to_coeffs(b, p, deg);
                let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                coeffs_to_index(&sum, p, deg) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let mul = par::map_indices(order, |a| {
        let ca = index_to_coeffs(a, p, deg);
        (0..order)
            .map(|b| {
                let cb = index_to_coeffs(b, p, deg);
                let prod = poly_rem(&poly_mul_mod_p(&ca, &cb, p), &f, p);
                coeffs_to_index(&prod, p, deg) as u32
            })
            .collect::<Vec<_>>()
    })
    .concat();
    let names = (0..order)
        .map(|i| poly_name(&index_to_coeffs(i, p, deg)))
        .collect();
    FiniteRing::from_parts(
        format!("polyquot({p}, {})", poly_name(&f)),
        Backend::PolyQuotient { p, modulus: f },
        names,
        add,
        mul,
        0,
        1,
    )
}

/// The field `GF(p^k)`, using the lexicographically first monic irreducible
/// of degree `k` so the table is deterministic.
pub fn make_gf(p: u64, k: u32) -> Result<Arc<FiniteRing>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::BadModulusPoly);
    }
    if k == 1 {
        let ring = make_zmod(p)?;
        return Ok(ring);
    }
    let deg = k as usize;
    let count = (p as usize)
        .checked_pow(k)
        .ok_or(Error::NoIrreducible { p, k })?;
    limits::check_order(count)?;
    // Candidates are monic: enumerate the k lower coefficients in base p.
    for lo in 0..count {
        let mut f = index_to_coeffs(lo, p, deg);
        f.push(1);
        if is_irreducible(&f, p) {
            let ring = make_poly_quotient(p, &f)?;
            // Re-describe: the polyquot desc is accurate but gf(p^k) reads better.
            let mut names = Vec::with_capacity(ring.order());
            for i in 0..ring.order() {
                names.push(ring.element_name(i).to_string());
            }
            return FiniteRing::from_parts(
                format!("gf({p}^{k})"),
                ring.backend().clone(),
                names,
                ring.add.clone(),
                ring.mul.clone(),
                ring.zero(),
                ring.one(),
            );
        }
    }
    Err(Error::NoIrreducible { p, k })
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if f[0] == 0 {
        return deg == 1;
    }
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for lo in 0..count {
            let mut g = index_to_coeffs(lo, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_smallest() {
        let r = make_zmod(2).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.one(), 1);
        assert!(r.verify_ring_axioms().is_ok());
    }

    #[test]
    fn zmod_rejects_small_orders() {
        assert!(matches!(make_zmod(1), Err(Error::InvalidOrder(1))));
        assert!(matches!(make_zmod(0), Err(Error::InvalidOrder(0))));
    }

    #[test]
    fn zmod12_residue_arithmetic() {
        let r = make_zmod(12).unwrap();
        assert_eq!(r.add(8, 8), 4);
        assert_eq!(r.mul(8, 8), 4);
        assert_eq!(r.neg(5), 7);
    }

    #[test]
    fn zmod4_units() {
        let r = make_zmod(4).unwrap();
        assert_eq!(r.units(), vec![1, 3]);
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn zmod_units_match_gcd_oracle() {
        for n in 2..=64u64 {
            let r = make_zmod(n).unwrap();
            let expected: Vec<usize> = (0..n).filter(|&i| gcd(i, n) == 1).map(|i| i as usize).collect();
            assert_eq!(r.units(), expected, "units of zmod({n})");
        }
    }

    #[test]
    fn absorbing_and_identity_laws_exhaustive() {
        for n in [2u64, 6, 12, 16] {
            let r = make_zmod(n).unwrap();
            for x in 0..r.order() {
                assert_eq!(r.mul(x, r.zero()), r.zero());
                assert_eq!(r.mul(x, r.one()), x);
            }
        }
    }

    #[test]
    fn table_ring_accepts_z2() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        let r = make_table_ring(&add, &mul, 0, 1).unwrap();
        assert_eq!(r.order(), 2);
    }

    #[test]
    fn table_ring_rejects_noncommutative_cell() {
        // Corrupt one multiplication cell of Z/4Z away from the identity row.
        let n = 4usize;
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mut mul: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        mul[2][3] = 1; // 2*3 = 1 but 3*2 = 2
        match make_table_ring(&add, &mul, 0, 1) {
            Err(Error::Axiom(v)) => {
                assert_eq!(v.axiom, "mul-commutative");
                assert_eq!(v.witness, vec![2, 3]);
            }
            other => panic!("expected axiom violation, got {other:?}"),
        }
    }

    #[test]
    fn table_ring_rejects_corrupted_one() {
        // Z/4Z tables but declaring one = 2.
        let n = 4usize;
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        match make_table_ring(&add, &mul, 0, 2) {
            Err(Error::Axiom(v)) => assert_eq!(v.axiom, "unital"),
            other => panic!("expected unital violation, got {other:?}"),
        }
    }

    #[test]
    fn verify_passes_on_zmod6() {
        assert!(make_zmod(6).unwrap().verify_ring_axioms().is_ok());
    }

    #[test]
    fn gf4_every_nonzero_is_a_unit() {
        let r = make_poly_quotient(2, &[1, 1, 1]).unwrap();
        assert_eq!(r.order(), 4);
        for x in 1..4 {
            assert!(r.is_unit(x), "{} should be a unit", r.element_name(x));
        }
        assert!(r.verify_ring_axioms().is_ok());
    }

    #[test]
    fn dual_numbers_have_nilpotent_t() {
        let r = make_poly_quotient(2, &[0, 0, 1]).unwrap();
        assert_eq!(r.order(), 4);
        // index 2 encodes the coefficient vector [0,1], i.e. t
        assert_eq!(r.element_name(2), "t");
        assert_eq!(r.mul(2, 2), 0);
    }

    #[test]
    fn degree_one_quotient_is_zmod() {
        let r = make_poly_quotient(3, &[0, 1]).unwrap();
        let z3 = make_zmod(3).unwrap();
        assert_eq!(r.order(), 3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(r.add(a, b), z3.add(a, b));
                assert_eq!(r.mul(a, b), z3.mul(a, b));
            }
        }
    }

    #[test]
    fn poly_quotient_rejects_bad_input() {
        assert!(matches!(make_poly_quotient(4, &[1, 1]), Err(Error::NotPrime(4))));
        assert!(matches!(
            make_poly_quotient(2, &[1]),
            Err(Error::BadModulusPoly)
        ));
        // leading coefficient 2 reduces to 0 mod 2: not monic
        assert!(matches!(
            make_poly_quotient(2, &[1, 2]),
            Err(Error::BadModulusPoly)
        ));
    }

    #[test]
    fn gf_constructions() {
        for (p, k) in [(2u64, 2u32), (2, 3), (3, 2)] {
            let f = make_gf(p, k).unwrap();
            assert_eq!(f.order(), (p as usize).pow(k));
            for x in 1..f.order() {
                assert!(f.is_unit(x));
            }
        }
    }

    #[test]
    fn checked_element_ops() {
        let r = make_zmod(6).unwrap();
        let s = make_zmod(6).unwrap();
        let a = r.elem(2).unwrap();
        let b = s.elem(3).unwrap();
        assert!(matches!(r.elem_add(a, b), Err(Error::RingMismatch)));
        let c = r.elem(3).unwrap();
        assert_eq!(r.elem_add(a, c).unwrap().index, 5);
        assert_eq!(r.elem_mul(a, c).unwrap().index, 0);
        assert!(r.elem(6).is_err());
    }
}
