//! Verified unital ring homomorphisms.

use std::fmt;
use std::sync::Arc;

use crate::ring::{AxiomViolation, FiniteRing};
use crate::{Error, Result};

#[derive(Clone)]
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    map: Vec<u32>,
    desc: String,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingHom({})", self.desc)
    }
}

impl RingHom {
    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }
    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }
    pub fn desc(&self) -> &str {
        &self.desc
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a] as usize
    }

    pub fn image(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.map.iter().map(|&x| x as usize).collect();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.order()
    }

    pub fn kernel_elements(&self) -> Vec<usize> {
        (0..self.source.order())
            .filter(|&a| self.apply(a) == self.target.zero())
            .collect()
    }
}

/// Verify and wrap an element map `A -> B`. All four homomorphism conditions
/// are checked exhaustively; the first failure is reported with a witness.
pub fn make_hom(
    source: &Arc<FiniteRing>,
    target: &Arc<FiniteRing>,
    map: &[usize],
    desc: impl Into<String>,
) -> Result<RingHom> {
    if map.len() != source.order() {
        return Err(Error::MalformedTable);
    }
    if let Some(&bad) = map.iter().find(|&&x| x >= target.order()) {
        return Err(Error::BadIndex {
            index: bad,
            order: target.order(),
        });
    }
    let violation = |axiom, witness| Err(Error::Axiom(AxiomViolation { axiom, witness }));
    if map[source.zero()] != target.zero() {
        return violation("hom-zero", vec![source.zero()]);
    }
    if map[source.one()] != target.one() {
        return violation("hom-unital", vec![source.one()]);
    }
    for x in 0..source.order() {
        for y in 0..source.order() {
            if map[source.add(x, y)] != target.add(map[x], map[y]) {
                return violation("hom-additive", vec![x, y]);
            }
            if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                return violation("hom-multiplicative", vec![x, y]);
            }
        }
    }
    Ok(RingHom {
        source: Arc::clone(source),
        target: Arc::clone(target),
        map: map.iter().map(|&x| x as u32).collect(),
        desc: desc.into(),
    })
}

pub fn identity_hom(ring: &Arc<FiniteRing>) -> RingHom {
    RingHom {
        source: Arc::clone(ring),
        target: Arc::clone(ring),
        map: (0..ring.order() as u32).collect(),
        desc: format!("id({})", ring.desc()),
    }
}

/// The reduction `Z/mZ -> Z/nZ` for `n | m`.
pub fn reduction_hom(source: &Arc<FiniteRing>, target: &Arc<FiniteRing>) -> Result<RingHom> {
    use crate::ring::Backend;
    let (m, n) = match (source.backend(), target.backend()) {
        (Backend::Residue { modulus: m }, Backend::Residue { modulus: n }) => (*m, *n),
        _ => {
            return Err(Error::Unsupported(
                "reduce requires residue rings on both sides".into(),
            ))
        }
    };
    if m % n != 0 {
        return Err(Error::Unsupported(format!(
            "no reduction from zmod({m}) to zmod({n}): {n} does not divide {m}"
        )));
    }
    let map: Vec<usize> = (0..m).map(|x| (x % n) as usize).collect();
    make_hom(source, target, &map, format!("reduce({m}->{n})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    #[test]
    fn reduction_is_a_hom() {
        let a = make_zmod(12).unwrap();
        let b = make_zmod(4).unwrap();
        let f = reduction_hom(&a, &b).unwrap();
        assert!(f.is_surjective());
        assert_eq!(f.apply(7), 3);
        assert_eq!(f.kernel_elements(), vec![0, 4, 8]);
    }

    #[test]
    fn identity_accepted() {
        let a = make_zmod(6).unwrap();
        let map: Vec<usize> = (0..6).collect();
        assert!(make_hom(&a, &a, &map, "id").is_ok());
    }

    #[test]
    fn one_to_zero_rejected() {
        let a = make_zmod(4).unwrap();
        let b = make_zmod(4).unwrap();
        let map = vec![0usize; 4];
        match make_hom(&a, &b, &map, "collapse") {
            Err(Error::Axiom(v)) => assert_eq!(v.axiom, "hom-unital"),
            other => panic!("expected hom-unital, got {other:?}"),
        }
    }

    #[test]
    fn image_is_a_subring() {
        let a = make_zmod(12).unwrap();
        let b = make_zmod(4).unwrap();
        let f = reduction_hom(&a, &b).unwrap();
        let img = f.image();
        for &x in &img {
            for &y in &img {
                assert!(img.contains(&b.add(x, y)));
                assert!(img.contains(&b.mul(x, y)));
            }
        }
    }
}
